#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcenter/subgroup.hpp"

namespace modcenter {

// The base rings the toolkit takes literally: Z (modulus 0) or Z/n.
struct ScalarRing {
  int64_t modulus = 0;  // 0 = Z, otherwise >= 2

  bool operator==(const ScalarRing&) const = default;
  bool is_integers() const { return modulus == 0; }
  std::string to_string() const { return modulus == 0 ? "Z" : "Z/" + std::to_string(modulus); }
};

// Finite ring presented by structure constants on an additive group:
// table[i][j] is the product g_i * g_j in additive coordinates.
class FinRing {
 public:
  FinRing(FinAbGroup additive, std::vector<std::vector<Element>> table, Element one);

  const FinAbGroup& additive() const { return additive_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const Element& one() const { return one_; }
  int64_t order() const { return additive_.order(); }

  // Bilinear extension of the generator products.
  Element mul(const Element& x, const Element& y) const;

  bool operator==(const FinRing&) const = default;

 private:
  FinAbGroup additive_;
  std::vector<std::vector<Element>> table_;
  Element one_;
};

struct RingValidation {
  bool ok = true;
  std::string report;  // first violation found, empty when ok
};

// Checks well-definedness of the table, associativity on generator triples
// and the unit law; by bilinearity that covers the whole ring.
RingValidation ring_validate(const FinRing& r);

bool ring_is_commutative(const FinRing& r);

// Elements commuting with every generator, as a subgroup of the additive
// group; always multiplicatively closed and containing one.
Subgroup ring_center(const FinRing& r);

struct CommutatorSet {
  std::vector<Element> generator_commutators;  // [g_i, g_j] over generator pairs
  Subgroup span;
};
CommutatorSet commutator_set(const FinRing& r);

FinRing scalar_ring_as_finring(int64_t n);  // throws InvalidModulus for n < 2
FinRing opposite_ring(const FinRing& r);

}  // namespace modcenter

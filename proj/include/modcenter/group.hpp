#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcenter/matrix.hpp"
#include "modcenter/snf.hpp"

namespace modcenter {

// Element of a finite abelian group: one coordinate per invariant factor,
// always reduced into [0, d_i).  Arithmetic lives on FinAbGroup so the
// element itself stays a plain value.
struct Element {
  std::vector<int64_t> coords;

  bool is_zero() const {
    for (int64_t c : coords)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const Element&) const = default;
  bool operator<(const Element& o) const { return coords < o.coords; }
};

// A finite abelian group in invariant-factor normal form: d_1 | d_2 | ...,
// every d_i >= 2.  Two groups are isomorphic iff the factor sequences are
// identical, so operator== is an isomorphism test.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group
  explicit FinAbGroup(std::vector<int64_t> canonical_factors);

  static FinAbGroup trivial() { return FinAbGroup(); }
  // Canonicalizes an arbitrary list of cyclic orders (each >= 1).
  static FinAbGroup from_orders(const std::vector<int64_t>& orders);

  const std::vector<int64_t>& invariant_factors() const { return factors_; }
  int rank() const { return int(factors_.size()); }
  int64_t order() const { return order_; }
  int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  bool operator==(const FinAbGroup&) const = default;

  Element zero() const { return Element{std::vector<int64_t>(factors_.size(), 0)}; }
  Element generator(int i) const;
  Element make(std::vector<int64_t> coords) const;  // reduces coordinates

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scalar_mul(int64_t r, const Element& a) const;
  int64_t element_order(const Element& a) const;

  // Deterministic mixed-radix indexing of the element set; coordinate 0 is
  // the least significant digit.
  Element element_at(int64_t index) const;
  int64_t index_of(const Element& a) const;

  std::string to_string() const;  // "Z/2 x Z/4", "0" for trivial

 private:
  std::vector<int64_t> factors_;
  int64_t order_ = 1;
};

// Finite presentation result: the canonical group Z^g / rowspan(relations),
// with the maps between generator coordinates and canonical coordinates.
struct Presentation {
  FinAbGroup group;
  Mat u;             // from the Smith form of relations^T
  Mat uinv;
  std::vector<int> keep;  // rows of u giving the canonical coordinates

  // Class of a generator-coordinate vector (length g).
  Element project(const std::vector<int64_t>& v) const;
  // A generator-coordinate vector mapping to canonical generator t.
  std::vector<int64_t> lift(int t) const;
};

// relations: each row is one relation over num_generators generators.
// Throws InfiniteQuotient when the cokernel has a free summand.
Presentation group_from_presentation(const Mat& relations, int num_generators);

// Invariant-factor chain of the direct sum of the given cyclic orders,
// without materializing the group (the total order may be astronomically
// large, e.g. for End groups of big direct sums).
std::vector<int64_t> canonical_factors_of(const std::vector<int64_t>& orders);

// All abelian groups of the exact order m / of order <= n, deterministically
// ordered (by order, then lexicographically by factor sequence).
std::vector<FinAbGroup> abelian_groups_of_order(int64_t m);
std::vector<FinAbGroup> abelian_groups_up_to(int64_t n);

}  // namespace modcenter

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "modcenter/hom.hpp"

namespace modcenter {

// Subgroup of a finite abelian group.  Canonical data (an abstract group B
// in invariant-factor form plus an injective inclusion B -> ambient) is
// computed at construction; membership queries run against a cached solver.
class Subgroup {
 public:
  static Subgroup from_generators(const FinAbGroup& ambient, std::vector<Element> generators);
  static Subgroup whole(const FinAbGroup& ambient);
  static Subgroup trivial_in(const FinAbGroup& ambient);

  const FinAbGroup& ambient() const { return ambient_; }
  const std::vector<Element>& generators() const { return gens_; }
  const FinAbGroup& basis() const { return basis_; }
  const AbHom& incl() const { return *incl_; }

  int64_t order() const { return basis_.order(); }
  int64_t exponent() const { return basis_.exponent(); }
  bool is_trivial() const { return basis_.is_trivial(); }
  bool is_whole() const { return order() == ambient_.order(); }

  bool contains(const Element& x) const;
  bool contains(const Subgroup& other) const;
  bool equals(const Subgroup& other) const;

  // All elements, in basis enumeration order.
  std::vector<Element> elements() const;
  // Images of the canonical basis generators in the ambient group.
  std::vector<Element> basis_images() const;

 private:
  FinAbGroup ambient_;
  std::vector<Element> gens_;
  FinAbGroup basis_;
  std::shared_ptr<AbHom> incl_;
  std::shared_ptr<LinearSolver> member_;  // cached [G | diag] factorization
  friend Subgroup subgroup_intersect_pullback(const Subgroup&, const Subgroup&);
};

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b);
// The two intersection routes; they must agree and both are exercised in
// tests.  The generic entry point switches on a 512-element threshold.
Subgroup subgroup_intersect_enumerate(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersect_pullback(const Subgroup& a, const Subgroup& b);

Subgroup kernel(const AbHom& h);  // subgroup of h.src()
Subgroup image(const AbHom& h);   // subgroup of h.dst()

Subgroup socle(const FinAbGroup& g);
struct SocleEssential {
  Subgroup socle;
  bool essential;
};
// N is essential iff it contains the socle; the definitional check is the
// brute-force oracle in tests.
SocleEssential socle_and_essential(const FinAbGroup& g, const Subgroup& n);

// ---- element-set machinery (shared by enumeration and the classifiers) ----

// Set of element indices as a bit vector.
struct BitVec {
  std::vector<uint64_t> w;

  explicit BitVec(int64_t n = 0) : w(size_t((n + 63) / 64), 0) {}
  bool get(int64_t i) const { return (w[size_t(i >> 6)] >> (i & 63)) & 1; }
  void set(int64_t i) { w[size_t(i >> 6)] |= uint64_t(1) << (i & 63); }
  void or_with(const BitVec& o) {
    for (size_t t = 0; t < w.size(); ++t) w[t] |= o.w[t];
  }
  int64_t count() const;
  bool operator==(const BitVec&) const = default;
};

struct BitVecHash {
  size_t operator()(const BitVec& b) const {
    size_t h = b.w.size();
    for (uint64_t x : b.w) h ^= size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Index arithmetic for one group; builds the full addition table when the
// group is small enough for that to pay off.
class GroupTable {
 public:
  explicit GroupTable(const FinAbGroup& g);

  const FinAbGroup& group() const { return g_; }
  int64_t size() const { return n_; }
  int64_t add(int64_t x, int64_t y) const;
  int64_t neg(int64_t x) const;

  // dst |= { e + x : e in src }
  void translate_into(BitVec& dst, const BitVec& src, int64_t x) const;
  // Closure of a subgroup set plus one element.
  BitVec extend_subgroup(const BitVec& sub, int64_t x) const;
  // Closure of an arbitrary list of generators (starting from 0).
  BitVec span(const std::vector<int64_t>& gens) const;

 private:
  FinAbGroup g_;
  int64_t n_;
  std::vector<int32_t> add_tab_;  // empty when n_ too large
};

// Subgroup in seed form: the greedy-minimal generating chain plus order.
struct SubgroupSeed {
  std::vector<int64_t> gen_indices;
  int64_t order;
};

// Every subgroup exactly once, deterministically ordered by (order, chain).
// The bit vectors align with the seeds.
struct SubgroupEnum {
  std::shared_ptr<GroupTable> table;
  std::vector<SubgroupSeed> seeds;
  std::vector<BitVec> sets;
};
SubgroupEnum enumerate_subgroup_seeds(const FinAbGroup& g, int64_t order_bound = 4096);

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, int64_t order_bound = 4096);
Subgroup subgroup_from_seed(const FinAbGroup& g, const SubgroupSeed& seed);

}  // namespace modcenter

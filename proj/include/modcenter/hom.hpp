#pragma once

#include <cstdint>
#include <vector>

#include "modcenter/group.hpp"

namespace modcenter {

// Additive homomorphism between finite abelian groups, stored as the matrix
// whose column j gives the image of source generator j in destination
// coordinates.  Entries are kept reduced modulo the destination factors and
// well-definedness (each source relation maps to zero) is enforced at
// construction.
class AbHom {
 public:
  AbHom(FinAbGroup src, FinAbGroup dst, Mat entries);

  static AbHom identity(const FinAbGroup& g);
  static AbHom zero(const FinAbGroup& src, const FinAbGroup& dst);
  static AbHom scalar(const FinAbGroup& g, int64_t r);  // multiplication by r

  const FinAbGroup& src() const { return src_; }
  const FinAbGroup& dst() const { return dst_; }
  const Mat& matrix() const { return m_; }

  Element apply(const Element& x) const;
  AbHom compose(const AbHom& inner) const;  // (*this) o inner
  AbHom add(const AbHom& o) const;
  AbHom sub(const AbHom& o) const;
  AbHom negate() const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const AbHom&) const = default;

  // Image of every element by index; |src| entries.
  std::vector<int32_t> index_table() const;

 private:
  FinAbGroup src_, dst_;
  Mat m_;
};

// Direct sum with its canonical injections and projections.
struct DirectSum {
  FinAbGroup group;
  std::vector<AbHom> injections;   // part i -> group
  std::vector<AbHom> projections;  // group -> part i
};
DirectSum direct_sum_group(const std::vector<FinAbGroup>& parts);

// Hom(A, B) as an abstract group plus concrete basis homs, one per cyclic
// summand Z/gcd(d_j, e_i).  The coordinate map from coefficient vectors
// (aligned with `basis`) to actual homs is additive.
struct HomGroup {
  FinAbGroup src, dst;
  FinAbGroup group;  // canonical form of the summand orders
  std::vector<AbHom> basis;
  std::vector<int64_t> basis_orders;

  AbHom from_coeffs(const std::vector<int64_t>& c) const;
};
HomGroup hom_group(const FinAbGroup& a, const FinAbGroup& b);

// Basis homs and their cyclic orders without materializing the hom group;
// |Hom| can exceed any machine integer for large direct sums.
struct HomBasis {
  std::vector<AbHom> basis;
  std::vector<int64_t> orders;
};
HomBasis hom_basis(const FinAbGroup& a, const FinAbGroup& b);

// The entry group of Hom(A, B): one coordinate per matrix entry (i, j) with
// modulus e_i, flattened row-major.  This is a canonical FinAbGroup, and
// hom sets compare as subgroups inside it.
FinAbGroup hom_entry_group(const FinAbGroup& a, const FinAbGroup& b);
Element hom_flatten(const AbHom& h);
AbHom hom_unflatten(const FinAbGroup& a, const FinAbGroup& b, const Element& e);

}  // namespace modcenter

#include "modcenter/ring.hpp"

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

FinRing::FinRing(FinAbGroup additive, std::vector<std::vector<Element>> table, Element one)
    : additive_(std::move(additive)), table_(std::move(table)), one_(std::move(one)) {
  const int k = additive_.rank();
  if (int(table_.size()) != k) throw ShapeMismatch("multiplication table has wrong height");
  for (auto& row : table_) {
    if (int(row.size()) != k) throw ShapeMismatch("multiplication table has wrong width");
    for (auto& e : row)
      if (int(e.coords.size()) != k) throw ShapeMismatch("table entry has wrong coordinate count");
  }
  if (int(one_.coords.size()) != k) throw ShapeMismatch("unit has wrong coordinate count");
}

Element FinRing::mul(const Element& x, const Element& y) const {
  const int k = additive_.rank();
  Element acc = additive_.zero();
  for (int i = 0; i < k; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (y.coords[j] == 0) continue;
      int64_t c = checked_mul(x.coords[i], y.coords[j]);
      acc = additive_.add(acc, additive_.scalar_mul(c, table_[i][j]));
    }
  }
  return acc;
}

RingValidation ring_validate(const FinRing& r) {
  const FinAbGroup& a = r.additive();
  const int k = a.rank();
  const auto& d = a.invariant_factors();

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element& p = r.table()[i][j];
      if (!a.scalar_mul(d[i], p).is_zero() || !a.scalar_mul(d[j], p).is_zero())
        return {false, "bilinearity not well defined at generator pair (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")"};
    }

  for (int i = 0; i < k; ++i) {
    Element gi = a.generator(i);
    if (r.mul(r.one(), gi) != gi || r.mul(gi, r.one()) != gi)
      return {false, "unit law fails at generator " + std::to_string(i)};
  }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        Element left = r.mul(r.table()[i][j], a.generator(l));
        Element right = r.mul(a.generator(i), r.table()[j][l]);
        if (left != right)
          return {false, "associativity fails at triple (" + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(l) + ")"};
      }
  return {};
}

bool ring_is_commutative(const FinRing& r) {
  const int k = r.additive().rank();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (r.table()[i][j] != r.table()[j][i]) return false;
  return true;
}

Subgroup ring_center(const FinRing& r) {
  const FinAbGroup& a = r.additive();
  const int k = a.rank();
  // x in C(R) iff sum_i x_i (g_i g_j - g_j g_i) = 0 for every generator j.
  Mat rows(k * k, k);
  std::vector<int64_t> mods(size_t(k) * k, 1);
  for (int j = 0; j < k; ++j)
    for (int t = 0; t < k; ++t) {
      int row = j * k + t;
      for (int i = 0; i < k; ++i)
        rows.at(row, i) =
            mod_reduce(r.table()[i][j].coords[t] - r.table()[j][i].coords[t], a.invariant_factors()[t]);
      mods[size_t(row)] = a.invariant_factors()[t];
    }
  Mat sol = congruence_kernel(rows, mods);
  std::vector<Element> gens;
  for (int c = 0; c < sol.cols(); ++c) gens.push_back(a.make(sol.col(c)));
  return Subgroup::from_generators(a, std::move(gens));
}

CommutatorSet commutator_set(const FinRing& r) {
  const FinAbGroup& a = r.additive();
  const int k = a.rank();
  CommutatorSet out{{}, Subgroup::trivial_in(a)};
  std::vector<Element> gens;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Element c = a.sub(r.table()[i][j], r.table()[j][i]);
      out.generator_commutators.push_back(c);
      if (!c.is_zero()) gens.push_back(std::move(c));
    }
  out.span = Subgroup::from_generators(a, std::move(gens));
  return out;
}

FinRing scalar_ring_as_finring(int64_t n) {
  if (n < 2) throw InvalidModulus("scalar ring modulus must be >= 2");
  FinAbGroup a({n});
  Element one = a.generator(0);
  return FinRing(a, {{one}}, one);
}

FinRing opposite_ring(const FinRing& r) {
  const int k = r.additive().rank();
  std::vector<std::vector<Element>> t(size_t(k), std::vector<Element>(size_t(k), r.additive().zero()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[size_t(i)][size_t(j)] = r.table()[j][i];
  return FinRing(r.additive(), std::move(t), r.one());
}

}  // namespace modcenter

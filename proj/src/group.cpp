#include "modcenter/group.hpp"

#include <algorithm>
#include <map>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

FinAbGroup::FinAbGroup(std::vector<int64_t> canonical_factors) : factors_(std::move(canonical_factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw Error("invariant factor < 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error("invariant factors must form a divisibility chain");
    order_ = checked_mul(order_, factors_[i]);
  }
}

std::vector<int64_t> canonical_factors_of(const std::vector<int64_t>& orders) {
  // Bucket the prime-power components, then rebuild the chain from the top.
  std::map<int64_t, std::vector<int64_t>> by_prime;  // prime -> prime powers, desc
  for (int64_t n : orders) {
    if (n < 1) throw Error("cyclic order must be >= 1");
    for (auto& [p, e] : factorize(n)) {
      int64_t q = 1;
      for (int i = 0; i < e; ++i) q = checked_mul(q, p);
      by_prime[p].push_back(q);
    }
  }
  size_t depth = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<int64_t>());
    depth = std::max(depth, v.size());
  }
  std::vector<int64_t> factors(depth, 1);
  for (auto& [p, v] : by_prime)
    for (size_t i = 0; i < v.size(); ++i) factors[i] = checked_mul(factors[i], v[i]);
  std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
  return factors;
}

FinAbGroup FinAbGroup::from_orders(const std::vector<int64_t>& orders) {
  return FinAbGroup(canonical_factors_of(orders));
}

Element FinAbGroup::generator(int i) const {
  Element e = zero();
  e.coords[i] = 1;
  return e;
}

Element FinAbGroup::make(std::vector<int64_t> coords) const {
  if (coords.size() != factors_.size()) throw ShapeMismatch("coordinate count mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = mod_reduce(coords[i], factors_[i]);
  return Element{std::move(coords)};
}

Element FinAbGroup::add(const Element& a, const Element& b) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = mod_reduce(a.coords[i] + b.coords[i], factors_[i]);
  return r;
}

Element FinAbGroup::sub(const Element& a, const Element& b) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = mod_reduce(a.coords[i] - b.coords[i], factors_[i]);
  return r;
}

Element FinAbGroup::neg(const Element& a) const {
  Element r = zero();
  for (size_t i = 0; i < factors_.size(); ++i) r.coords[i] = mod_reduce(-a.coords[i], factors_[i]);
  return r;
}

Element FinAbGroup::scalar_mul(int64_t r, const Element& a) const {
  Element out = zero();
  for (size_t i = 0; i < factors_.size(); ++i)
    out.coords[i] = mod_reduce(checked_mul(mod_reduce(r, factors_[i]), a.coords[i]), factors_[i]);
  return out;
}

int64_t FinAbGroup::element_order(const Element& a) const {
  int64_t o = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int64_t d = factors_[i] / gcd_i64(factors_[i], a.coords[i]);
    o = lcm_i64(o, d);
  }
  return o;
}

Element FinAbGroup::element_at(int64_t index) const {
  Element e = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    e.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return e;
}

int64_t FinAbGroup::index_of(const Element& a) const {
  int64_t idx = 0;
  for (size_t i = factors_.size(); i-- > 0;) idx = idx * factors_[i] + a.coords[i];
  return idx;
}

std::string FinAbGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

Element Presentation::project(const std::vector<int64_t>& v) const {
  std::vector<int64_t> w = u.mul_vec(v);
  std::vector<int64_t> coords(keep.size());
  const auto& f = group.invariant_factors();
  for (size_t t = 0; t < keep.size(); ++t) coords[t] = mod_reduce(w[keep[t]], f[t]);
  return Element{std::move(coords)};
}

std::vector<int64_t> Presentation::lift(int t) const { return uinv.col(keep[t]); }

Presentation group_from_presentation(const Mat& relations, int num_generators) {
  if (relations.cols() != num_generators && relations.rows() > 0)
    throw ShapeMismatch("relation width does not match generator count");
  Mat rt(num_generators, relations.rows());
  for (int i = 0; i < relations.rows(); ++i)
    for (int j = 0; j < num_generators; ++j) rt.at(j, i) = relations.at(i, j);

  SmithForm f = smith_normal_form(rt);
  const int nmin = std::min(rt.rows(), rt.cols());
  Presentation p;
  std::vector<int64_t> factors;
  for (int i = 0; i < num_generators; ++i) {
    int64_t d = i < nmin ? f.d.at(i, i) : 0;
    if (d == 0)
      throw InfiniteQuotient("presentation has a free summand (rank-deficient relations)");
    if (d == 1) continue;
    p.keep.push_back(i);
    factors.push_back(d);
  }
  p.group = FinAbGroup(std::move(factors));
  p.u = std::move(f.u);
  p.uinv = std::move(f.uinv);
  return p;
}

std::vector<FinAbGroup> abelian_groups_of_order(int64_t m) {
  if (m == 1) return {FinAbGroup::trivial()};
  // One group per choice of partition for each prime-power component.
  auto fac = factorize(m);
  std::vector<std::vector<std::vector<int>>> parts;  // per prime: partitions
  for (auto& [p, e] : fac) parts.push_back(partitions_of(e));

  std::vector<FinAbGroup> out;
  std::vector<int> pick(fac.size(), 0);
  while (true) {
    size_t depth = 0;
    for (size_t i = 0; i < fac.size(); ++i)
      depth = std::max(depth, parts[i][pick[i]].size());
    std::vector<int64_t> factors(depth, 1);
    for (size_t i = 0; i < fac.size(); ++i) {
      const auto& part = parts[i][pick[i]];  // weakly decreasing exponents
      for (size_t j = 0; j < part.size(); ++j) {
        int64_t q = 1;
        for (int t = 0; t < part[j]; ++t) q = checked_mul(q, fac[i].first);
        factors[j] = checked_mul(factors[j], q);
      }
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(FinAbGroup(std::move(factors)));
    size_t i = 0;
    for (; i < fac.size(); ++i) {
      if (++pick[i] < int(parts[i].size())) break;
      pick[i] = 0;
    }
    if (i == fac.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const FinAbGroup& a, const FinAbGroup& b) {
    return a.invariant_factors() < b.invariant_factors();
  });
  return out;
}

std::vector<FinAbGroup> abelian_groups_up_to(int64_t n) {
  std::vector<FinAbGroup> out;
  for (int64_t m = 1; m <= n; ++m)
    for (auto& g : abelian_groups_of_order(m)) out.push_back(g);
  return out;
}

}  // namespace modcenter

#include "modcenter/hom.hpp"

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

AbHom::AbHom(FinAbGroup src, FinAbGroup dst, Mat entries)
    : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(entries)) {
  if (m_.rows() != dst_.rank() || m_.cols() != src_.rank())
    throw ShapeMismatch("hom matrix shape does not match groups");
  const auto& d = src_.invariant_factors();
  const auto& e = dst_.invariant_factors();
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      int64_t v = mod_reduce(m_.at(i, j), e[i]);
      if (mod_reduce(checked_mul(v, d[j]), e[i]) != 0)
        throw Error("hom not well defined: generator relation not preserved");
      m_.at(i, j) = v;
    }
}

AbHom AbHom::identity(const FinAbGroup& g) { return AbHom(g, g, Mat::identity(g.rank())); }

AbHom AbHom::zero(const FinAbGroup& src, const FinAbGroup& dst) {
  return AbHom(src, dst, Mat(dst.rank(), src.rank()));
}

AbHom AbHom::scalar(const FinAbGroup& g, int64_t r) {
  Mat m(g.rank(), g.rank());
  for (int i = 0; i < g.rank(); ++i) m.at(i, i) = mod_reduce(r, g.invariant_factors()[i]);
  return AbHom(g, g, std::move(m));
}

Element AbHom::apply(const Element& x) const {
  if (int(x.coords.size()) != src_.rank()) throw ShapeMismatch("element not in hom source");
  const auto& e = dst_.invariant_factors();
  Element y = dst_.zero();
  for (int i = 0; i < m_.rows(); ++i) {
    int64_t acc = 0;
    for (int j = 0; j < m_.cols(); ++j)
      acc = mod_reduce(acc + checked_mul(m_.at(i, j), x.coords[j]), e[i]);
    y.coords[i] = acc;
  }
  return y;
}

AbHom AbHom::compose(const AbHom& inner) const {
  if (inner.dst_ != src_) throw ShapeMismatch("compose: inner destination != outer source");
  return AbHom(inner.src_, dst_, m_.mul(inner.m_));
}

AbHom AbHom::add(const AbHom& o) const {
  if (src_ != o.src_ || dst_ != o.dst_) throw ShapeMismatch("add: hom groups differ");
  Mat m(m_.rows(), m_.cols());
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) m.at(i, j) = checked_add(m_.at(i, j), o.m_.at(i, j));
  return AbHom(src_, dst_, std::move(m));
}

AbHom AbHom::sub(const AbHom& o) const { return add(o.negate()); }

AbHom AbHom::negate() const {
  Mat m(m_.rows(), m_.cols());
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) m.at(i, j) = checked_neg(m_.at(i, j));
  return AbHom(src_, dst_, std::move(m));
}

bool AbHom::is_zero() const {
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j)
      if (m_.at(i, j) != 0) return false;
  return true;
}

bool AbHom::is_identity() const { return src_ == dst_ && m_ == Mat::identity(src_.rank()); }

std::vector<int32_t> AbHom::index_table() const {
  std::vector<int32_t> t(size_t(src_.order()));
  for (int64_t idx = 0; idx < src_.order(); ++idx)
    t[size_t(idx)] = int32_t(dst_.index_of(apply(src_.element_at(idx))));
  return t;
}

DirectSum direct_sum_group(const std::vector<FinAbGroup>& parts) {
  if (parts.empty()) throw Error("direct sum of an empty list");
  std::vector<int64_t> concat;
  std::vector<int> offsets;
  for (const auto& p : parts) {
    offsets.push_back(int(concat.size()));
    for (int64_t f : p.invariant_factors()) concat.push_back(f);
  }
  const int g = int(concat.size());
  Presentation pres = group_from_presentation(Mat::diag(concat), g);

  DirectSum out;
  out.group = pres.group;
  const int rank = out.group.rank();
  for (size_t i = 0; i < parts.size(); ++i) {
    const FinAbGroup& p = parts[i];
    Mat inj(rank, p.rank());
    for (int t = 0; t < p.rank(); ++t) {
      std::vector<int64_t> v(g, 0);
      v[offsets[i] + t] = 1;
      Element img = pres.project(v);
      for (int r = 0; r < rank; ++r) inj.at(r, t) = img.coords[r];
    }
    out.injections.emplace_back(p, out.group, std::move(inj));

    Mat proj(p.rank(), rank);
    for (int u = 0; u < rank; ++u) {
      std::vector<int64_t> lifted = pres.lift(u);
      for (int t = 0; t < p.rank(); ++t)
        proj.at(t, u) = mod_reduce(lifted[offsets[i] + t], p.invariant_factors()[t]);
    }
    out.projections.emplace_back(out.group, p, std::move(proj));
  }
  return out;
}

AbHom HomGroup::from_coeffs(const std::vector<int64_t>& c) const {
  if (c.size() != basis.size()) throw ShapeMismatch("coefficient count mismatch");
  Mat m(dst.rank(), src.rank());
  for (size_t u = 0; u < basis.size(); ++u) {
    const Mat& b = basis[u].matrix();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = checked_add(m.at(i, j), checked_mul(c[u], b.at(i, j)));
  }
  return AbHom(src, dst, std::move(m));
}

HomBasis hom_basis(const FinAbGroup& a, const FinAbGroup& b) {
  const auto& d = a.invariant_factors();
  const auto& e = b.invariant_factors();
  HomBasis out;
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) {
      int64_t g = gcd_i64(e[i], d[j]);
      if (g < 2) continue;
      Mat m(b.rank(), a.rank());
      m.at(i, j) = e[i] / g;
      out.basis.emplace_back(a, b, std::move(m));
      out.orders.push_back(g);
    }
  return out;
}

HomGroup hom_group(const FinAbGroup& a, const FinAbGroup& b) {
  HomBasis hb = hom_basis(a, b);
  HomGroup out;
  out.src = a;
  out.dst = b;
  out.basis = std::move(hb.basis);
  out.basis_orders = hb.orders;
  out.group = FinAbGroup::from_orders(hb.orders);
  return out;
}

FinAbGroup hom_entry_group(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<int64_t> factors;
  for (int64_t e : b.invariant_factors())
    for (int j = 0; j < a.rank(); ++j) factors.push_back(e);
  if (a.rank() == 0) factors.clear();
  return FinAbGroup(std::move(factors));
}

Element hom_flatten(const AbHom& h) {
  std::vector<int64_t> coords;
  coords.reserve(size_t(h.matrix().rows()) * h.matrix().cols());
  for (int i = 0; i < h.matrix().rows(); ++i)
    for (int j = 0; j < h.matrix().cols(); ++j) coords.push_back(h.matrix().at(i, j));
  return Element{std::move(coords)};
}

AbHom hom_unflatten(const FinAbGroup& a, const FinAbGroup& b, const Element& e) {
  Mat m(b.rank(), a.rank());
  if (int64_t(e.coords.size()) != int64_t(b.rank()) * a.rank())
    throw ShapeMismatch("flattened hom has wrong length");
  size_t t = 0;
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m.at(i, j) = e.coords[t++];
  return AbHom(a, b, std::move(m));
}

}  // namespace modcenter

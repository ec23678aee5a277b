#include "modcenter/module.hpp"

#include <algorithm>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

std::vector<AbHom> ModuleAction::action_generators() const {
  if (is_scalar()) return {AbHom::identity(carrier)};
  return finring().rep;
}

bool ModuleAction::same_ring(const ModuleAction& o) const {
  if (is_scalar() != o.is_scalar()) return false;
  if (is_scalar()) return scalar() == o.scalar();
  return finring().ring == o.finring().ring;
}

std::string ModuleAction::ring_name() const {
  if (is_scalar()) return scalar().to_string();
  return "ring of order " + std::to_string(finring().ring.order());
}

ModuleAction scalar_action(const ScalarRing& r, const FinAbGroup& carrier) {
  if (r.modulus < 0 || r.modulus == 1) throw InvalidModulus("scalar modulus must be 0 or >= 2");
  if (r.modulus != 0 && r.modulus % carrier.exponent() != 0)
    throw Error("Z/" + std::to_string(r.modulus) + " does not act on a module of exponent " +
                std::to_string(carrier.exponent()));
  return ModuleAction{r, carrier};
}

ModuleAction ring_self_action(const FinRing& r) {
  // Right multiplications r_d(x) = x * g_d as action homs on the additive group.
  const FinAbGroup& a = r.additive();
  std::vector<AbHom> rep;
  for (int d = 0; d < a.rank(); ++d) {
    Mat m(a.rank(), a.rank());
    for (int j = 0; j < a.rank(); ++j) {
      Element prod = r.table()[j][d];  // g_j * g_d
      for (int i = 0; i < a.rank(); ++i) m.at(i, j) = prod.coords[i];
    }
    rep.emplace_back(a, a, std::move(m));
  }
  return ModuleAction{FinRingAction{r, std::move(rep)}, a};
}

ActionValidation validate_action(const ModuleAction& a) {
  if (a.is_scalar()) {
    const ScalarRing& r = a.scalar();
    if (r.modulus < 0 || r.modulus == 1) return {false, "invalid scalar modulus"};
    if (r.modulus != 0 && r.modulus % a.carrier.exponent() != 0)
      return {false, "carrier exponent does not divide the scalar modulus"};
    return {};
  }
  const FinRingAction& fa = a.finring();
  const FinAbGroup& rg = fa.ring.additive();
  if (int(fa.rep.size()) != rg.rank()) return {false, "one action hom per ring generator required"};
  for (const AbHom& h : fa.rep)
    if (h.src() != a.carrier || h.dst() != a.carrier)
      return {false, "action hom does not act on the carrier"};

  // Additivity in the ring variable: d_u * act(g_u) must vanish.
  for (int u = 0; u < rg.rank(); ++u) {
    const Mat& m = fa.rep[u].matrix();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (mod_reduce(checked_mul(rg.invariant_factors()[u], m.at(i, j)),
                       a.carrier.invariant_factors()[i]) != 0)
          return {false, "action not additive in the ring variable at generator " +
                             std::to_string(u)};
  }

  // The unit acts as the identity.
  AbHom unit_act = AbHom::zero(a.carrier, a.carrier);
  for (int u = 0; u < rg.rank(); ++u) {
    Mat m = fa.rep[u].matrix();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = checked_mul(m.at(i, j), fa.ring.one().coords[u]);
    unit_act = unit_act.add(AbHom(a.carrier, a.carrier, std::move(m)));
  }
  if (!unit_act.is_identity()) return {false, "unit does not act as the identity"};

  // Right-module compatibility on generator pairs: act(g_u) then act(g_v)
  // equals act(g_u * g_v).
  for (int u = 0; u < rg.rank(); ++u)
    for (int v = 0; v < rg.rank(); ++v) {
      Element prod = fa.ring.table()[u][v];
      AbHom expect = AbHom::zero(a.carrier, a.carrier);
      for (int w = 0; w < rg.rank(); ++w) {
        if (prod.coords[w] == 0) continue;
        Mat m = fa.rep[w].matrix();
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) m.at(i, j) = checked_mul(m.at(i, j), prod.coords[w]);
        expect = expect.add(AbHom(a.carrier, a.carrier, std::move(m)));
      }
      if (fa.rep[v].compose(fa.rep[u]) != expect)
        return {false, "action incompatible with ring multiplication at pair (" +
                           std::to_string(u) + ", " + std::to_string(v) + ")"};
    }
  return {};
}

namespace {

// Row block expressing "F is a well-defined endomorphism matrix and commutes
// with every action hom", over unknowns x_(i,t) = F(i,t) (row-major).
struct CommutantSystem {
  Mat rows;
  std::vector<int64_t> mods;
};

CommutantSystem commutant_system(const FinAbGroup& src, const FinAbGroup& dst,
                                 const std::vector<AbHom>& src_action,
                                 const std::vector<AbHom>& dst_action) {
  const int ks = src.rank(), kd = dst.rank();
  const auto& d = src.invariant_factors();
  const auto& e = dst.invariant_factors();
  const int n = kd * ks;
  auto idx = [&](int i, int t) { return i * ks + t; };

  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> mods;

  // Well-definedness: d_t * x_(i,t) == 0 (mod e_i); skipped when vacuous.
  for (int i = 0; i < kd; ++i)
    for (int t = 0; t < ks; ++t) {
      if (d[t] % e[i] == 0) continue;
      std::vector<int64_t> r(size_t(n), 0);
      r[size_t(idx(i, t))] = d[t];
      rows.push_back(std::move(r));
      mods.push_back(e[i]);
    }

  // Intertwining: F. A_src - A_dst . F == 0 per action generator.
  for (size_t g = 0; g < src_action.size(); ++g) {
    const Mat& as = src_action[g].matrix();
    const Mat& ad = dst_action[g].matrix();
    for (int i = 0; i < kd; ++i)
      for (int t = 0; t < ks; ++t) {
        std::vector<int64_t> r(size_t(n), 0);
        for (int s = 0; s < ks; ++s) r[size_t(idx(i, s))] = checked_add(r[size_t(idx(i, s))], as.at(s, t));
        for (int s = 0; s < kd; ++s)
          r[size_t(idx(s, t))] = checked_sub(r[size_t(idx(s, t))], ad.at(i, s));
        bool nonzero = false;
        for (int64_t v : r)
          if (mod_reduce(v, e[i]) != 0) {
            nonzero = true;
            break;
          }
        if (!nonzero) continue;
        rows.push_back(std::move(r));
        mods.push_back(e[i]);
      }
  }

  CommutantSystem sys;
  sys.rows = Mat(int(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) sys.rows.at(int(r), c) = rows[r][c];
  sys.mods = std::move(mods);
  return sys;
}

// Entry-wise moduli of a flattened hom matrix (row-major): e_i per row.
std::vector<int64_t> entry_mods(const FinAbGroup& src, const FinAbGroup& dst) {
  std::vector<int64_t> mods;
  for (int64_t e : dst.invariant_factors())
    for (int t = 0; t < src.rank(); ++t) mods.push_back(e);
  return mods;
}

struct SolvedHomSpace {
  FinAbGroup group;
  std::vector<AbHom> basis;
  Mat sol_basis;
  std::shared_ptr<LinearSolver> express;
  std::shared_ptr<Presentation> pres;
};

SolvedHomSpace solve_hom_space(const FinAbGroup& src, const FinAbGroup& dst,
                               const std::vector<AbHom>& src_action,
                               const std::vector<AbHom>& dst_action, const Bounds& bounds) {
  const int n = dst.rank() * src.rank();
  CommutantSystem sys = commutant_system(src, dst, src_action, dst_action);
  Mat lattice = congruence_kernel(sys.rows, sys.mods);

  // Present the solution group: lattice columns modulo the entry moduli.
  std::vector<int64_t> emods = entry_mods(src, dst);
  Mat lat_rows = lattice;  // n x s, rows carry entry moduli
  Mat rel = congruence_kernel(lat_rows, emods);
  Mat relations(rel.cols(), lattice.cols());
  for (int r = 0; r < rel.cols(); ++r)
    for (int j = 0; j < lattice.cols(); ++j) relations.at(r, j) = rel.at(j, r);
  auto pres = std::make_shared<Presentation>(group_from_presentation(relations, lattice.cols()));

  if (pres->group.rank() > bounds.max_end_rank)
    throw BoundExceeded("solution space rank exceeds bound", pres->group.rank());

  SolvedHomSpace out;
  out.group = pres->group;
  out.sol_basis = lattice;
  out.pres = pres;
  for (int t = 0; t < out.group.rank(); ++t) {
    std::vector<int64_t> v = lattice.mul_vec(pres->lift(t));
    Mat m(dst.rank(), src.rank());
    size_t c = 0;
    for (int i = 0; i < dst.rank(); ++i)
      for (int j = 0; j < src.rank(); ++j) m.at(i, j) = v[c++];
    out.basis.emplace_back(src, dst, std::move(m));
  }

  // x = sol_basis * c + diag(emods) * y solved for (c, y) per target hom.
  Mat diag(n, n);
  for (int i = 0; i < n; ++i) diag.at(i, i) = emods[size_t(i)];
  out.express = std::make_shared<LinearSolver>(Mat::hstack(lattice, diag), lattice.cols());
  return out;
}

}  // namespace

std::optional<Element> EndRingResult::express(const AbHom& h) const {
  if (h.src() != carrier_ || h.dst() != carrier_) throw CarrierMismatch("hom not on the carrier");
  auto c = express_->solve(hom_flatten(h).coords);
  if (!c) return std::nullopt;
  return pres_->project(*c);
}

AbHom EndRingResult::materialize(const Element& e) const {
  AbHom acc = AbHom::zero(carrier_, carrier_);
  for (size_t u = 0; u < rep_.size(); ++u) {
    if (e.coords[u] == 0) continue;
    Mat m = rep_[u].matrix();
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = checked_mul(m.at(i, j), e.coords[u]);
    acc = acc.add(AbHom(carrier_, carrier_, std::move(m)));
  }
  return acc;
}

ModuleAction EndRingResult::as_action() const {
  return ModuleAction{FinRingAction{*ring_, rep_}, carrier_};
}

EndRingResult end_ring(const ModuleAction& a, const Bounds& bounds) {
  if (a.carrier.order() > bounds.max_carrier)
    throw BoundExceeded("carrier order exceeds bound", a.carrier.order());

  std::vector<AbHom> act = a.action_generators();
  SolvedHomSpace space = solve_hom_space(a.carrier, a.carrier, act, act, bounds);

  EndRingResult out;
  out.carrier_ = a.carrier;
  out.rep_ = space.basis;
  out.sol_basis_ = space.sol_basis;
  out.express_ = space.express;
  out.pres_ = space.pres;

  const int rank = space.group.rank();
  auto express_or_die = [&](const AbHom& h) {
    auto c = space.express->solve(hom_flatten(h).coords);
    if (!c) throw InternalInconsistency("endomorphism does not re-express in the computed basis");
    return space.pres->project(*c);
  };

  // Product convention: g_u * g_v acts as "u then v", i.e. rep(v) o rep(u).
  std::vector<std::vector<Element>> table(size_t(rank),
                                          std::vector<Element>(size_t(rank), space.group.zero()));
  for (int u = 0; u < rank; ++u)
    for (int v = 0; v < rank; ++v)
      table[size_t(u)][size_t(v)] = express_or_die(space.basis[v].compose(space.basis[u]));
  Element one = express_or_die(AbHom::identity(a.carrier));

  out.ring_ = std::make_shared<FinRing>(space.group, std::move(table), std::move(one));
  return out;
}

std::vector<AbHom> end_additive_basis(const ModuleAction& a, const Bounds& bounds) {
  if (a.is_scalar()) {
    if (a.carrier.order() > bounds.max_carrier)
      throw BoundExceeded("carrier order exceeds bound", a.carrier.order());
    return hom_basis(a.carrier, a.carrier).basis;
  }
  return end_ring(a, bounds).rep();
}

HomModule hom_module(const ModuleAction& a, const ModuleAction& b, const Bounds& bounds) {
  if (!a.same_ring(b)) throw RingMismatch("hom between modules over different rings");
  if (a.carrier.order() > bounds.max_carrier || b.carrier.order() > bounds.max_carrier)
    throw BoundExceeded("carrier order exceeds bound",
                        std::max(a.carrier.order(), b.carrier.order()));
  SolvedHomSpace space =
      solve_hom_space(a.carrier, b.carrier, a.action_generators(), b.action_generators(), bounds);
  return {space.group, space.basis};
}

Annihilator annihilator_and_faithful(const ModuleAction& a) {
  Annihilator out;
  if (a.is_scalar()) {
    int64_t e = a.carrier.exponent();
    if (a.scalar().is_integers()) {
      // ann = exp(M) Z; never faithful for a finite module (exp >= 1).
      out.generator = e;
      out.description = std::to_string(e) + "Z";
      out.faithful = false;
    } else {
      int64_t n = a.scalar().modulus;
      out.generator = e % n;
      out.faithful = (e == n);
      out.description = out.faithful ? "0" : "(" + std::to_string(e) + ") in Z/" + std::to_string(n);
    }
    return out;
  }
  // Kernel of the representation map ring -> End_Z(M).
  const FinRingAction& fa = a.finring();
  const FinAbGroup& rg = fa.ring.additive();
  const int k = a.carrier.rank();
  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> mods;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int64_t> r(size_t(rg.rank()), 0);
      for (int u = 0; u < rg.rank(); ++u) r[size_t(u)] = fa.rep[u].matrix().at(i, j);
      rows.push_back(std::move(r));
      mods.push_back(a.carrier.invariant_factors()[i]);
    }
  Mat rowm(int(rows.size()), rg.rank());
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < rg.rank(); ++c) rowm.at(int(r), c) = rows[r][c];
  Mat sol = congruence_kernel(rowm, mods);
  std::vector<Element> gens;
  for (int c = 0; c < sol.cols(); ++c) gens.push_back(rg.make(sol.col(c)));
  Subgroup ann = Subgroup::from_generators(rg, std::move(gens));
  out.faithful = ann.is_trivial();
  out.generator = 0;
  out.description = out.faithful ? "0" : "subgroup of order " + std::to_string(ann.order());
  return out;
}

bool element_is_torsion(const ModuleAction& a, const Element& x) {
  if (a.is_scalar()) {
    if (a.scalar().is_integers()) return true;  // finite order over Z
    return a.carrier.element_order(x) < a.scalar().modulus;
  }
  // Kernel of the evaluation map r -> x.r must be nontrivial.
  const FinRingAction& fa = a.finring();
  const FinAbGroup& rg = fa.ring.additive();
  const int k = a.carrier.rank();
  Mat rows(k, rg.rank());
  std::vector<int64_t> mods(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int u = 0; u < rg.rank(); ++u) rows.at(i, u) = fa.rep[u].apply(x).coords[i];
    mods[size_t(i)] = a.carrier.invariant_factors()[i];
  }
  Mat sol = congruence_kernel(rows, mods);
  std::vector<Element> gens;
  for (int c = 0; c < sol.cols(); ++c) gens.push_back(rg.make(sol.col(c)));
  return !Subgroup::from_generators(rg, std::move(gens)).is_trivial();
}

std::vector<Element> torsion_subset(const ModuleAction& a, const Bounds& bounds) {
  if (a.carrier.order() > bounds.max_carrier)
    throw BoundExceeded("carrier order exceeds bound", a.carrier.order());
  std::vector<Element> out;
  for (int64_t i = 0; i < a.carrier.order(); ++i) {
    Element x = a.carrier.element_at(i);
    if (element_is_torsion(a, x)) out.push_back(std::move(x));
  }
  return out;
}

Subgroup hom_span(const FinAbGroup& src, const FinAbGroup& dst, const std::vector<AbHom>& homs) {
  FinAbGroup entry = hom_entry_group(src, dst);
  std::vector<Element> gens;
  for (const AbHom& h : homs) gens.push_back(hom_flatten(h));
  return Subgroup::from_generators(entry, std::move(gens));
}

Mat hom_span_key(const FinAbGroup& src, const FinAbGroup& dst, const std::vector<AbHom>& homs) {
  const int n = dst.rank() * src.rank();
  const int64_t exp = dst.exponent();
  RowReducer red(n, exp);
  for (const AbHom& h : homs) {
    if (h.src() != src || h.dst() != dst) throw ShapeMismatch("hom outside the span's hom group");
    // Embed coordinate (i, j) of modulus e_i into Z/exp by scaling; the
    // embedding is injective, so lattice equality decides span equality.
    std::vector<int64_t> row(static_cast<size_t>(n));
    size_t t = 0;
    for (int i = 0; i < dst.rank(); ++i) {
      int64_t scale = exp / dst.invariant_factors()[i];
      for (int j = 0; j < src.rank(); ++j, ++t)
        row[t] = checked_mul(scale, h.matrix().at(i, j));
    }
    red.insert(std::move(row));
  }
  return red.rows();
}

std::optional<AbHom> restrict_through(const AbHom& incl, const AbHom& h) {
  if (h.src() != incl.dst() || h.dst() != incl.dst())
    throw ShapeMismatch("restriction expects an endomorphism of the ambient group");
  const FinAbGroup& b = incl.src();
  const FinAbGroup& m = incl.dst();
  const int kb = b.rank();
  const int k = m.rank();
  Mat rhs = h.matrix().mul(incl.matrix());
  Mat rows(k * kb, kb * kb);
  std::vector<int64_t> mods(size_t(k) * kb);
  std::vector<int64_t> target(size_t(k) * kb);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < kb; ++t) {
      int r = i * kb + t;
      for (int s = 0; s < kb; ++s) rows.at(r, s * kb + t) = incl.matrix().at(i, s);
      mods[size_t(r)] = m.invariant_factors()[i];
      target[size_t(r)] = rhs.at(i, t);
    }
  auto x = solve_congruence(rows, target, mods);
  if (!x) return std::nullopt;
  Mat sm(kb, kb);
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < kb; ++j) sm.at(i, j) = (*x)[size_t(i) * kb + j];
  return AbHom(b, b, std::move(sm));
}

bool is_balanced(const ModuleAction& a, const EndRingResult& biend) {
  if (biend.carrier() != a.carrier) throw CarrierMismatch("biendomorphism ring of another module");
  std::vector<AbHom> psi_images;
  if (a.is_scalar())
    psi_images.push_back(AbHom::scalar(a.carrier, 1));
  else
    psi_images = a.finring().rep;
  Subgroup psi_span = hom_span(a.carrier, a.carrier, psi_images);
  Subgroup t_span = hom_span(a.carrier, a.carrier, biend.rep());
  return psi_span.equals(t_span);
}

ActionSum direct_sum_action(const std::vector<ModuleAction>& parts) {
  if (parts.empty()) throw Error("direct sum of an empty list");
  for (size_t i = 1; i < parts.size(); ++i)
    if (!parts[0].same_ring(parts[i])) throw RingMismatch("direct sum across different rings");

  std::vector<FinAbGroup> carriers;
  for (const auto& p : parts) carriers.push_back(p.carrier);
  DirectSum ds = direct_sum_group(carriers);

  ActionSum out;
  out.injections = ds.injections;
  out.projections = ds.projections;
  if (parts[0].is_scalar()) {
    out.action = ModuleAction{parts[0].scalar(), ds.group};
    return out;
  }
  // Blockwise action: act(g_u) = sum_i inj_i o act_i(g_u) o proj_i.
  const FinRing& ring = parts[0].finring().ring;
  std::vector<AbHom> rep;
  for (int u = 0; u < ring.additive().rank(); ++u) {
    AbHom acc = AbHom::zero(ds.group, ds.group);
    for (size_t i = 0; i < parts.size(); ++i)
      acc = acc.add(ds.injections[i].compose(parts[i].finring().rep[u]).compose(ds.projections[i]));
    rep.push_back(std::move(acc));
  }
  out.action = ModuleAction{FinRingAction{ring, std::move(rep)}, ds.group};
  return out;
}

bool end_of_direct_sum_check(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  ActionSum sum = direct_sum_action(parts);

  // Additive comparison of End(sum) with the Hom blocks.  Orders of these
  // groups overflow machine integers for modest sums, so the comparison
  // runs on canonical invariant-factor chains instead.
  std::vector<AbHom> whole_basis;
  if (sum.action.is_scalar()) {
    HomBasis hb = hom_basis(sum.action.carrier, sum.action.carrier);
    std::vector<int64_t> merged;
    for (const auto& pi : parts)
      for (const auto& pj : parts)
        for (int64_t o : hom_basis(pi.carrier, pj.carrier).orders) merged.push_back(o);
    if (canonical_factors_of(hb.orders) != canonical_factors_of(merged)) return false;
    whole_basis = std::move(hb.basis);
  } else {
    HomModule whole = hom_module(sum.action, sum.action, bounds);
    int64_t block_product = 1;
    for (const auto& pi : parts)
      for (const auto& pj : parts)
        block_product = checked_mul(block_product, hom_module(pi, pj, bounds).group.order());
    if (whole.group.order() != block_product) return false;
    whole_basis = std::move(whole.basis);
  }

  // Block decomposition reconstructs every basis endomorphism.
  for (const AbHom& phi : whole_basis) {
    AbHom rebuilt = AbHom::zero(sum.action.carrier, sum.action.carrier);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) {
        AbHom block = sum.projections[j].compose(phi).compose(sum.injections[i]);
        rebuilt = rebuilt.add(sum.injections[j].compose(block).compose(sum.projections[i]));
      }
    if (!(rebuilt == phi)) return false;
  }
  return true;
}

}  // namespace modcenter

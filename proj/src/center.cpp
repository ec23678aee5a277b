#include "modcenter/center.hpp"

#include <unordered_set>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

namespace {

// Commutators of all basis pairs, as constraint rows over the carrier
// coordinates, normalized to a single modulus exp(M) and deduplicated.
struct CommutatorRows {
  std::vector<std::vector<int64_t>> rows;  // constraints c . m == 0 (mod exp)
  std::vector<Mat> commutators;            // the nonzero commutator matrices
};

struct VecHash {
  size_t operator()(const std::vector<int64_t>& v) const {
    size_t h = v.size();
    for (int64_t x : v) h ^= size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

CommutatorRows basis_pair_commutators(const FinAbGroup& m, const std::vector<AbHom>& basis) {
  const int k = m.rank();
  const auto& d = m.invariant_factors();
  const int64_t exp = m.exponent();
  CommutatorRows out;
  std::unordered_set<std::vector<int64_t>, VecHash> seen_rows;

  for (size_t u = 0; u < basis.size(); ++u)
    for (size_t v = u + 1; v < basis.size(); ++v) {
      AbHom c = basis[u].compose(basis[v]).sub(basis[v].compose(basis[u]));
      if (c.is_zero()) continue;
      out.commutators.push_back(c.matrix());
      for (int i = 0; i < k; ++i) {
        std::vector<int64_t> row(static_cast<size_t>(k));
        bool nonzero = false;
        int64_t scale = exp / d[i];
        for (int t = 0; t < k; ++t) {
          row[size_t(t)] = mod_reduce(checked_mul(scale, c.matrix().at(i, t)), exp);
          nonzero |= row[size_t(t)] != 0;
        }
        if (nonzero && seen_rows.insert(row).second) out.rows.push_back(std::move(row));
      }
    }
  return out;
}

Subgroup center_from_rows(const FinAbGroup& m, const std::vector<std::vector<int64_t>>& rows) {
  const int k = m.rank();
  Mat a(int(rows.size()), k);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int t = 0; t < k; ++t) a.at(int(r), t) = rows[r][t];
  std::vector<int64_t> mods(rows.size(), m.exponent());
  Mat sol = congruence_kernel(a, mods);
  std::vector<Element> gens;
  for (int c = 0; c < sol.cols(); ++c) gens.push_back(m.make(sol.col(c)));
  return Subgroup::from_generators(m, std::move(gens));
}

}  // namespace

Subgroup center_of_module(const ModuleAction& a, const Bounds& bounds) {
  std::vector<AbHom> basis = end_additive_basis(a, bounds);
  CommutatorRows cr = basis_pair_commutators(a.carrier, basis);
  return center_from_rows(a.carrier, cr.rows);
}

Subgroup commutator_kernel_of_module(const ModuleAction& a, const Bounds& bounds) {
  std::vector<AbHom> basis = end_additive_basis(a, bounds);
  Subgroup acc = Subgroup::whole(a.carrier);
  for (size_t u = 0; u < basis.size(); ++u)
    for (size_t v = u + 1; v < basis.size(); ++v) {
      AbHom c = basis[u].compose(basis[v]).sub(basis[v].compose(basis[u]));
      if (c.is_zero()) continue;
      acc = subgroup_intersect(acc, kernel(c));
      if (acc.is_trivial()) return acc;
    }
  return acc;
}

Subgroup commutator_image(const ModuleAction& a, const Bounds& bounds) {
  std::vector<AbHom> basis = end_additive_basis(a, bounds);
  CommutatorRows cr = basis_pair_commutators(a.carrier, basis);
  std::vector<Element> gens;
  std::unordered_set<std::vector<int64_t>, VecHash> seen;
  for (const Mat& c : cr.commutators)
    for (int j = 0; j < c.cols(); ++j) {
      Element g = a.carrier.make(c.col(j));
      if (!g.is_zero() && seen.insert(g.coords).second) gens.push_back(std::move(g));
    }
  return Subgroup::from_generators(a.carrier, std::move(gens));
}

bool is_endo_commutative(const ModuleAction& a, const Bounds& bounds) {
  std::vector<AbHom> basis = end_additive_basis(a, bounds);
  for (size_t u = 0; u < basis.size(); ++u)
    for (size_t v = u + 1; v < basis.size(); ++v)
      if (!(basis[u].compose(basis[v]) == basis[v].compose(basis[u]))) return false;
  return true;
}

CenterReport main_theorem_report(const ModuleAction& a, const Bounds& bounds) {
  EndRingResult s = end_ring(a, bounds);
  EndRingResult t = end_ring(s.as_action(), bounds);

  CenterReport rep{center_of_module(a, bounds),
                   commutator_kernel_of_module(a, bounds),
                   commutator_image(a, bounds)};
  rep.s_order = s.order();
  rep.t_order = t.order();

  // (1) S commutative, from the multiplication table.
  rep.endo_commutative = ring_is_commutative(s.ring());
  // (3) C(S) = S via the structure-constant center.
  Subgroup cs = ring_center(s.ring());
  rep.center_of_s_full = cs.is_whole();
  // (6) S <= T as spans inside End_Z(M).
  Subgroup s_span = hom_span(a.carrier, a.carrier, s.rep());
  Subgroup t_span = hom_span(a.carrier, a.carrier, t.rep());
  rep.s_subset_t = t_span.contains(s_span);

  // Lemma ST (2): C(S) = S n T.
  std::vector<AbHom> cs_homs;
  for (const Element& e : cs.basis_images()) cs_homs.push_back(s.materialize(e));
  Subgroup cs_span = hom_span(a.carrier, a.carrier, cs_homs);
  Subgroup meet = subgroup_intersect(s_span, t_span);
  rep.st_lemma_center = cs_span.equals(meet);
  if (!rep.st_lemma_center)
    throw EquivalenceViolation("C(S) != S n T on " + a.carrier.to_string());

  const bool c2 = rep.center.is_whole();            // C(M) = M
  const bool c4 = rep.commutator_kernel.is_whole(); // Ker {S,S} = M
  const bool c5 = rep.commutator_image.is_trivial(); // Im {S,S} = 0
  if (!rep.center.equals(rep.commutator_kernel))
    throw EquivalenceViolation("C(M) != Ker {S,S} on " + a.carrier.to_string());
  bool all = rep.endo_commutative;
  for (bool b : {c2, rep.center_of_s_full, c4, c5, rep.s_subset_t})
    if (b != all)
      throw EquivalenceViolation("six-way equivalence broken on " + a.carrier.to_string());
  return rep;
}

bool is_fully_invariant(const Subgroup& n, const ModuleAction& a, const Bounds& bounds) {
  if (n.ambient() != a.carrier) throw AmbientMismatch("submodule of a different carrier");
  for (const AbHom& s : end_additive_basis(a, bounds))
    for (const Element& g : n.basis_images())
      if (!n.contains(s.apply(g))) return false;
  return true;
}

SubmoduleCenterCheck center_of_fully_invariant_submodule_check(const Subgroup& n,
                                                               const ModuleAction& a,
                                                               const Bounds& bounds) {
  if (!is_fully_invariant(n, a, bounds))
    throw HypothesisUnmet("submodule is not fully invariant");

  const FinAbGroup& b = n.basis();
  std::vector<AbHom> s_basis = end_additive_basis(a, bounds);

  std::vector<AbHom> restricted;
  for (const AbHom& s : s_basis) {
    auto r = restrict_through(n.incl(), s);
    if (!r) throw InternalInconsistency("restriction of an endomorphism failed to solve");
    restricted.push_back(std::move(*r));
  }

  SubmoduleCenterCheck out;
  // (1) End_R(N) = S|_N as hom sets on N.
  ModuleAction induced = [&]() -> ModuleAction {
    if (a.is_scalar()) return scalar_action(a.scalar(), b);
    std::vector<AbHom> action_restricted;
    for (const AbHom& h : a.finring().rep) {
      auto r = restrict_through(n.incl(), h);
      if (!r) throw HypothesisUnmet("submodule not closed under the ring action");
      action_restricted.push_back(std::move(*r));
    }
    return ModuleAction{FinRingAction{a.finring().ring, std::move(action_restricted)}, b};
  }();
  std::vector<AbHom> end_n = end_additive_basis(induced, bounds);
  // Compared as lattice keys: the hom group of a large submodule can have an
  // order past any machine integer.
  out.restriction_is_end = hom_span_key(b, b, restricted) == hom_span_key(b, b, end_n);

  // (2) C(N) = N n C(M), both sides as subgroups of M.
  Subgroup cn = center_of_module(induced, bounds);
  std::vector<Element> cn_in_m;
  for (const Element& e : cn.basis_images()) cn_in_m.push_back(n.incl().apply(e));
  Subgroup cn_sub = Subgroup::from_generators(a.carrier, std::move(cn_in_m));
  Subgroup meet = subgroup_intersect(n, center_of_module(a, bounds));
  out.center_formula = cn_sub.equals(meet);
  return out;
}

EssentialLemmaOutcome essential_center_lemma_check(const ModuleAction& a, const Bounds& bounds) {
  Subgroup c = center_of_module(a, bounds);
  if (!socle_and_essential(a.carrier, c).essential) return EssentialLemmaOutcome::vacuous;
  Subgroup im = commutator_image(a, bounds);
  for (const Element& x : im.elements())
    if (!element_is_torsion(a, x))
      throw EquivalenceViolation("essential-center lemma violated on " + a.carrier.to_string());
  return EssentialLemmaOutcome::holds;
}

}  // namespace modcenter

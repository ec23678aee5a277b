#include "modcenter/checks.hpp"

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

namespace {

std::string fmt_pair(const Element& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.coords[i]);
  }
  return s + ")";
}

bool spans_equal(const Subgroup& a, const Subgroup& b) { return a.equals(b); }

CheckResult check_endring_valid(const CheckContext& c) {
  FinRing ring = c.s.ring();
  if (c.mutant && ring.additive().rank() > 0) {
    // Deliberate corruption for the harness self-test.
    auto table = ring.table();
    table[0][0] = ring.additive().add(table[0][0], ring.additive().generator(0));
    ring = FinRing(ring.additive(), std::move(table), ring.one());
  }
  RingValidation v = ring_validate(ring);
  if (!v.ok) return CheckResult::violation("end ring fails validation: " + v.report);
  return CheckResult::pass();
}

CheckResult check_l1(const CheckContext& c) {
  if (!is_fully_invariant(c.main_rep.center, c.action, c.bounds))
    return CheckResult::violation("C(M) is not fully invariant");
  return CheckResult::pass();
}

CheckResult check_st1(const CheckContext& c) {
  if (!c.main_rep.center.equals(c.main_rep.commutator_kernel))
    return CheckResult::violation("C(M) != Ker {S,S}");
  return CheckResult::pass();
}

CheckResult check_st2(const CheckContext& c) {
  if (!c.main_rep.st_lemma_center) return CheckResult::violation("C(S) != S n T");
  return CheckResult::pass();
}

CheckResult check_main(const CheckContext& c) {
  const CenterReport& r = c.main_rep;
  bool all = r.endo_commutative;
  bool vals[] = {r.center.is_whole(), r.center_of_s_full, r.commutator_kernel.is_whole(),
                 r.commutator_image.is_trivial(), r.s_subset_t};
  for (bool v : vals)
    if (v != all) return CheckResult::violation("six-way equivalence broken");
  return CheckResult::pass();
}

bool base_ring_commutative(const CheckContext& c) {
  return c.action.is_scalar() || ring_is_commutative(c.action.finring().ring);
}

CheckResult check_ebe(const CheckContext& c) {
  if (!base_ring_commutative(c)) return CheckResult::vacuous();
  Subgroup s_span = hom_span(c.action.carrier, c.action.carrier, c.s.rep());
  Subgroup t_span = hom_span(c.action.carrier, c.action.carrier, c.t.rep());
  bool equal = spans_equal(s_span, t_span);
  if (equal != c.main_rep.endo_commutative)
    return CheckResult::violation("End = Biend fails to match endo-commutativity");
  return CheckResult::pass();
}

CheckResult check_biend_subring(const CheckContext& c) {
  if (!base_ring_commutative(c)) return CheckResult::vacuous();
  Subgroup s_span = hom_span(c.action.carrier, c.action.carrier, c.s.rep());
  Subgroup t_span = hom_span(c.action.carrier, c.action.carrier, c.t.rep());
  if (!s_span.contains(t_span)) return CheckResult::violation("Biend not inside End");
  return CheckResult::pass();
}

CheckResult check_ess(const CheckContext& c) {
  return essential_center_lemma_check(c.action, c.bounds) == EssentialLemmaOutcome::vacuous
             ? CheckResult::vacuous()
             : CheckResult::pass();
}

CheckResult check_balanced_faithful(const CheckContext& c) {
  if (!(c.cls.balanced && c.cls.faithful)) return CheckResult::vacuous();
  // Scalar base rings are commutative, so Biend must be commutative.
  if (!ring_is_commutative(c.t.ring()))
    return CheckResult::violation("balanced faithful module with noncommutative Biend");
  return CheckResult::pass();
}

CheckResult check_generator(const CheckContext& c) {
  if (!c.cls.generator) return CheckResult::vacuous();
  if (!(c.cls.faithful && c.cls.balanced))
    return CheckResult::violation("generator not faithful and balanced");
  if (!ring_is_commutative(c.t.ring()))
    return CheckResult::violation("generator with noncommutative Biend");
  return CheckResult::pass();
}

CheckResult check_mul(const CheckContext& c) {
  if (!c.cls.multiplication) return CheckResult::vacuous();
  if (!c.main_rep.endo_commutative)
    return CheckResult::violation("multiplication module not endo-commutative");
  return CheckResult::pass();
}

CheckResult check_comul(const CheckContext& c) {
  if (!c.cls.comultiplication) return CheckResult::vacuous();
  if (!c.main_rep.endo_commutative)
    return CheckResult::violation("comultiplication module not endo-commutative");
  return CheckResult::pass();
}

CheckResult check_dissimilar(const CheckContext& c) {
  if (!c.cls.dissimilar_semisimple) return CheckResult::vacuous();
  if (!c.main_rep.endo_commutative)
    return CheckResult::violation("dissimilar semisimple module not endo-commutative");
  return CheckResult::pass();
}

CheckResult check_chsm(const CheckContext& c) {
  if (!c.cls.multiplication) return CheckResult::vacuous();
  if (submodule_lattice_comparison(c.action, c.bounds) != LatticeComparison::coincide)
    return CheckResult::violation("multiplication module with a non-fully-invariant submodule");
  return CheckResult::pass();
}

CheckResult check_srsub(const CheckContext& c) {
  if (submodule_lattice_comparison(c.action, c.bounds) == LatticeComparison::incomparable)
    return CheckResult::violation("an S-submodule is not an R-submodule");
  return CheckResult::pass();
}

CheckResult check_maj(const CheckContext& c) {
  if (!c.cls.multiplication) return CheckResult::vacuous();
  if (submodule_lattice_comparison(c.action, c.bounds) != LatticeComparison::coincide)
    return CheckResult::violation("lattices do not coincide on a multiplication module");
  return CheckResult::pass();
}

CheckResult check_l41(const CheckContext& c) {
  if (!(c.cls.multiplication && c.cls.self_generator)) return CheckResult::vacuous();
  if (!s_module_multiplication_check(c.action, c.bounds))
    return CheckResult::violation("I_X M != X on an S-submodule");
  // Corollary: both endo- and biendo-commutative.
  if (!c.main_rep.endo_commutative || !ring_is_commutative(c.t.ring()))
    return CheckResult::violation("self-generator multiplication module not (bi)endo-commutative");
  return CheckResult::pass();
}

CheckResult check_tower_theorem(const CheckContext& c) {
  const auto& flags = c.tower.commutative_flags;
  const auto& spans = c.stage_spans;
  for (size_t n = 0; n + 1 < spans.size(); ++n) {
    if (flags[n] && !spans[n + 1].contains(spans[n]))
      return CheckResult::violation("S_n commutative but not contained in S_{n+1}");
    if (n + 2 < spans.size() && flags[n] && flags[n + 1]) {
      for (size_t k = n + 1; k + 1 < spans.size(); ++k)
        if (!spans[k].equals(spans[k + 1]))
          return CheckResult::violation("tower fails to stabilize after two commutative stages");
    }
  }
  return CheckResult::pass();
}

CheckResult check_triple_commutant(const CheckContext& c) {
  const auto& spans = c.stage_spans;
  for (size_t n = 1; n + 2 < spans.size(); ++n)
    if (!spans[n].equals(spans[n + 2]))
      return CheckResult::violation("S_{n+2} != S_n for n >= 2");
  return CheckResult::pass();
}

CheckResult check_ecdim_rules(const CheckContext& c) {
  const bool endo = c.main_rep.endo_commutative;
  if ((c.ecdim_value == std::optional<int>(1)) != endo)
    return CheckResult::violation("ecdim = 1 must match endo-commutativity");
  bool le2 = c.ecdim_value && *c.ecdim_value <= 2;
  bool s_or_t = endo || ring_is_commutative(c.t.ring());
  if (le2 != s_or_t) return CheckResult::violation("ecdim <= 2 must match S or T commutative");
  if (c.action.carrier.rank() <= 1) {
    if (c.ecdim_value != std::optional<int>(1) ||
        c.tower_class.kind != TowerClassification::Kind::strongly)
      return CheckResult::violation("cyclic module must be strongly endo-commutative");
  }
  return CheckResult::pass();
}

CheckResult check_strongly(const CheckContext& c) {
  if (!(c.cls.multiplication && c.cls.self_generator)) return CheckResult::vacuous();
  if (c.tower_class.kind != TowerClassification::Kind::strongly)
    return CheckResult::violation("self-generator multiplication module not strongly endo-commutative");
  return CheckResult::pass();
}

CheckResult check_qi_ee(const CheckContext& c) {
  if (!c.action.is_scalar() || c.action.carrier.order() > c.bounds.max_extendable)
    return CheckResult::vacuous();
  bool qi = c.cls.quasi_injective;
  bool ee = c.cls.endo_extendable;
  if (qi && !ee) return CheckResult::violation("quasi-injective module not endo-extendable");
  if (ee != qi)
    return CheckResult::violation("endo-extendable and quasi-injective disagree on a finite module");
  return CheckResult::pass();
}

CheckResult check_ee_props(const CheckContext& c) {
  if (!c.action.is_scalar() || !c.cls.endo_extendable) return CheckResult::vacuous();
  for (const Subgroup& n : fully_invariant_submodules(c.action, c.bounds)) {
    SubmoduleCenterCheck r = center_of_fully_invariant_submodule_check(n, c.action, c.bounds);
    if (!r.restriction_is_end) return CheckResult::violation("End_R(N) != S|_N");
    if (!r.center_formula) return CheckResult::violation("C(N) != N n C(M)");
    if (c.main_rep.endo_commutative) {
      // Endo-commutativity passes to fully invariant submodules.
      ModuleAction induced = scalar_action(c.action.scalar(), n.basis());
      if (!is_endo_commutative(induced, c.bounds))
        return CheckResult::violation("fully invariant submodule not endo-commutative");
    }
  }
  return CheckResult::pass();
}

CheckResult check_z2z2(const CheckContext& c) {
  if (!c.action.is_scalar() || !c.action.scalar().is_integers()) return CheckResult::vacuous();
  if (c.action.carrier.invariant_factors() != std::vector<int64_t>{2, 2})
    return CheckResult::vacuous();
  const FinAbGroup& m = c.action.carrier;
  AbHom f(m, m, Mat::from_rows({{1, 0}, {0, 0}}));
  AbHom g(m, m, Mat::from_rows({{0, 1}, {1, 0}}));
  AbHom fg = f.compose(g), gf = g.compose(f);
  struct Probe {
    std::vector<int64_t> x;
    std::string fg_expect, gf_expect;
  };
  // The last pair follows from the first two by additivity.
  const Probe probes[] = {{{1, 0}, "(0,0)", "(0,1)"},
                          {{0, 1}, "(1,0)", "(0,0)"},
                          {{1, 1}, "(1,0)", "(0,1)"}};
  for (const Probe& p : probes) {
    Element x = m.make(p.x);
    if (fmt_pair(fg.apply(x)) != p.fg_expect || fmt_pair(gf.apply(x)) != p.gf_expect)
      return CheckResult::violation("counterexample values do not reproduce at " + fmt_pair(x));
  }
  if (!c.main_rep.center.is_trivial()) return CheckResult::violation("C(Z/2 + Z/2) != 0");
  return CheckResult::pass();
}

}  // namespace

CheckContext make_check_context(const ModuleAction& a, const Bounds& bounds,
                                std::vector<ModuleAction> parts, bool mutant) {
  CheckContext c;
  c.action = a;
  c.parts = std::move(parts);
  c.bounds = bounds;
  c.mutant = mutant;
  c.s = end_ring(a, bounds);
  c.t = end_ring(c.s.as_action(), bounds);
  c.tower = endo_tower(a, 6, bounds);
  for (const auto& st : c.tower.stages)
    c.stage_spans.push_back(hom_span(a.carrier, a.carrier, st.rep()));
  c.main_rep = main_theorem_report(a, bounds);
  if (a.is_scalar()) c.cls = classify(a, bounds);
  for (int n = 0; n < 3; ++n)
    if (c.tower.commutative_flags[size_t(n)]) {
      c.ecdim_value = n + 1;
      break;
    }
  const bool f1 = c.tower.commutative_flags[0];
  const bool f2 = c.tower.commutative_flags[1];
  const bool f3 = c.tower.commutative_flags[2];
  if (f1 && f2 && f3)
    c.tower_class = {TowerClassification::Kind::strongly, 1};
  else if (f2 && f3)
    c.tower_class = {TowerClassification::Kind::eventually, 2};
  else
    c.tower_class = {TowerClassification::Kind::never, 0};
  return c;
}

const std::vector<NamedCheck>& instance_checks() {
  static const std::vector<NamedCheck> checks = {
      {"endring-valid", check_endring_valid},
      {"l1-center-fully-invariant", check_l1},
      {"st1-kernel-route", check_st1},
      {"st2-center-of-end", check_st2},
      {"main-six-equivalences", check_main},
      {"ebe-end-eq-biend", check_ebe},
      {"biend-inside-end", check_biend_subring},
      {"ess-essential-center", check_ess},
      {"balanced-faithful-biend", check_balanced_faithful},
      {"generator-faithful-balanced", check_generator},
      {"mul-endo-commutative", check_mul},
      {"comul-endo-commutative", check_comul},
      {"dissimilar-endo-commutative", check_dissimilar},
      {"chsm-submodules-fully-invariant", check_chsm},
      {"srsub-lattice-containment", check_srsub},
      {"maj-lattices-coincide", check_maj},
      {"l41-s-multiplication", check_l41},
      {"tower-theorem", check_tower_theorem},
      {"triple-commutant", check_triple_commutant},
      {"ecdim-rules", check_ecdim_rules},
      {"strongly-endo-commutative", check_strongly},
      {"qi-iff-endo-extendable", check_qi_ee},
      {"endo-extendable-props", check_ee_props},
      {"z2z2-example", check_z2z2},
  };
  return checks;
}

namespace {

CheckResult sum_check_end_blocks(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  if (!end_of_direct_sum_check(parts, bounds))
    return CheckResult::violation("End of the sum does not match its Hom blocks");
  return CheckResult::pass();
}

bool cross_homs_vanish(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j)
      if (i != j && hom_module(parts[i], parts[j], bounds).group.order() != 1) return false;
  return true;
}

CheckResult sum_check_corollary(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  ActionSum sum = direct_sum_action(parts);
  // Compared as invariant-factor chains: the orders overflow for big sums.
  std::vector<int64_t> whole = canonical_factors_of(
      sum.action.is_scalar() ? hom_basis(sum.action.carrier, sum.action.carrier).orders
                             : hom_module(sum.action, sum.action, bounds).group.invariant_factors());
  std::vector<int64_t> merged;
  for (const auto& p : parts) {
    HomModule e = hom_module(p, p, bounds);
    for (int64_t f : e.group.invariant_factors()) merged.push_back(f);
  }
  bool vanish = cross_homs_vanish(parts, bounds);
  bool equal = whole == canonical_factors_of(merged);
  if (vanish != equal)
    return CheckResult::violation("End(sum) = sum of Ends fails to match vanishing cross Homs");
  return CheckResult::pass();
}

CheckResult sum_check_center(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  ActionSum sum = direct_sum_action(parts);
  Subgroup center_sum = center_of_module(sum.action, bounds);
  std::vector<Element> gens;
  for (size_t i = 0; i < parts.size(); ++i) {
    Subgroup ci = center_of_module(parts[i], bounds);
    for (const Element& e : ci.basis_images()) gens.push_back(sum.injections[i].apply(e));
  }
  Subgroup sum_of_centers = Subgroup::from_generators(sum.action.carrier, std::move(gens));
  if (!sum_of_centers.contains(center_sum))
    return CheckResult::violation("C(sum) not inside the sum of centers");
  if (cross_homs_vanish(parts, bounds) && !center_sum.equals(sum_of_centers))
    return CheckResult::violation("centers differ although cross Homs vanish");
  return CheckResult::pass();
}

CheckResult sum_check_sec(const std::vector<ModuleAction>& parts, const Bounds& bounds) {
  ActionSum sum = direct_sum_action(parts);
  bool sum_endo = is_endo_commutative(sum.action, bounds);
  bool parts_endo = true;
  for (const auto& p : parts) parts_endo &= is_endo_commutative(p, bounds);
  if (sum_endo && !parts_endo)
    return CheckResult::violation("endo-commutative sum with a non-endo-commutative part");
  if (cross_homs_vanish(parts, bounds) && parts_endo && !sum_endo)
    return CheckResult::violation("parts endo-commutative with vanishing cross Homs, sum is not");
  return CheckResult::pass();
}

}  // namespace

const std::vector<SumCheck>& direct_sum_checks() {
  static const std::vector<SumCheck> checks = {
      {"dsum-end-blocks", sum_check_end_blocks},
      {"dsum-corollary", sum_check_corollary},
      {"center-of-sums", sum_check_center},
      {"sec-corollary", sum_check_sec},
  };
  return checks;
}

}  // namespace modcenter

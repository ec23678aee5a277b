#include "modcenter/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

namespace {

void require_scalar(const ModuleAction& a, const char* op) {
  if (!a.is_scalar()) throw NonScalarRing(std::string(op) + " requires a scalar base ring");
}

// Effective cyclic scalar ring: Z acts through Z/exp(M) everywhere except
// annihilator bookkeeping.
int64_t effective_modulus(const ModuleAction& a) {
  return a.scalar().is_integers() ? a.carrier.exponent() : a.scalar().modulus;
}

std::vector<int64_t> sorted_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// |image of multiplication-by-c| and |c-torsion| over the invariant factors.
int64_t scaled_image_order(const FinAbGroup& g, int64_t c) {
  int64_t o = 1;
  for (int64_t d : g.invariant_factors()) o = checked_mul(o, d / gcd_i64(d, c));
  return o;
}

int64_t torsion_part_order(const FinAbGroup& g, int64_t e) {
  int64_t o = 1;
  for (int64_t d : g.invariant_factors()) o = checked_mul(o, gcd_i64(d, e));
  return o;
}

int64_t subgroup_exponent(const FinAbGroup& g, const SubgroupSeed& seed) {
  int64_t e = 1;
  for (int64_t idx : seed.gen_indices) e = lcm_i64(e, g.element_order(g.element_at(idx)));
  return e;
}

SubgroupEnum enumerate_for(const ModuleAction& a, const Bounds& bounds) {
  if (a.carrier.order() > bounds.max_enum)
    throw BoundExceeded("carrier too large for subgroup-quantified predicate", a.carrier.order());
  return enumerate_subgroup_seeds(a.carrier, bounds.max_enum);
}

// Conductor generator of N in the effective cyclic ring: the least c with
// M c <= N, as the lcm of per-generator conductors.
int64_t conductor_generator(const ModuleAction& a, const BitVec& set) {
  const FinAbGroup& m = a.carrier;
  const int64_t e = effective_modulus(a);
  int64_t c = 1;
  for (int i = 0; i < m.rank(); ++i) {
    Element gi = m.generator(i);
    int64_t ci = e;
    for (int64_t r : sorted_divisors(e)) {
      if (set.get(m.index_of(m.scalar_mul(r, gi)))) {
        ci = r;
        break;
      }
    }
    c = lcm_i64(c, ci);
  }
  return c;
}

BitVec join_sets(const GroupTable& tab, const BitVec& x, const BitVec& y) {
  BitVec out = x;
  for (size_t word = 0; word < y.w.size(); ++word) {
    uint64_t bits = y.w[word];
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      int64_t idx = int64_t(word) * 64 + b;
      if (!out.get(idx)) out = tab.extend_subgroup(out, idx);
    }
  }
  return out;
}

// Membership-constrained coefficient solve shared by the self-generator and
// I_X machinery: basis coefficients c with (sum c_u s_u)(M) <= X, followed by
// the span of the resulting images.
bool ideal_images_cover(const ModuleAction& a, const std::vector<AbHom>& s_basis,
                        const GroupTable& tab, const BitVec& target_set, int64_t target_order,
                        const std::vector<Element>& target_gens) {
  const FinAbGroup& m = a.carrier;
  const int k = m.rank();
  const int s = int(s_basis.size());
  const int mg = int(target_gens.size());

  // Unknowns: c (s) then y_j (mg per carrier generator j).
  const int unknowns = s + k * mg;
  Mat rows(k * k, unknowns);
  std::vector<int64_t> mods(size_t(k) * k, 1);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      int r = j * k + i;
      for (int u = 0; u < s; ++u) rows.at(r, u) = s_basis[size_t(u)].matrix().at(i, j);
      for (int t = 0; t < mg; ++t) rows.at(r, s + j * mg + t) = checked_neg(target_gens[size_t(t)].coords[i]);
      mods[size_t(r)] = m.invariant_factors()[i];
    }
  }
  Mat sol = congruence_kernel(rows, mods);

  BitVec covered(m.order());
  covered.set(0);
  for (int col = 0; col < sol.cols(); ++col) {
    std::vector<int64_t> coeff(static_cast<size_t>(s));
    for (int u = 0; u < s; ++u) coeff[size_t(u)] = sol.at(u, col);
    for (int j = 0; j < k; ++j) {
      Element img = m.zero();
      for (int u = 0; u < s; ++u) {
        if (coeff[size_t(u)] == 0) continue;
        Element part = s_basis[size_t(u)].apply(m.generator(j));
        img = m.add(img, m.scalar_mul(coeff[size_t(u)], part));
      }
      int64_t idx = m.index_of(img);
      if (!target_set.get(idx))
        throw InternalInconsistency("ideal image escaped its target submodule");
      if (!covered.get(idx)) covered = tab.extend_subgroup(covered, idx);
    }
  }
  return covered.count() == target_order;
}

}  // namespace

bool is_multiplication(const ModuleAction& a, const Bounds& bounds) {
  require_scalar(a, "is_multiplication");
  SubgroupEnum e = enumerate_for(a, bounds);
  for (size_t i = 0; i < e.seeds.size(); ++i) {
    int64_t c = conductor_generator(a, e.sets[i]);
    if (scaled_image_order(a.carrier, c) != e.seeds[i].order) return false;
  }
  return true;
}

bool is_comultiplication(const ModuleAction& a, const Bounds& bounds) {
  require_scalar(a, "is_comultiplication");
  SubgroupEnum e = enumerate_for(a, bounds);
  for (size_t i = 0; i < e.seeds.size(); ++i) {
    int64_t en = subgroup_exponent(a.carrier, e.seeds[i]);
    if (torsion_part_order(a.carrier, en) != e.seeds[i].order) return false;
  }
  return true;
}

bool is_d_module(const ModuleAction& a, const Bounds& bounds) {
  SubgroupEnum e = enumerate_for(a, bounds);
  const size_t n = e.seeds.size();
  auto subset = [](const BitVec& x, const BitVec& y) {  // x <= y
    for (size_t w = 0; w < x.w.size(); ++w)
      if (x.w[w] & ~y.w[w]) return false;
    return true;
  };
  for (size_t b = 0; b < n; ++b)
    for (size_t c = b + 1; c < n; ++c) {
      // Comparable pairs satisfy the law trivially.
      if (subset(e.sets[b], e.sets[c]) || subset(e.sets[c], e.sets[b])) continue;
      BitVec sum_bc = join_sets(*e.table, e.sets[b], e.sets[c]);
      for (size_t aa = 0; aa < n; ++aa) {
        BitVec left(a.carrier.order());
        for (size_t word = 0; word < left.w.size(); ++word)
          left.w[word] = e.sets[aa].w[word] & sum_bc.w[word];
        BitVec ab(a.carrier.order()), ac(a.carrier.order());
        for (size_t word = 0; word < ab.w.size(); ++word) {
          ab.w[word] = e.sets[aa].w[word] & e.sets[b].w[word];
          ac.w[word] = e.sets[aa].w[word] & e.sets[c].w[word];
        }
        if (!(join_sets(*e.table, ab, ac) == left)) return false;
      }
    }
  return true;
}

bool is_self_generator(const ModuleAction& a, const Bounds& bounds) {
  SubgroupEnum e = enumerate_for(a, bounds);
  std::vector<AbHom> s_basis = end_additive_basis(a, bounds);
  for (size_t i = 0; i < e.seeds.size(); ++i) {
    std::vector<Element> gens;
    for (int64_t idx : e.seeds[i].gen_indices) gens.push_back(a.carrier.element_at(idx));
    if (!ideal_images_cover(a, s_basis, *e.table, e.sets[i], e.seeds[i].order, gens)) return false;
  }
  return true;
}

TraceIdeal trace_ideal_and_generator(const ModuleAction& a, const Bounds& bounds) {
  if (!a.is_scalar() || a.scalar().is_integers())
    throw NonScalarRing("trace ideal requires a Z/n base ring");
  const int64_t n = a.scalar().modulus;
  ModuleAction regular = scalar_action(a.scalar(), FinAbGroup({n}));
  HomModule homs = hom_module(a, regular, bounds);
  int64_t g = n;
  for (const AbHom& f : homs.basis)
    for (int j = 0; j < a.carrier.rank(); ++j) g = gcd_i64(g, f.matrix().at(0, j));
  TraceIdeal out;
  out.trace_generator = g % n;
  out.generator = (g == 1);
  return out;
}

namespace {

// Fast row-wise extension test over scalar rings: F's rows are independent,
// so "F o incl = T solvable with F well defined" splits per destination row.
class ScalarExtensionTester {
 public:
  ScalarExtensionTester(const FinAbGroup& m, const AbHom& incl) : m_(m) {
    const int k = m.rank();
    const int kb = incl.src().rank();
    const auto& d = m.invariant_factors();
    for (int i = 0; i < k; ++i) {
      int64_t dv = d[i];
      if (solvers_.count(dv)) continue;
      // Row i of F ranges over r_s = w_s u_s with w_s = dv / gcd(dv, d_s).
      Mat b(kb, k);
      for (int t = 0; t < kb; ++t)
        for (int s = 0; s < k; ++s)
          b.at(t, s) = mod_reduce(checked_mul(dv / gcd_i64(dv, d[s]), incl.matrix().at(s, t)), dv);
      Mat diag(kb, kb);
      for (int t = 0; t < kb; ++t) diag.at(t, t) = dv;
      solvers_.emplace(dv, LinearSolver(Mat::hstack(b, diag), k));
    }
  }

  // T is a k x kb target matrix (rows modulo the carrier factors).
  bool extends(const Mat& t) const {
    const auto& d = m_.invariant_factors();
    for (int i = 0; i < t.rows(); ++i) {
      std::vector<int64_t> rhs(static_cast<size_t>(t.cols()));
      for (int j = 0; j < t.cols(); ++j) rhs[size_t(j)] = t.at(i, j);
      if (!solvers_.at(d[i]).solvable(rhs)) return false;
    }
    return true;
  }

 private:
  FinAbGroup m_;
  std::map<int64_t, LinearSolver> solvers_;
};

enum class ExtensionKind { endomorphisms, homs_to_m };

bool extension_predicate(const ModuleAction& a, const Bounds& bounds, ExtensionKind kind) {
  if (a.carrier.order() > bounds.max_extendable)
    throw BoundExceeded("carrier too large for extendability predicate", a.carrier.order());
  SubgroupEnum e = enumerate_subgroup_seeds(a.carrier, bounds.max_extendable);

  std::vector<AbHom> ambient_basis;
  std::vector<std::vector<int32_t>> action_tables;
  if (!a.is_scalar()) {
    ambient_basis = end_additive_basis(a, bounds);
    for (const AbHom& h : a.finring().rep) action_tables.push_back(h.index_table());
  }

  for (size_t i = 0; i < e.seeds.size(); ++i) {
    if (e.seeds[i].order == 1 || e.seeds[i].order == a.carrier.order()) continue;
    if (!a.is_scalar()) {
      bool invariant = true;
      for (const auto& tab : action_tables)
        for (int64_t g : e.seeds[i].gen_indices)
          if (!e.sets[i].get(tab[size_t(g)])) {
            invariant = false;
            break;
          }
      if (!invariant) continue;  // not a submodule
    }
    Subgroup x = subgroup_from_seed(a.carrier, e.seeds[i]);
    const FinAbGroup& b = x.basis();

    std::vector<AbHom> sources;
    if (a.is_scalar()) {
      sources = kind == ExtensionKind::endomorphisms ? hom_group(b, b).basis
                                                     : hom_group(b, a.carrier).basis;
      ScalarExtensionTester tester(a.carrier, x.incl());
      for (const AbHom& f : sources) {
        Mat target =
            kind == ExtensionKind::endomorphisms ? x.incl().compose(f).matrix() : f.matrix();
        if (!tester.extends(target)) return false;
      }
    } else {
      // General route: the restriction image of End_R(M) must cover the
      // required homs X -> M.
      std::vector<AbHom> induced_action;
      bool ok = true;
      for (const AbHom& h : a.finring().rep) {
        auto r = restrict_through(x.incl(), h);
        if (!r) {
          ok = false;
          break;
        }
        induced_action.push_back(std::move(*r));
      }
      if (!ok) continue;
      std::vector<AbHom> targets;
      if (kind == ExtensionKind::endomorphisms) {
        ModuleAction induced{FinRingAction{a.finring().ring, induced_action}, b};
        for (const AbHom& f : end_additive_basis(induced, bounds))
          targets.push_back(x.incl().compose(f));
      } else {
        ModuleAction induced{FinRingAction{a.finring().ring, induced_action}, b};
        for (const AbHom& f : hom_module(induced, a, bounds).basis) targets.push_back(f);
      }
      std::vector<AbHom> restrictions;
      for (const AbHom& g : ambient_basis) restrictions.push_back(g.compose(x.incl()));
      Subgroup image_span = hom_span(b, a.carrier, restrictions);
      for (const AbHom& t : targets)
        if (!image_span.contains(hom_flatten(t))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_endo_extendable(const ModuleAction& a, const Bounds& bounds) {
  return extension_predicate(a, bounds, ExtensionKind::endomorphisms);
}

bool is_quasi_injective(const ModuleAction& a, const Bounds& bounds) {
  return extension_predicate(a, bounds, ExtensionKind::homs_to_m);
}

bool is_dissimilar_semisimple(const ModuleAction& a) {
  require_scalar(a, "is_dissimilar_semisimple");
  if (a.carrier.is_trivial()) return true;
  return a.carrier.rank() == 1 && is_squarefree(a.carrier.exponent());
}

std::string to_string(LatticeComparison c) {
  switch (c) {
    case LatticeComparison::coincide: return "coincide";
    case LatticeComparison::r_strict: return "r_strict";
    default: return "incomparable";
  }
}

LatticeComparison submodule_lattice_comparison(const ModuleAction& a, const Bounds& bounds) {
  SubgroupEnum e = enumerate_for(a, bounds);
  std::vector<AbHom> s_basis = end_additive_basis(a, bounds);
  std::vector<std::vector<int32_t>> s_tables;
  for (const AbHom& h : s_basis) s_tables.push_back(h.index_table());
  std::vector<std::vector<int32_t>> r_tables;
  for (const AbHom& h : a.action_generators()) r_tables.push_back(h.index_table());

  auto closed_under = [&](size_t i, const std::vector<std::vector<int32_t>>& tabs) {
    for (const auto& tab : tabs)
      for (int64_t g : e.seeds[i].gen_indices)
        if (!e.sets[i].get(tab[size_t(g)])) return false;
    return true;
  };

  bool all_s_closed = true;
  for (size_t i = 0; i < e.seeds.size(); ++i) {
    bool s_closed = closed_under(i, s_tables);
    bool r_closed = closed_under(i, r_tables);
    if (s_closed && !r_closed) return LatticeComparison::incomparable;
    if (r_closed && !s_closed) all_s_closed = false;
  }
  return all_s_closed ? LatticeComparison::coincide : LatticeComparison::r_strict;
}

bool s_module_multiplication_check(const ModuleAction& a, const Bounds& bounds) {
  require_scalar(a, "s_module_multiplication_check");
  if (!is_self_generator(a, bounds) || !is_multiplication(a, bounds))
    throw HypothesisUnmet("instance is not a self-generator multiplication module");
  SubgroupEnum e = enumerate_for(a, bounds);
  std::vector<AbHom> s_basis = end_additive_basis(a, bounds);
  std::vector<std::vector<int32_t>> s_tables;
  for (const AbHom& h : s_basis) s_tables.push_back(h.index_table());

  for (size_t i = 0; i < e.seeds.size(); ++i) {
    bool s_closed = true;
    for (const auto& tab : s_tables)
      for (int64_t g : e.seeds[i].gen_indices)
        if (!e.sets[i].get(tab[size_t(g)])) {
          s_closed = false;
          break;
        }
    if (!s_closed) continue;
    std::vector<Element> gens;
    for (int64_t idx : e.seeds[i].gen_indices) gens.push_back(a.carrier.element_at(idx));
    if (!ideal_images_cover(a, s_basis, *e.table, e.sets[i], e.seeds[i].order, gens)) return false;
  }
  return true;
}

std::vector<Subgroup> fully_invariant_submodules(const ModuleAction& a, const Bounds& bounds) {
  if (a.carrier.order() > bounds.max_enum)
    throw BoundExceeded("carrier too large for fully invariant enumeration", a.carrier.order());
  GroupTable tab(a.carrier);
  std::vector<AbHom> s_basis = end_additive_basis(a, bounds);
  std::vector<std::vector<int32_t>> s_tables;
  for (const AbHom& h : s_basis) s_tables.push_back(h.index_table());
  const int64_t n = a.carrier.order();

  auto s_closure = [&](int64_t start) {
    BitVec set = tab.span({start});
    bool changed = true;
    while (changed) {
      changed = false;
      for (int64_t y = 0; y < n; ++y) {
        if (!set.get(y)) continue;
        for (const auto& t : s_tables) {
          int64_t z = t[size_t(y)];
          if (!set.get(z)) {
            set = tab.extend_subgroup(set, z);
            changed = true;
          }
        }
      }
    }
    return set;
  };

  std::vector<BitVec> closures;
  std::unordered_set<BitVec, BitVecHash> seen;
  BitVec triv(n);
  triv.set(0);
  closures.push_back(triv);
  seen.insert(triv);
  for (int64_t x = 1; x < n; ++x) {
    BitVec c = s_closure(x);
    if (seen.insert(c).second) closures.push_back(std::move(c));
  }
  // Join closure; sums of fully invariant submodules are fully invariant.
  for (size_t i = 0; i < closures.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      BitVec join = join_sets(tab, closures[i], closures[j]);
      if (seen.insert(join).second) closures.push_back(std::move(join));
    }

  std::sort(closures.begin(), closures.end(), [](const BitVec& x, const BitVec& y) {
    int64_t cx = x.count(), cy = y.count();
    if (cx != cy) return cx < cy;
    return x.w < y.w;
  });
  std::vector<Subgroup> out;
  for (const BitVec& c : closures) {
    std::vector<Element> gens;
    for (int64_t idx = 0; idx < n; ++idx)
      if (c.get(idx)) gens.push_back(a.carrier.element_at(idx));
    out.push_back(Subgroup::from_generators(a.carrier, std::move(gens)));
  }
  return out;
}

ClassifierReport classify(const ModuleAction& a, const Bounds& bounds) {
  require_scalar(a, "classify");
  ClassifierReport rep;
  rep.multiplication = is_multiplication(a, bounds);
  rep.comultiplication = is_comultiplication(a, bounds);
  rep.d_module = is_d_module(a, bounds);
  rep.self_generator = is_self_generator(a, bounds);
  rep.dissimilar_semisimple = is_dissimilar_semisimple(a);
  if (a.carrier.order() <= bounds.max_extendable) {
    rep.endo_extendable = is_endo_extendable(a, bounds);
    rep.quasi_injective = is_quasi_injective(a, bounds);
  } else {
    rep.endo_extendable = false;
    rep.quasi_injective = false;
  }
  rep.faithful = annihilator_and_faithful(a).faithful;
  rep.balanced = is_balanced(a, biend(a, bounds));
  rep.generator = a.scalar().is_integers() ? false : trace_ideal_and_generator(a, bounds).generator;
  if (rep.generator && !(rep.faithful && rep.balanced))
    throw EquivalenceViolation("generator module must be faithful and balanced");
  rep.torsion_subset_size = int64_t(torsion_subset(a, bounds).size());
  return rep;
}

}  // namespace modcenter

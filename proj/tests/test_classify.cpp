#include <doctest.h>

#include "modcenter/classify.hpp"
#include "oracles.hpp"

using namespace modcenter;

namespace {

ModuleAction over_z(std::vector<int64_t> factors) {
  return scalar_action(ScalarRing{0}, FinAbGroup::from_orders(factors));
}

// Existential-over-ideals oracle for multiplication, cross-checking the
// conductor characterization: ideals of the effective cyclic ring are the
// divisors.
bool multiplication_by_ideal_enumeration(const ModuleAction& a) {
  int64_t e = a.is_scalar() && !a.scalar().is_integers() ? a.scalar().modulus
                                                         : a.carrier.exponent();
  for (const Subgroup& n : enumerate_subgroups(a.carrier)) {
    bool found = false;
    for (int64_t c = 1; c <= e && !found; ++c) {
      if (e % c != 0) continue;
      Subgroup mc = image(AbHom::scalar(a.carrier, c));
      found = mc.equals(n);
    }
    if (!found) return false;
  }
  return true;
}

bool comultiplication_by_ideal_enumeration(const ModuleAction& a) {
  int64_t e = a.is_scalar() && !a.scalar().is_integers() ? a.scalar().modulus
                                                         : a.carrier.exponent();
  for (const Subgroup& n : enumerate_subgroups(a.carrier)) {
    bool found = false;
    for (int64_t c = 1; c <= e && !found; ++c) {
      if (e % c != 0) continue;
      found = kernel(AbHom::scalar(a.carrier, c)).equals(n);
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("multiplication modules over the integers") {
  CHECK(is_multiplication(over_z({12})));
  CHECK(!is_multiplication(over_z({2, 2})));
  CHECK(is_multiplication(scalar_action(ScalarRing{0}, FinAbGroup::trivial())));

  // Conductor route agrees with ideal enumeration on small moduli.
  for (auto f : std::vector<std::vector<int64_t>>{{6}, {2, 2}, {2, 4}, {9}, {3, 3}, {2, 6}, {60}})
    CHECK(is_multiplication(over_z(f)) == multiplication_by_ideal_enumeration(over_z(f)));
}

TEST_CASE("comultiplication modules") {
  CHECK(is_comultiplication(over_z({8})));   // finite stand-in for the Pruefer group
  CHECK(is_comultiplication(over_z({49})));
  CHECK(!is_comultiplication(over_z({2, 2})));
  CHECK(is_comultiplication(scalar_action(ScalarRing{0}, FinAbGroup::trivial())));
  for (auto f : std::vector<std::vector<int64_t>>{{6}, {2, 2}, {2, 4}, {9}, {3, 3}, {12}})
    CHECK(is_comultiplication(over_z(f)) == comultiplication_by_ideal_enumeration(over_z(f)));
}

TEST_CASE("distributive submodule lattices") {
  CHECK(is_d_module(over_z({12})));
  CHECK(!is_d_module(over_z({2, 2})));
  CHECK(is_d_module(scalar_action(ScalarRing{0}, FinAbGroup::trivial())));

  // Citation spot-check: distributive iff every submodule is multiplication,
  // on modules up to order 64.
  for (auto f : std::vector<std::vector<int64_t>>{{2, 2}, {12}, {2, 4}, {60}, {2, 2, 2}, {49}}) {
    ModuleAction a = over_z(f);
    bool every_submodule_mult = true;
    for (const Subgroup& n : enumerate_subgroups(a.carrier)) {
      ModuleAction sub = scalar_action(ScalarRing{0}, n.basis());
      if (!is_multiplication(sub)) {
        every_submodule_mult = false;
        break;
      }
    }
    CHECK(is_d_module(a) == every_submodule_mult);
  }
}

TEST_CASE("self generators") {
  CHECK(is_self_generator(over_z({2, 2})));  // projections give every line
  CHECK(is_self_generator(over_z({15})));
  CHECK(is_self_generator(scalar_action(ScalarRing{4}, FinAbGroup({2}))));
  CHECK(is_self_generator(over_z({2, 4})));
  // Independence from multiplication: (Z/2)^2 is self-generator, not
  // multiplication.
  CHECK(!is_multiplication(over_z({2, 2})));
}

TEST_CASE("trace ideals and generators") {
  TraceIdeal t = trace_ideal_and_generator(scalar_action(ScalarRing{4}, FinAbGroup::from_orders({4, 2})));
  CHECK(t.generator);
  CHECK(t.trace_generator == 1);

  t = trace_ideal_and_generator(scalar_action(ScalarRing{4}, FinAbGroup({2})));
  CHECK(!t.generator);
  CHECK(t.trace_generator == 2);

  t = trace_ideal_and_generator(scalar_action(ScalarRing{9}, FinAbGroup({9})));
  CHECK(t.generator);

  CHECK_THROWS_AS(trace_ideal_and_generator(over_z({4})), NonScalarRing);
}

TEST_CASE("endo-extendable and quasi-injective modules") {
  CHECK(is_endo_extendable(over_z({2, 2})));
  CHECK(is_endo_extendable(over_z({12})));
  CHECK(!is_endo_extendable(over_z({2, 4})));
  CHECK(is_quasi_injective(over_z({4, 4})));
  CHECK(!is_quasi_injective(over_z({2, 4})));
  CHECK(is_quasi_injective(over_z({5})));

  // The two predicates agree on finite modules over the integers.
  for (const FinAbGroup& g : abelian_groups_up_to(32)) {
    ModuleAction a = scalar_action(ScalarRing{0}, g);
    CHECK(is_endo_extendable(a) == is_quasi_injective(a));
  }
}

TEST_CASE("dissimilar semisimple detection") {
  CHECK(is_dissimilar_semisimple(over_z({30})));
  CHECK(!is_dissimilar_semisimple(over_z({2, 2})));
  CHECK(!is_dissimilar_semisimple(over_z({4})));
  CHECK(is_dissimilar_semisimple(scalar_action(ScalarRing{0}, FinAbGroup::trivial())));

  // Definitional oracle: squarefree exponent makes the module semisimple and
  // a cyclic carrier keeps the simple summands pairwise distinct.
  for (const FinAbGroup& g : abelian_groups_up_to(36)) {
    bool semisimple = is_squarefree(g.exponent());
    bool dissimilar = semisimple && g.rank() <= 1;
    CHECK(is_dissimilar_semisimple(scalar_action(ScalarRing{0}, g)) == dissimilar);
  }
}

TEST_CASE("submodule lattice comparison") {
  CHECK(submodule_lattice_comparison(over_z({12})) == LatticeComparison::coincide);
  CHECK(submodule_lattice_comparison(over_z({2, 2})) == LatticeComparison::r_strict);
  CHECK(submodule_lattice_comparison(over_z({2, 4})) == LatticeComparison::r_strict);
  for (const FinAbGroup& g : abelian_groups_up_to(24))
    CHECK(submodule_lattice_comparison(scalar_action(ScalarRing{0}, g)) !=
          LatticeComparison::incomparable);
}

TEST_CASE("multiplication modules stay multiplication over their end ring") {
  CHECK(s_module_multiplication_check(over_z({12})));
  CHECK(s_module_multiplication_check(over_z({5})));
  CHECK(s_module_multiplication_check(scalar_action(ScalarRing{6}, FinAbGroup({6}))));
  CHECK_THROWS_AS(s_module_multiplication_check(over_z({2, 2})), HypothesisUnmet);
}

TEST_CASE("fully invariant submodule enumeration") {
  // Against the filter over all subgroups.
  for (auto f : std::vector<std::vector<int64_t>>{{2, 4}, {2, 2}, {12}, {4, 4}, {2, 2, 2}}) {
    ModuleAction a = over_z(f);
    auto fi = fully_invariant_submodules(a);
    int64_t expected = 0;
    for (const Subgroup& n : enumerate_subgroups(a.carrier))
      if (is_fully_invariant(n, a)) ++expected;
    CHECK(int64_t(fi.size()) == expected);
    for (const Subgroup& n : fi) CHECK(is_fully_invariant(n, a));
  }
}

TEST_CASE("squarefree scalar rings have endo-commutative ideals") {
  for (int64_t n = 2; n <= 100; ++n) {
    if (!is_squarefree(n)) continue;
    for (int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      // The ideal (d) of Z/n is cyclic of order n/d with scalar action.
      if (n / d < 2) continue;
      ModuleAction ideal = scalar_action(ScalarRing{n}, FinAbGroup({n / d}));
      CHECK(is_endo_commutative(ideal));
    }
  }
}

TEST_CASE("classifier reports are internally consistent") {
  ClassifierReport r = classify(over_z({2, 2}));
  CHECK(!r.multiplication);
  CHECK(r.self_generator);
  CHECK(!r.dissimilar_semisimple);
  CHECK(r.endo_extendable);
  CHECK(r.quasi_injective);
  CHECK(!r.generator);  // over Z a finite module is never a generator
  CHECK(!r.faithful);
  CHECK(r.balanced);
  CHECK(r.torsion_subset_size == 4);

  r = classify(scalar_action(ScalarRing{4}, FinAbGroup::from_orders({4, 2})));
  CHECK(r.generator);
  CHECK(r.faithful);
  CHECK(r.balanced);

  r = classify(over_z({6}));
  CHECK(r.multiplication);
  CHECK(r.comultiplication);
  CHECK(r.d_module);
  CHECK(r.dissimilar_semisimple);
}

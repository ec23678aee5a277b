#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcenter/tower.hpp"

namespace modcenter {

// All classifier predicates for one instance, computed with a shared
// subgroup enumeration.
struct ClassifierReport {
  bool multiplication = false;
  bool comultiplication = false;
  bool d_module = false;
  bool self_generator = false;
  bool dissimilar_semisimple = false;
  bool endo_extendable = false;
  bool quasi_injective = false;
  bool generator = false;
  bool faithful = false;
  bool balanced = false;
  int64_t torsion_subset_size = 0;
};

// N = M (N : M) for every submodule N; scalar base rings only.
bool is_multiplication(const ModuleAction& a, const Bounds& bounds = {});

// N = Ann_M(ann_R(N)) for every submodule N; scalar base rings only.
bool is_comultiplication(const ModuleAction& a, const Bounds& bounds = {});

// Distributivity of the submodule lattice, checked on all triples.
bool is_d_module(const ModuleAction& a, const Bounds& bounds = {});

// Every submodule is a sum of endomorphic images of M.
bool is_self_generator(const ModuleAction& a, const Bounds& bounds = {});

// Trace ideal of M inside a scalar ring Z/n and the generator decision.
struct TraceIdeal {
  int64_t trace_generator = 0;  // generator of the trace ideal of Z/n
  bool generator = false;
};
TraceIdeal trace_ideal_and_generator(const ModuleAction& a, const Bounds& bounds = {});

// Every endomorphism of every submodule extends to M.
bool is_endo_extendable(const ModuleAction& a, const Bounds& bounds = {});

// Every hom X -> M from a submodule extends to M.
bool is_quasi_injective(const ModuleAction& a, const Bounds& bounds = {});

// Direct sum of pairwise non-isomorphic simple modules; for finite Z-modules
// this is exactly "cyclic of squarefree order".
bool is_dissimilar_semisimple(const ModuleAction& a);

enum class LatticeComparison { coincide, r_strict, incomparable };
std::string to_string(LatticeComparison c);
// Compares the lattices of R-submodules and S-submodules of M.
LatticeComparison submodule_lattice_comparison(const ModuleAction& a, const Bounds& bounds = {});

// For self-generator multiplication modules: M is a multiplication S-module,
// through the I_X M = X mechanism.  Throws HypothesisUnmet otherwise.
bool s_module_multiplication_check(const ModuleAction& a, const Bounds& bounds = {});

// All fully invariant submodules, via joins of S-closures of single elements.
std::vector<Subgroup> fully_invariant_submodules(const ModuleAction& a, const Bounds& bounds = {});

ClassifierReport classify(const ModuleAction& a, const Bounds& bounds = {});

}  // namespace modcenter

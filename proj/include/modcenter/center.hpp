#pragma once

#include <cstdint>
#include <vector>

#include "modcenter/module.hpp"

namespace modcenter {

// Everything the six-way equivalence touches, computed independently and
// cross-asserted.
struct CenterReport {
  Subgroup center;             // C(M), definitional route
  Subgroup commutator_kernel;  // Ker {S,S}, kernel-intersection route
  Subgroup commutator_image;   // span of Im {S,S}
  bool endo_commutative = false;
  bool center_of_s_full = false;  // C(S) = S
  bool s_subset_t = false;        // S <= T inside End_Z(M)
  bool st_lemma_center = false;   // C(S) = S n T as subgroups of End_Z(M)
  int64_t s_order = 0;
  int64_t t_order = 0;
};

// C(M) as the joint kernel of the basis-pair commutators.  Basis pairs
// suffice because the commutator is additive in each argument; the
// definitional all-pairs set is the test oracle.
Subgroup center_of_module(const ModuleAction& a, const Bounds& bounds = {});

// Same set computed through explicit kernel intersections (the second,
// independent route used by the ST-lemma cross check).
Subgroup commutator_kernel_of_module(const ModuleAction& a, const Bounds& bounds = {});

// Subgroup generated by the commutator images; trivial iff the union the
// paper writes is {0}.
Subgroup commutator_image(const ModuleAction& a, const Bounds& bounds = {});

bool is_endo_commutative(const ModuleAction& a, const Bounds& bounds = {});

// Computes all six predicates independently, checks both parts of the ST
// lemma, and throws EquivalenceViolation if any two disagree.
CenterReport main_theorem_report(const ModuleAction& a, const Bounds& bounds = {});

// s(N) <= N for every basis endomorphism s.
bool is_fully_invariant(const Subgroup& n, const ModuleAction& a, const Bounds& bounds = {});

// For fully invariant N in an endo-extendable M: checks End_R(N) = S|_N and
// C(N) = N n C(M).  Throws HypothesisUnmet when N is not fully invariant.
struct SubmoduleCenterCheck {
  bool restriction_is_end = false;  // End_R(N) == S|_N
  bool center_formula = false;      // C(N) == N n C(M)
  bool ok() const { return restriction_is_end && center_formula; }
};
SubmoduleCenterCheck center_of_fully_invariant_submodule_check(const Subgroup& n,
                                                               const ModuleAction& a,
                                                               const Bounds& bounds = {});

// Lemma check: C(M) essential in M implies Im {S,S} lies inside the torsion
// subset T(M).
enum class EssentialLemmaOutcome { holds, vacuous };
EssentialLemmaOutcome essential_center_lemma_check(const ModuleAction& a, const Bounds& bounds = {});

}  // namespace modcenter

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modcenter/ring.hpp"

namespace modcenter {

// Size guards.  Every bound surfaces as a CLI flag.
struct Bounds {
  int64_t max_carrier = 4096;      // largest module order handled
  int max_end_rank = 64;           // largest endomorphism-ring rank
  int64_t max_enum = 4096;         // subgroup enumeration bound
  int64_t max_extendable = 256;    // extendability predicates bound
};

// A structure-constant ring acting through explicit homs, one per additive
// generator of the ring.
struct FinRingAction {
  FinRing ring;
  std::vector<AbHom> rep;
};

// The pair (M, R): a carrier group with either implicit scalar action or an
// explicit represented ring action.
struct ModuleAction {
  std::variant<ScalarRing, FinRingAction> ring;
  FinAbGroup carrier;

  bool is_scalar() const { return std::holds_alternative<ScalarRing>(ring); }
  const ScalarRing& scalar() const { return std::get<ScalarRing>(ring); }
  const FinRingAction& finring() const { return std::get<FinRingAction>(ring); }

  // The action homs the commutant is computed against.  For a scalar ring
  // this is just multiplication by 1; every additive endomorphism commutes
  // with it, matching End over Z (or Z/n containing exp(M)).
  std::vector<AbHom> action_generators() const;
  bool same_ring(const ModuleAction& o) const;
  std::string ring_name() const;
};

ModuleAction scalar_action(const ScalarRing& r, const FinAbGroup& carrier);
ModuleAction ring_self_action(const FinRing& r);  // right regular representation

struct ActionValidation {
  bool ok = true;
  std::string report;
};
ActionValidation validate_action(const ModuleAction& a);

// End_R(M) computed as the commutant of the action inside End_Z(M), solved
// as one integer congruence system.  Carries its faithful representation
// and a pre-factored solver so homs can be re-expressed in the basis.
class EndRingResult {
 public:
  const FinRing& ring() const { return *ring_; }
  const std::vector<AbHom>& rep() const { return rep_; }
  const FinAbGroup& carrier() const { return carrier_; }
  int64_t order() const { return ring_->order(); }

  // Coordinates of an endomorphism in the additive basis, if it lies in
  // the computed ring.
  std::optional<Element> express(const AbHom& h) const;
  bool contains_hom(const AbHom& h) const { return express(h).has_value(); }
  // Realize an abstract ring element as an endomorphism.
  AbHom materialize(const Element& e) const;

  ModuleAction as_action() const;  // the induced S-action on the carrier

 private:
  std::shared_ptr<FinRing> ring_;
  std::vector<AbHom> rep_;
  FinAbGroup carrier_;
  Mat sol_basis_;                          // k^2 x s lattice basis of the commutant
  std::shared_ptr<LinearSolver> express_;  // [sol_basis | diag] factorization
  std::shared_ptr<Presentation> pres_;
  friend EndRingResult end_ring(const ModuleAction&, const Bounds&);
};

EndRingResult end_ring(const ModuleAction& a, const Bounds& bounds = {});

// Additive basis of End_R(M); for scalar rings this is the direct gcd-formula
// basis with no solver involved.
std::vector<AbHom> end_additive_basis(const ModuleAction& a, const Bounds& bounds = {});

struct HomModule {
  FinAbGroup group;
  std::vector<AbHom> basis;
};
// Module homs carrier(a) -> carrier(b) intertwining the two actions.
HomModule hom_module(const ModuleAction& a, const ModuleAction& b, const Bounds& bounds = {});

struct Annihilator {
  std::string description;  // e.g. "0", "(2) in Z/4", "6Z"
  int64_t generator = 0;    // generator of the annihilator ideal
  bool faithful = false;
};
Annihilator annihilator_and_faithful(const ModuleAction& a);

// T(M): elements with nonzero annihilator.  A set, not a submodule.
std::vector<Element> torsion_subset(const ModuleAction& a, const Bounds& bounds = {});
bool element_is_torsion(const ModuleAction& a, const Element& x);

// True iff the canonical map R -> Biend(M) is onto: the subgroup generated
// by the action images equals the additive span of the biendomorphism ring.
bool is_balanced(const ModuleAction& a, const EndRingResult& biend);

struct ActionSum {
  ModuleAction action;
  std::vector<AbHom> injections;
  std::vector<AbHom> projections;
};
ActionSum direct_sum_action(const std::vector<ModuleAction>& parts);

// Additive order of End(sum) must be the product of the Hom-block orders,
// and the block maps must reconstruct every endomorphism.
bool end_of_direct_sum_check(const std::vector<ModuleAction>& parts, const Bounds& bounds = {});

// Subgroup of the hom entry group spanned by a list of endomorphisms.
Subgroup hom_span(const FinAbGroup& src, const FinAbGroup& dst, const std::vector<AbHom>& homs);

// Canonical lattice key of the additive span of a hom set: two sets span the
// same subgroup of Hom(src, dst) iff the keys are equal.  Usable even when
// the hom group order overflows machine integers.
Mat hom_span_key(const FinAbGroup& src, const FinAbGroup& dst, const std::vector<AbHom>& homs);

// Solve incl o h' = h o incl for h' on the abstract subgroup; nullopt when h
// does not map the subgroup into itself.  Well-definedness of h' follows
// from injectivity of incl.
std::optional<AbHom> restrict_through(const AbHom& incl, const AbHom& h);

}  // namespace modcenter

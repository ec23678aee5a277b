#include "modcenter/tower.hpp"

#include "modcenter/errors.hpp"

namespace modcenter {

EndRingResult biend(const ModuleAction& a, const Bounds& bounds) {
  return end_ring(end_ring(a, bounds).as_action(), bounds);
}

TowerResult endo_tower(const ModuleAction& a, int depth, const Bounds& bounds) {
  if (depth < 1) throw Error("tower depth must be >= 1");
  TowerResult out;
  out.stages.push_back(end_ring(a, bounds));
  for (int n = 1; n < depth; ++n)
    out.stages.push_back(end_ring(out.stages.back().as_action(), bounds));

  std::vector<Subgroup> spans;
  for (const auto& s : out.stages) {
    out.commutative_flags.push_back(ring_is_commutative(s.ring()));
    spans.push_back(hom_span(a.carrier, a.carrier, s.rep()));
  }
  for (int n = 0; n + 1 < depth; ++n) {
    out.containments.push_back(spans[size_t(n + 1)].contains(spans[size_t(n)]));
    if (out.commutative_flags[size_t(n)] && !out.containments.back())
      throw EquivalenceViolation("tower theorem part 1 violated at stage " + std::to_string(n + 1));
  }
  for (int n = 0; n + 1 < depth; ++n)
    if (spans[size_t(n)].equals(spans[size_t(n + 1)])) {
      out.stabilized_at = n + 1;
      break;
    }

  // Triple-commutant identity: stages repeat with period two from S_2 on.
  out.period_two_verified = true;
  for (int n = 1; n + 2 < depth; ++n)
    if (!spans[size_t(n)].equals(spans[size_t(n + 2)]))
      throw InternalInconsistency("triple-commutant identity violated at stage " +
                                  std::to_string(n + 1));
  return out;
}

std::optional<int> ecdim(const ModuleAction& a, const Bounds& bounds) {
  // Depth 5 so the period-two verification covers S_4 = S_2 and S_5 = S_3.
  TowerResult t = endo_tower(a, 5, bounds);
  for (int n = 0; n < 3; ++n)
    if (t.commutative_flags[size_t(n)]) return n + 1;
  return std::nullopt;
}

TowerClassification tower_classification(const ModuleAction& a, const Bounds& bounds) {
  TowerResult t = endo_tower(a, 5, bounds);
  const bool f1 = t.commutative_flags[0];
  const bool f2 = t.commutative_flags[1];
  const bool f3 = t.commutative_flags[2];
  // Flags repeat with period two from stage 2 on, so the tail behaviour is
  // decided by f2 and f3.
  if (f1 && f2 && f3) return {TowerClassification::Kind::strongly, 1};
  if (f2 && f3) return {TowerClassification::Kind::eventually, 2};
  return {TowerClassification::Kind::never, 0};
}

}  // namespace modcenter

#pragma once

#include <optional>
#include <vector>

#include "modcenter/center.hpp"

namespace modcenter {

// The endomorphism-ring sequence S_1, S_2, ... realized as iterated
// commutants inside End_Z(M); stages compare as sets of endomorphisms.
struct TowerResult {
  std::vector<EndRingResult> stages;        // S_1 .. S_depth
  std::vector<bool> commutative_flags;      // per stage
  std::vector<bool> containments;           // S_n <= S_{n+1}, n = 1..depth-1
  std::optional<int> stabilized_at;         // least n with S_n = S_{n+1}, 1-based
  bool period_two_verified = false;         // S_{n+2} = S_n for n >= 2 within depth
};

// S_2 = Biend_R(M): the commutant of S_1.
EndRingResult biend(const ModuleAction& a, const Bounds& bounds = {});

TowerResult endo_tower(const ModuleAction& a, int depth, const Bounds& bounds = {});

// Least n with S_n commutative, or nullopt for infinity.  Decided from
// S_1..S_3; the triple-commutant identity (S_4 = S_2, S_5 = S_3) is verified
// on every call so the finite decision procedure never goes unchecked.
std::optional<int> ecdim(const ModuleAction& a, const Bounds& bounds = {});

struct TowerClassification {
  enum class Kind { strongly, eventually, never } kind;
  int n = 0;  // least index for "eventually" (1 when strongly)

  std::string to_string() const {
    switch (kind) {
      case Kind::strongly: return "strongly";
      case Kind::eventually: return "eventually(" + std::to_string(n) + ")";
      default: return "never";
    }
  }
};
TowerClassification tower_classification(const ModuleAction& a, const Bounds& bounds = {});

}  // namespace modcenter

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modcenter/classify.hpp"
#include "modcenter/instance.hpp"
#include "modcenter/tower.hpp"

namespace modcenter {

struct CheckResult {
  enum class Status { pass, vacuous, violation };
  Status status = Status::pass;
  std::string detail;

  static CheckResult pass() { return {}; }
  static CheckResult vacuous() { return {Status::vacuous, ""}; }
  static CheckResult violation(std::string d) { return {Status::violation, std::move(d)}; }
};

// Everything the per-instance theorem checks consume, computed once.
struct CheckContext {
  ModuleAction action;
  std::vector<ModuleAction> parts;  // direct-sum parts when the instance is a sum
  Bounds bounds;
  bool mutant = false;  // self-test: corrupt the end ring before validation

  EndRingResult s;
  EndRingResult t;
  TowerResult tower;                // depth 6
  std::vector<Subgroup> stage_spans;
  CenterReport main_rep;
  ClassifierReport cls;
  std::optional<int> ecdim_value;
  TowerClassification tower_class{TowerClassification::Kind::never, 0};
};

CheckContext make_check_context(const ModuleAction& a, const Bounds& bounds,
                                std::vector<ModuleAction> parts = {}, bool mutant = false);

struct NamedCheck {
  std::string name;
  std::function<CheckResult(const CheckContext&)> run;
};

// The per-instance theorem suites, in a fixed order.
const std::vector<NamedCheck>& instance_checks();

// Direct-sum theorem suites over a tuple of module actions.
struct SumCheck {
  std::string name;
  std::function<CheckResult(const std::vector<ModuleAction>&, const Bounds&)> run;
};
const std::vector<SumCheck>& direct_sum_checks();

}  // namespace modcenter

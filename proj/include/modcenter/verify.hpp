#pragma once

#include <string>
#include <vector>

#include "modcenter/checks.hpp"

namespace modcenter {

// The survey and verification harness shared by the CLI and the tests.

struct HarnessOptions {
  int64_t max_order = 32;
  ScalarRing ring;          // Z or Z/n; Z/n restricts carriers to exp | n
  Bounds bounds;
  int tower_depth = 6;
  int workers = 1;          // deterministic assembly regardless of the count
  bool inject_mutant = false;  // corrupt one end ring: harness self test
};

// The instance corpus for a harness run: all abelian groups of order up to
// max_order that the ring acts on.
std::vector<ModuleAction> harness_corpus(const HarnessOptions& opts);

struct SuiteStats {
  std::string name;
  int64_t checked = 0;   // hypothesis-met instances
  int64_t vacuous = 0;
  int64_t violations = 0;
  std::vector<std::string> counterexamples;  // serialized instances
};

struct VerifyReport {
  std::vector<SuiteStats> suites;
  int64_t instances = 0;
  bool ok() const {
    for (const auto& s : suites)
      if (s.violations > 0) return false;
    return true;
  }
  std::string to_text() const;
};
VerifyReport run_verify(const HarnessOptions& opts);

struct SurveyRow {
  std::string group;
  int64_t order = 0;
  std::string ring;
  bool bound_exceeded = false;
  int64_t end_order = 0;
  bool end_commutative = false;
  int64_t center_order = 0;
  int64_t biend_order = 0;
  bool biend_commutative = false;
  std::string ecdim;  // "1", "2", "3" or "inf"
  std::string classification;
  ClassifierReport cls;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  std::vector<std::string> ecdim3_flags;  // instances with ecdim = 3, if any
  std::string to_csv() const;
};
SurveyReport run_survey(const HarnessOptions& opts);

// Worker count from the environment (MODCENTER_WORKERS), defaulting to 1.
int workers_from_env();

}  // namespace modcenter

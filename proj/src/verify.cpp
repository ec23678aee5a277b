#include "modcenter/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "modcenter/errors.hpp"

namespace modcenter {

namespace {

std::string instance_name(const ModuleAction& a) {
  return a.carrier.to_string() + " over " + a.ring_name();
}

// Run fn(i) for i in [0, n) on `workers` threads; results land in a slot
// vector so assembly order never depends on scheduling.
template <typename F>
void parallel_for(int64_t n, int workers, F&& fn) {
  if (workers <= 1 || n <= 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
  std::atomic<int64_t> next{0};
  auto worker = [&]() {
    while (true) {
      int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        errors[size_t(i)] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int workers_from_env() {
  const char* v = std::getenv("MODCENTER_WORKERS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

std::vector<ModuleAction> harness_corpus(const HarnessOptions& opts) {
  std::vector<ModuleAction> out;
  for (const FinAbGroup& g : abelian_groups_up_to(opts.max_order)) {
    if (!opts.ring.is_integers() && opts.ring.modulus % g.exponent() != 0) continue;
    out.push_back(scalar_action(opts.ring, g));
  }
  return out;
}

VerifyReport run_verify(const HarnessOptions& opts) {
  std::vector<ModuleAction> corpus = harness_corpus(opts);
  const auto& checks = instance_checks();
  const auto& sum_checks = direct_sum_checks();

  VerifyReport report;
  report.instances = int64_t(corpus.size());
  for (const auto& c : checks) report.suites.push_back({c.name, 0, 0, 0, {}});
  size_t sum_offset = report.suites.size();
  for (const auto& c : sum_checks) report.suites.push_back({c.name, 0, 0, 0, {}});

  // Pick the first instance with a nontrivial end ring as the mutation
  // target for the self test.
  int64_t mutant_slot = -1;
  if (opts.inject_mutant)
    for (size_t i = 0; i < corpus.size(); ++i)
      if (corpus[i].carrier.order() > 1) {
        mutant_slot = int64_t(i);
        break;
      }

  std::vector<std::vector<CheckResult>> results(corpus.size());
  parallel_for(int64_t(corpus.size()), opts.workers, [&](int64_t i) {
    CheckContext ctx =
        make_check_context(corpus[size_t(i)], opts.bounds, {}, i == mutant_slot);
    std::vector<CheckResult> row;
    row.reserve(checks.size());
    for (const auto& c : checks) {
      try {
        row.push_back(c.run(ctx));
      } catch (const Error& e) {
        row.push_back(CheckResult::violation(std::string("error: ") + e.what()));
      }
    }
    results[size_t(i)] = std::move(row);
  });
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t c = 0; c < checks.size(); ++c) {
      const CheckResult& r = results[i][c];
      SuiteStats& s = report.suites[c];
      switch (r.status) {
        case CheckResult::Status::pass: ++s.checked; break;
        case CheckResult::Status::vacuous: ++s.vacuous; break;
        case CheckResult::Status::violation:
          ++s.violations;
          s.counterexamples.push_back(instance_name(corpus[i]) + ": " + r.detail);
          break;
      }
    }

  // Direct-sum suites over unordered pairs and triples with the sum still
  // inside the carrier bound.
  std::vector<std::vector<ModuleAction>> tuples;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].carrier.is_trivial()) continue;
    for (size_t j = i; j < corpus.size(); ++j) {
      if (corpus[j].carrier.is_trivial()) continue;
      int64_t ord = corpus[i].carrier.order() * corpus[j].carrier.order();
      if (ord > opts.max_order) continue;
      tuples.push_back({corpus[i], corpus[j]});
      for (size_t k = j; k < corpus.size(); ++k) {
        if (corpus[k].carrier.is_trivial()) continue;
        if (ord * corpus[k].carrier.order() > opts.max_order) continue;
        tuples.push_back({corpus[i], corpus[j], corpus[k]});
      }
    }
  }
  std::vector<std::vector<CheckResult>> sum_results(tuples.size());
  parallel_for(int64_t(tuples.size()), opts.workers, [&](int64_t i) {
    std::vector<CheckResult> row;
    for (const auto& c : sum_checks) {
      try {
        row.push_back(c.run(tuples[size_t(i)], opts.bounds));
      } catch (const Error& e) {
        row.push_back(CheckResult::violation(std::string("error: ") + e.what()));
      }
    }
    sum_results[size_t(i)] = std::move(row);
  });
  for (size_t i = 0; i < tuples.size(); ++i)
    for (size_t c = 0; c < sum_checks.size(); ++c) {
      const CheckResult& r = sum_results[i][c];
      SuiteStats& s = report.suites[sum_offset + c];
      switch (r.status) {
        case CheckResult::Status::pass: ++s.checked; break;
        case CheckResult::Status::vacuous: ++s.vacuous; break;
        case CheckResult::Status::violation: {
          ++s.violations;
          std::string name;
          for (size_t t = 0; t < tuples[i].size(); ++t) {
            if (t) name += " (+) ";
            name += tuples[i][t].carrier.to_string();
          }
          s.counterexamples.push_back(name + " over " + tuples[i][0].ring_name() + ": " + r.detail);
          break;
        }
      }
    }
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "instances: " << instances << "\n";
  for (const auto& s : suites) {
    os << s.name << ": checked " << s.checked << ", vacuous " << s.vacuous << ", violations "
       << s.violations << "\n";
    for (const auto& ce : s.counterexamples) os << "  counterexample: " << ce << "\n";
  }
  os << (ok() ? "verdict: all theorem suites hold\n" : "verdict: VIOLATIONS FOUND\n");
  return os.str();
}

SurveyReport run_survey(const HarnessOptions& opts) {
  std::vector<ModuleAction> corpus = harness_corpus(opts);
  SurveyReport report;
  report.rows.resize(corpus.size());
  parallel_for(int64_t(corpus.size()), opts.workers, [&](int64_t i) {
    const ModuleAction& a = corpus[size_t(i)];
    SurveyRow row;
    row.order = a.carrier.order();
    row.ring = a.ring_name();
    {
      // Compact group label, e.g. "2x4"; "1" for the trivial group.
      std::string label;
      for (size_t t = 0; t < a.carrier.invariant_factors().size(); ++t) {
        if (t) label += "x";
        label += std::to_string(a.carrier.invariant_factors()[t]);
      }
      row.group = label.empty() ? "1" : label;
    }
    try {
      EndRingResult s = end_ring(a, opts.bounds);
      EndRingResult t = end_ring(s.as_action(), opts.bounds);
      row.end_order = s.order();
      row.end_commutative = ring_is_commutative(s.ring());
      row.center_order = center_of_module(a, opts.bounds).order();
      row.biend_order = t.order();
      row.biend_commutative = ring_is_commutative(t.ring());
      auto dim = ecdim(a, opts.bounds);
      row.ecdim = dim ? std::to_string(*dim) : "inf";
      row.classification = tower_classification(a, opts.bounds).to_string();
      row.cls = classify(a, opts.bounds);
    } catch (const BoundExceeded&) {
      row.bound_exceeded = true;
    }
    report.rows[size_t(i)] = std::move(row);
  });
  for (const auto& row : report.rows)
    if (row.ecdim == "3") report.ecdim3_flags.push_back(row.group + " over " + row.ring);
  return report;
}

std::string SurveyReport::to_csv() const {
  std::ostringstream os;
  os << "order,group,ring,status,end_order,end_commutative,center_order,biend_order,"
        "biend_commutative,ecdim,classification,multiplication,comultiplication,d_module,"
        "self_generator,dissimilar_semisimple,endo_extendable,quasi_injective,generator,"
        "faithful,balanced,torsion_subset_size\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rows) {
    os << r.order << "," << r.group << "," << r.ring << ",";
    if (r.bound_exceeded) {
      os << "bound_exceeded,,,,,,,,,,,,,,,,,\n";
      continue;
    }
    os << "ok," << r.end_order << "," << b(r.end_commutative) << "," << r.center_order << ","
       << r.biend_order << "," << b(r.biend_commutative) << "," << r.ecdim << ","
       << r.classification << "," << b(r.cls.multiplication) << "," << b(r.cls.comultiplication)
       << "," << b(r.cls.d_module) << "," << b(r.cls.self_generator) << ","
       << b(r.cls.dissimilar_semisimple) << "," << b(r.cls.endo_extendable) << ","
       << b(r.cls.quasi_injective) << "," << b(r.cls.generator) << "," << b(r.cls.faithful) << ","
       << b(r.cls.balanced) << "," << r.cls.torsion_subset_size << "\n";
  }
  os << "# rows: " << rows.size() << "\n";
  if (ecdim3_flags.empty()) {
    os << "# ecdim3: none\n";
  } else {
    os << "# ecdim3 FLAGGED:";
    for (const auto& f : ecdim3_flags) os << " " << f << ";";
    os << "\n";
  }
  return os.str();
}

}  // namespace modcenter

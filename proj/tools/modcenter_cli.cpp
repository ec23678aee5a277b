// Batch interface: analyze one module instance, survey a corpus, or run the
// theorem-verification harness.
//
// Exit codes: 0 success, 1 usage or parse error, 2 bound exceeded,
// 3 theorem violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modcenter/instance.hpp"
#include "modcenter/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;
constexpr int kExitViolation = 3;

struct CommonFlags {
  int64_t max_order = 32;
  std::string ring = "Z";
  int64_t bound_carrier = 4096;
  int64_t bound_extendable = 256;
  int depth = 5;
  uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--ring", f.ring, "Base ring: Z or Zn:<n>")->capture_default_str();
  cmd->add_option("--bound-carrier", f.bound_carrier, "Largest module order handled")
      ->capture_default_str();
  cmd->add_option("--bound-extendable", f.bound_extendable,
                  "Largest order for extendability predicates")
      ->capture_default_str();
  cmd->add_option("--depth", f.depth, "Tower depth for reports")->capture_default_str();
  cmd->add_option("--seed", f.seed,
                  "Seed for randomized self-check sampling (reported results are deterministic)")
      ->capture_default_str();
}

modcenter::ScalarRing parse_ring(const std::string& s) {
  if (s == "Z") return {0};
  if (s.rfind("Zn:", 0) == 0) {
    int64_t n = std::stoll(s.substr(3));
    if (n < 2) throw modcenter::ParseError("ring modulus must be >= 2");
    return {n};
  }
  throw modcenter::ParseError("ring must be Z or Zn:<n>");
}

modcenter::Bounds make_bounds(const CommonFlags& f) {
  modcenter::Bounds b;
  b.max_carrier = f.bound_carrier;
  b.max_enum = f.bound_carrier;
  b.max_extendable = f.bound_extendable;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcenter: endomorphism rings, module centers and classifier predicates for "
               "finite modules"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, survey_flags, verify_flags;
  std::string spec_path, out_path;
  bool mutant = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one instance spec (JSON)");
  analyze->add_option("spec", spec_path, "Instance spec file")->required();
  add_common(analyze, analyze_flags);

  CLI::App* survey = app.add_subcommand("survey", "Survey all abelian groups up to an order");
  survey->add_option("--max-order", survey_flags.max_order, "Largest group order surveyed")
      ->capture_default_str();
  survey->add_option("-o,--out", out_path, "Output CSV path (default stdout)");
  add_common(survey, survey_flags);

  CLI::App* verify = app.add_subcommand("verify", "Run every theorem suite over a corpus");
  verify->add_option("--max-order", verify_flags.max_order, "Largest group order verified")
      ->capture_default_str();
  verify->add_flag("--self-test-mutant", mutant,
                   "Corrupt one computed ring to prove the harness detects violations");
  add_common(verify, verify_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "error: cannot read " << spec_path << "\n";
        return kExitUsage;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      modcenter::InstanceSpec spec = modcenter::parse_instance(buf.str());
      std::cout << modcenter::analyze_instance(spec, make_bounds(analyze_flags),
                                               analyze_flags.depth);
      return kExitOk;
    }

    if (survey->parsed()) {
      modcenter::HarnessOptions opts;
      opts.max_order = survey_flags.max_order;
      opts.ring = parse_ring(survey_flags.ring);
      opts.bounds = make_bounds(survey_flags);
      opts.workers = modcenter::workers_from_env();
      if (opts.max_order > opts.bounds.max_carrier) {
        std::cerr << "error: max order " << opts.max_order << " exceeds the carrier bound\n";
        return kExitBound;
      }
      std::string csv = modcenter::run_survey(opts).to_csv();
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kExitUsage;
        }
        out << csv;
      }
      return kExitOk;
    }

    modcenter::HarnessOptions opts;
    opts.max_order = verify_flags.max_order;
    opts.ring = parse_ring(verify_flags.ring);
    opts.bounds = make_bounds(verify_flags);
    opts.workers = modcenter::workers_from_env();
    opts.inject_mutant = mutant;
    if (opts.max_order > opts.bounds.max_carrier) {
      std::cerr << "error: max order " << opts.max_order << " exceeds the carrier bound\n";
      return kExitBound;
    }
    modcenter::VerifyReport report = modcenter::run_verify(opts);
    std::cout << report.to_text();
    return report.ok() ? kExitOk : kExitViolation;
  } catch (const modcenter::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const modcenter::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << " (size " << e.size << ")\n";
    return kExitBound;
  } catch (const modcenter::EquivalenceViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const modcenter::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

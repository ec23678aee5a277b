// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  argv[1] must point at the CLI binary (used by the last
// criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "modcenter/classify.hpp"
#include "modcenter/instance.hpp"
#include "modcenter/tower.hpp"
#include "modcenter/verify.hpp"
#include "../tests/oracles.hpp"

using namespace modcenter;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& d) {
    pass = false;
    if (detail.empty()) detail = d;
  }
  void require(bool cond, const std::string& d) {
    if (!cond) fail(d);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ModuleAction over_z(const FinAbGroup& g) { return scalar_action(ScalarRing{0}, g); }

std::string fmt_pair(const Element& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.coords[i]);
  }
  return s + ")";
}

// ---- criterion 1: exact reproduction of the worked counterexample ----

Outcome criterion1() {
  Outcome out;
  FinAbGroup m({2, 2});
  AbHom f(m, m, Mat::from_rows({{1, 0}, {0, 0}}));
  AbHom g(m, m, Mat::from_rows({{0, 1}, {1, 0}}));
  AbHom fg = f.compose(g), gf = g.compose(f);

  struct Pin {
    const char* what;
    std::vector<int64_t> x;
    bool use_fg;
    const char* expect;
  };
  const Pin pins[] = {
      {"fg(1,0)", {1, 0}, true, "(0,0)"},  {"gf(1,0)", {1, 0}, false, "(0,1)"},
      {"fg(0,1)", {0, 1}, true, "(1,0)"},  {"gf(0,1)", {0, 1}, false, "(0,0)"},
      {"fg(1,1)", {1, 1}, true, "(1,0)"},  {"gf(1,1)", {1, 1}, false, "(0,0)"},
  };
  for (const Pin& p : pins) {
    std::string got = fmt_pair((p.use_fg ? fg : gf).apply(m.make(p.x)));
    if (got != p.expect) {
      out.fail(std::string(p.what) + " computed " + got + ", pinned expectation " + p.expect +
               "; the pinned table entry is inconsistent with additivity (gf(1,1) must equal "
               "gf(1,0) + gf(0,1))");
    }
  }
  Subgroup c = center_of_module(over_z(m));
  out.require(c.is_trivial(), "C(Z/2 + Z/2) is not trivial");
  return out;
}

// ---- criterion 2: oracle equivalence against brute-force enumeration ----

int64_t end_order_capped(const FinAbGroup& g, int64_t cap) {
  int64_t prod = 1;
  for (int64_t di : g.invariant_factors())
    for (int64_t dj : g.invariant_factors()) {
      prod *= gcd_i64(di, dj);
      if (prod > cap) return cap + 1;
    }
  return prod;
}

Outcome criterion2() {
  Outcome out;
  Bounds bounds;
  int64_t full = 0, definitional = 0;
  for (const FinAbGroup& g : abelian_groups_up_to(4096)) {
    int64_t end_order = end_order_capped(g, int64_t(1) << 16);
    if (end_order > (int64_t(1) << 16)) continue;
    ++full;

    std::vector<AbHom> brute = oracles::all_homs(g, g);  // scalars act as the identity
    std::vector<ScalarRing> rings = {ScalarRing{0}};
    if (g.exponent() >= 2) rings.push_back(ScalarRing{g.exponent()});
    for (const ScalarRing& ring : rings) {
      ModuleAction a = scalar_action(ring, g);
      EndRingResult s = end_ring(a, bounds);
      if (s.order() != int64_t(brute.size())) {
        out.fail("end ring order mismatch on " + g.to_string());
        continue;
      }
      for (const AbHom& h : brute)
        if (!s.contains_hom(h)) {
          out.fail("brute endomorphism missing from the end ring on " + g.to_string());
          break;
        }
    }

    // Definitional all-pairs oracles stay feasible on a subcorpus.
    if (g.order() > 64 || end_order > 1024) continue;
    ++definitional;
    ModuleAction a = over_z(g);
    auto center_set = oracles::definitional_center(a);
    Subgroup center = center_of_module(a, bounds);
    out.require(int64_t(center_set.size()) == center.order(),
                "center order disagrees with the definitional set on " + g.to_string());
    for (auto& coords : center_set)
      out.require(center.contains(Element{coords}),
                  "definitional center element missing on " + g.to_string());

    auto image_set = oracles::definitional_commutator_image(a);
    Subgroup im = commutator_image(a, bounds);
    out.require(int64_t(image_set.size()) == im.order(),
                "commutator image disagrees with the definitional span on " + g.to_string());

    // Brute biendomorphisms: everything commuting with the full brute set.
    std::vector<AbHom> endos = oracles::all_module_endos(a);
    std::set<std::vector<int64_t>> brute_biend;
    for (const AbHom& h : endos) {
      bool commutes = true;
      for (const AbHom& s2 : endos)
        if (!(h.compose(s2) == s2.compose(h))) {
          commutes = false;
          break;
        }
      if (commutes) brute_biend.insert(hom_flatten(h).coords);
    }
    EndRingResult t = biend(a, bounds);
    out.require(int64_t(brute_biend.size()) == t.order(),
                "biend order disagrees with brute force on " + g.to_string());
    for (const AbHom& h : t.rep())
      out.require(brute_biend.count(hom_flatten(h).coords) == 1,
                  "biend basis hom not in the brute commutant on " + g.to_string());
  }
  out.require(full >= 4000, "full oracle corpus unexpectedly small");
  out.require(definitional >= 50, "definitional oracle corpus unexpectedly small");
  return out;
}

// ---- criterion 3: six-way main theorem and both ST parts up to order 64 ----

Outcome criterion3() {
  Outcome out;
  Bounds bounds;
  for (const FinAbGroup& g : abelian_groups_up_to(64)) {
    try {
      CenterReport r = main_theorem_report(over_z(g), bounds);  // throws on violation
      out.require(r.center.equals(r.commutator_kernel), "ST(1) fails on " + g.to_string());
      out.require(r.st_lemma_center, "ST(2) fails on " + g.to_string());
    } catch (const Error& e) {
      out.fail(std::string("violation on ") + g.to_string() + ": " + e.what());
    }
  }
  return out;
}

// ---- criterion 4: direct-sum suite over pairs and triples up to order 16 ----

Outcome criterion4() {
  Outcome out;
  Bounds bounds;
  std::vector<FinAbGroup> groups = abelian_groups_up_to(16);
  std::vector<std::vector<ModuleAction>> tuples;
  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = i; j < groups.size(); ++j) {
      tuples.push_back({over_z(groups[i]), over_z(groups[j])});
      for (size_t k = j; k < groups.size(); ++k)
        tuples.push_back({over_z(groups[i]), over_z(groups[j]), over_z(groups[k])});
    }
  for (const auto& tuple : tuples) {
    for (const auto& check : direct_sum_checks()) {
      CheckResult r = check.run(tuple, bounds);
      if (r.status == CheckResult::Status::violation) {
        std::string name;
        for (const auto& t : tuple) name += t.carrier.to_string() + " ";
        out.fail(check.name + " fails on " + name + ": " + r.detail);
      }
    }
  }
  return out;
}

// ---- criterion 5: classifier implication suite up to order 64 ----

Outcome criterion5() {
  Outcome out;
  Bounds bounds;
  for (const FinAbGroup& g : abelian_groups_up_to(64)) {
    ModuleAction a = over_z(g);
    ClassifierReport cls = classify(a, bounds);
    bool endo = is_endo_commutative(a, bounds);
    auto lattice = submodule_lattice_comparison(a, bounds);

    if (cls.multiplication) {
      out.require(endo, "multiplication module not endo-commutative: " + g.to_string());
      out.require(lattice == LatticeComparison::coincide,
                  "multiplication lattices differ: " + g.to_string());
    }
    if (cls.comultiplication)
      out.require(endo, "comultiplication module not endo-commutative: " + g.to_string());
    if (cls.dissimilar_semisimple)
      out.require(endo, "dissimilar semisimple module not endo-commutative: " + g.to_string());
    out.require(lattice != LatticeComparison::incomparable,
                "an S-submodule escaped the R-lattice: " + g.to_string());
    out.require(cls.quasi_injective == cls.endo_extendable,
                "quasi-injective and endo-extendable disagree: " + g.to_string());
    if (cls.quasi_injective)
      out.require(cls.endo_extendable, "quasi-injective but not endo-extendable: " + g.to_string());

    // Generator implications run over Z/exp(M).
    if (g.exponent() >= 2) {
      ModuleAction azn = scalar_action(ScalarRing{g.exponent()}, g);
      ClassifierReport zn = classify(azn, bounds);
      EndRingResult t = biend(azn, bounds);
      if (zn.generator)
        out.require(zn.faithful && zn.balanced, "generator not faithful+balanced: " + g.to_string());
      if (zn.faithful && zn.balanced)
        out.require(ring_is_commutative(t.ring()),
                    "balanced faithful module with noncommutative biend: " + g.to_string());
    }
  }
  return out;
}

// ---- criterion 6: tower suite to depth 6 up to order 64 ----

Outcome criterion6() {
  Outcome out;
  Bounds bounds;
  for (const FinAbGroup& g : abelian_groups_up_to(64)) {
    ModuleAction a = over_z(g);
    TowerResult t;
    try {
      t = endo_tower(a, 6, bounds);  // asserts part 1 and the period internally
    } catch (const Error& e) {
      out.fail(std::string("tower failure on ") + g.to_string() + ": " + e.what());
      continue;
    }
    std::vector<Subgroup> spans;
    for (const auto& st : t.stages) spans.push_back(hom_span(g, g, st.rep()));
    for (size_t n = 0; n + 1 < spans.size(); ++n) {
      if (t.commutative_flags[n])
        out.require(spans[n + 1].contains(spans[n]),
                    "commutative stage not contained in the next on " + g.to_string());
      if (n + 2 < spans.size() && t.commutative_flags[n] && t.commutative_flags[n + 1])
        for (size_t k = n + 1; k + 1 < spans.size(); ++k)
          out.require(spans[k].equals(spans[k + 1]),
                      "tower fails to stabilize after two commutative stages on " + g.to_string());
    }
    for (size_t n = 1; n + 2 < spans.size(); ++n)
      out.require(spans[n].equals(spans[n + 2]),
                  "triple-commutant identity fails on " + g.to_string());

    auto dim = ecdim(a, bounds);
    if (g.rank() <= 1) {
      out.require(dim == std::optional<int>(1), "cyclic module with ecdim != 1: " + g.to_string());
      out.require(tower_classification(a, bounds).kind == TowerClassification::Kind::strongly,
                  "cyclic module not strongly endo-commutative: " + g.to_string());
    }
  }
  out.require(ecdim(over_z(FinAbGroup({2, 2}))) == std::optional<int>(2),
              "ecdim of Z/2 + Z/2 is not 2");
  return out;
}

// ---- criterion 7: endo-extendable center formula up to order 256 ----

Outcome criterion7() {
  Outcome out;
  Bounds bounds;
  bounds.max_extendable = 256;
  int64_t extendable = 0, submodules = 0;
  for (const FinAbGroup& g : abelian_groups_up_to(256)) {
    ModuleAction a = over_z(g);
    if (!is_endo_extendable(a, bounds)) continue;
    ++extendable;
    for (const Subgroup& n : fully_invariant_submodules(a, bounds)) {
      ++submodules;
      SubmoduleCenterCheck r = center_of_fully_invariant_submodule_check(n, a, bounds);
      out.require(r.restriction_is_end,
                  "End(N) != S|_N inside " + g.to_string() + " at order " + std::to_string(n.order()));
      out.require(r.center_formula,
                  "C(N) != N n C(M) inside " + g.to_string() + " at order " + std::to_string(n.order()));
    }
  }
  out.require(extendable >= 100, "unexpectedly few endo-extendable modules");
  out.require(submodules >= 300, "unexpectedly few fully invariant submodules checked");
  return out;
}

// ---- criterion 8: the CLI verification harness ----

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& cmd) {
  CliRun r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

Outcome criterion8(const char* cli_path) {
  Outcome out;
  if (!cli_path) {
    out.fail("CLI binary path not supplied (argv[1])");
    return out;
  }
  CliRun ok = run_cli(std::string(cli_path) + " verify --max-order 32");
  out.require(ok.exit_code == 0, "verify --max-order 32 exited with code " +
                                     std::to_string(ok.exit_code));
  int suites = 0;
  bool violations_seen = false;
  size_t pos = 0;
  while ((pos = ok.output.find(", violations ", pos)) != std::string::npos) {
    ++suites;
    if (ok.output.compare(pos, strlen(", violations 0"), ", violations 0") != 0)
      violations_seen = true;
    pos += 1;
  }
  out.require(suites >= 17, "fewer than 17 theorem suites reported: " + std::to_string(suites));
  out.require(!violations_seen, "a theorem suite reported violations");

  CliRun mutant = run_cli(std::string(cli_path) + " verify --max-order 32 --self-test-mutant");
  out.require(mutant.exit_code == 3,
              "mutant self-test exited with code " + std::to_string(mutant.exit_code) +
                  " instead of 3");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Entry {
    const char* name;
    double limit;  // seconds; 0 = no stated limit
    Outcome (*run)();
  };

  int failures = 0;
  auto report = [&](const char* name, double limit, const Outcome& out, double elapsed) {
    bool ok = out.pass && (limit == 0 || elapsed < limit);
    printf("%s criterion %s (%.2fs%s)%s%s\n", ok ? "PASS" : "FAIL", name, elapsed,
           limit > 0 ? (std::string("/") + std::to_string(int(limit)) + "s limit").c_str() : "",
           out.detail.empty() ? "" : ": ", out.detail.c_str());
    if (!ok) ++failures;
  };

  const Entry entries[] = {
      {"1 worked-counterexample reproduction", 1.0, criterion1},
      {"2 solver-vs-brute-force oracle equivalence", 120.0, criterion2},
      {"3 six-way equivalence and both ST parts", 120.0, criterion3},
      {"4 direct-sum suite", 0.0, criterion4},
      {"5 classifier implications", 0.0, criterion5},
      {"6 tower suite", 300.0, criterion6},
      {"7 extendable-submodule center formula", 0.0, criterion7},
  };
  for (const Entry& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out.fail(std::string("exception: ") + ex.what());
    }
    report(e.name, e.limit, out, seconds_since(start));
    fflush(stdout);
  }
  {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criterion8(cli);
    } catch (const std::exception& ex) {
      out.fail(std::string("exception: ") + ex.what());
    }
    report("8 verification harness", 0.0, out, seconds_since(start));
  }
  return failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include "modcenter/verify.hpp"

using namespace modcenter;

TEST_CASE("verify passes over a small corpus of integer modules") {
  HarnessOptions opts;
  opts.max_order = 12;
  opts.ring = ScalarRing{0};
  VerifyReport r = run_verify(opts);
  CHECK(r.ok());
  CHECK(r.suites.size() >= 17);
  CHECK(r.instances == 17);  // abelian groups of order <= 12
  for (const auto& s : r.suites) CHECK(s.violations == 0);
  // The six-way equivalence is exercised on every instance.
  for (const auto& s : r.suites)
    if (s.name == "main-six-equivalences") CHECK(s.checked == r.instances);
}

TEST_CASE("verify passes over Z/4 with restricted carriers") {
  HarnessOptions opts;
  opts.max_order = 8;
  opts.ring = ScalarRing{4};
  VerifyReport r = run_verify(opts);
  CHECK(r.ok());
  // Carriers must be annihilated by 4: 1, 2, 4, 2x2, 2x4, 4x4 <= 8.
  CHECK(r.instances == 6);
}

TEST_CASE("the injected mutant is detected") {
  HarnessOptions opts;
  opts.max_order = 6;
  opts.ring = ScalarRing{0};
  opts.inject_mutant = true;
  VerifyReport r = run_verify(opts);
  CHECK(!r.ok());
  bool found = false;
  for (const auto& s : r.suites)
    if (s.name == "endring-valid" && s.violations == 1) found = true;
  CHECK(found);
}

TEST_CASE("worker pools do not change the output") {
  HarnessOptions one;
  one.max_order = 10;
  one.ring = ScalarRing{0};
  HarnessOptions two = one;
  two.workers = 2;
  CHECK(run_verify(one).to_text() == run_verify(two).to_text());
  CHECK(run_survey(one).to_csv() == run_survey(two).to_csv());
}

TEST_CASE("survey rows and ecdim flags") {
  HarnessOptions opts;
  opts.max_order = 8;
  opts.ring = ScalarRing{0};
  SurveyReport r = run_survey(opts);
  // One row per abelian group of order <= 8 (partition counts sum to 11).
  CHECK(r.rows.size() == 11);
  CHECK(r.ecdim3_flags.empty());

  std::string csv = r.to_csv();
  CHECK(csv.find("2x2,Z,ok,16") != std::string::npos);
  CHECK(csv.find("# ecdim3: none") != std::string::npos);

  // Every cyclic row reports ecdim 1; the 2x2 row reports ecdim 2 with
  // self_generator true and multiplication false.
  for (const auto& row : r.rows) {
    if (row.group.find('x') == std::string::npos) CHECK(row.ecdim == "1");
    if (row.group == "2x2") {
      CHECK(row.ecdim == "2");
      CHECK(!row.cls.multiplication);
      CHECK(row.cls.self_generator);
    }
  }
}

TEST_CASE("survey row counts follow the partition formula") {
  for (int64_t n : {16, 24, 32}) {
    HarnessOptions opts;
    opts.max_order = n;
    opts.ring = ScalarRing{0};
    CHECK(int64_t(run_survey(opts).rows.size()) == int64_t(abelian_groups_up_to(n).size()));
  }
}

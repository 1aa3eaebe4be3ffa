#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "ssm/experiments.hpp"

using namespace ssm;

TEST_CASE("every bundled case study replays cleanly") {
  for (const auto& id : fixtures::case_ids()) {
    Report rep = run_repro(id);
    INFO(report_to_text(rep));
    CHECK(rep.all_pass());
    CHECK(!rep.checks.empty());
  }
  CHECK_THROWS(run_repro("bogus"));
}

TEST_CASE("short randomised sweeps") {
  struct Row {
    const char* id;
    const char* mech;
    int trials;
  };
  for (Row r : {Row{"thm1", "uniform", 5}, Row{"thm1", "gs-man", 5},
                Row{"thm3", "uniform", 5}, Row{"thm4", "gs-man", 5},
                Row{"thm6", "uniform", 5}, Row{"placement", "uniform", 3},
                Row{"placement", "gs-man", 3}}) {
    Report rep = run_sweep(r.id, r.mech, 3, r.trials, 2024);
    INFO(report_to_text(rep));
    CHECK(rep.all_pass());
    CHECK(rep.instances == r.trials);
    CHECK(rep.violations == 0);
  }
  CHECK_THROWS(run_sweep("bogus", "uniform", 3, 1, 1));
}

TEST_CASE("sweeps are reproducible by seed") {
  Report a = run_sweep("thm3", "uniform", 3, 4, 99);
  Report b = run_sweep("thm3", "uniform", 3, 4, 99);
  CHECK(a.equilibria == b.equilibria);
  CHECK(a.violations == b.violations);
}

TEST_CASE("report serialisation") {
  Report rep = run_repro("prop65");
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "repro");
  CHECK(j["id"] == "prop65");
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].is_array());
  CHECK(!j["checks"].empty());
  std::string text = report_to_text(rep);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("prop65") != std::string::npos);
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssm/college.hpp"
#include "ssm/fixtures.hpp"
#include "ssm/game.hpp"
#include "ssm/search.hpp"

namespace ssm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string kind;  // "repro" | "sweep"
  std::string id;
  std::string mechanism;  // sweeps only
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int instances = 0;
  int equilibria = 0;
  int violations = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0;

  bool all_pass() const;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Scripted replay of one bundled case study; every expected fact becomes a
// named pass/fail check.
Report run_repro(const std::string& case_id);

// Randomised verification sweeps. Known ids:
//   thm1      - every locally honesty-minimal equilibrium has a sincerely
//               stable outcome (plus structural invariants)
//   thm3      - targeted search reaches every sincere-stable matching under
//               the uniform mechanism, within the iteration bound
//   thm4      - man-proposing equilibria all yield the woman-optimal matching
//   thm6      - no improving coalition (size <= 2) at found equilibria
//   placement - truth-teller subsets: stability under uniform, woman-optimal
//               partners for strategic women under gs-man
Report run_sweep(const std::string& theorem_id, const std::string& mechanism, int n, int trials,
                 std::uint64_t seed);

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace ssm

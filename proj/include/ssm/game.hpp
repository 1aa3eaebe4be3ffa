#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssm/honesty.hpp"
#include "ssm/mechanisms.hpp"
#include "ssm/rational.hpp"

namespace ssm {

enum class HonestyMode { FullOrder, TruncatedP, Hausdorff };
enum class Profitability { Optimistic, Guaranteed };
enum class SwapScope { Adjacent, Any };

struct GameConfig {
  HonestyMode honesty = HonestyMode::FullOrder;
  Rat penalty = Rat(0);  // p of the truncated metric
  Profitability notion = Profitability::Optimistic;
  int coalition_bound = 2;
  SwapScope local_swaps = SwapScope::Any;
  std::vector<AgentId> truth_tellers;  // pinned to sincere; all notions skip them
  int max_side = kDefaultMaxSide;

  bool is_truth_teller(AgentId y) const;
};

// Dishonesty of y's submitted list under the configured metric, as an exact
// rational so penalty comparisons never round.
Rat honesty_distance(const GameConfig& cfg, const Profile& sincere, const Profile& submitted,
                     AgentId y);
Rat honesty_distance(const GameConfig& cfg, const std::vector<int>& sincere_list,
                     const std::vector<int>& submitted_list);

enum class Comparison { AllWeaklyBetter, SomeStrictlyWorse, Mixed };

// Classify a distribution's support partners for y against a baseline code,
// using y's sincere order. SomeStrictlyWorse: a support partner is strictly
// below the baseline and none is strictly above; Mixed: both directions occur.
Comparison compare_against_partner(const Profile& sincere, AgentId y,
                                   const MatchDistribution& dist, int baseline_code);

// True iff some support partner sits strictly below the baseline.
bool has_strictly_worse(const Profile& sincere, AgentId y, const MatchDistribution& dist,
                        int baseline_code);

// Optimistic: some deviation support partner strictly above the best current
// support partner. Guaranteed: every deviation support partner weakly above
// every current one, with at least one strict pair.
bool is_profitable(const Profile& sincere, AgentId y, const MatchDistribution& current,
                   const MatchDistribution& deviation, Profitability notion);

// All permutations of y's list universe, in lexicographic order.
std::vector<std::vector<int>> all_lists(const Profile& p, AgentId y);

struct AgentVerdict {
  AgentId agent;
  bool pass = true;
  std::string error;                     // non-empty: precondition failure, not a verdict
  std::optional<std::vector<int>> witness_list;  // violating deviation when failing
  std::string detail;
};

// Exhaustive best-response scan per strategic agent.
std::vector<AgentVerdict> is_nash(Evaluator& eval, const GameConfig& cfg,
                                  const Profile& sincere, const Profile& putative);

// Passes iff every strictly-more-honest list leaves y with some support
// partner strictly below the current (deterministic) partner.
AgentVerdict is_minimally_dishonest(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    AgentId agent);

// Same test over honesty-decreasing transpositions of the current list.
AgentVerdict is_locally_minimally_dishonest(Evaluator& eval, const GameConfig& cfg,
                                            const Profile& sincere, const Profile& putative,
                                            AgentId agent);

// Fully honest, or the sincere deviation costs a strictly worse partner.
AgentVerdict is_partially_honest(Evaluator& eval, const GameConfig& cfg,
                                 const Profile& sincere, const Profile& putative,
                                 AgentId agent);

// Requires the submitted list to be a truncation of the sincere one; passes
// iff every strictly shallower truncation costs a strictly worse partner.
AgentVerdict is_minimally_truncated(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    AgentId agent);

struct CoalitionVerdict {
  bool pass = true;
  std::vector<AgentId> coalition;
  std::vector<std::vector<int>> deviation_lists;  // aligned with coalition
  std::int64_t budget = 0;
};

// Bounded falsifier: exhaustive over coalitions of strategic agents up to
// cfg.coalition_bound (sizes 1 and 2); fails iff a joint deviation gives every
// member only partners strictly above their best current support partner.
CoalitionVerdict check_strong(Evaluator& eval, const GameConfig& cfg, const Profile& sincere,
                              const Profile& putative);

struct StabilityVerdict {
  bool stable = true;
  std::optional<Matching> offending;
  std::vector<std::pair<int, int>> blocking;  // wrt sincere
};

// Every support matching of mechanism(putative) stable wrt the sincere profile.
StabilityVerdict outcome_sincerely_stable(Evaluator& eval, const Profile& sincere,
                                          const Profile& putative);

struct EquilibriumReport {
  std::vector<AgentVerdict> nash, min_dishonest, local_min_dishonest, partial, truncated;
  std::optional<CoalitionVerdict> strong;
  std::optional<StabilityVerdict> sincere_stability;
  bool all_pass() const;
};

struct NotionSet {
  bool nash = false, mindis = false, localmindis = false, partial = false, trunc = false,
       strong = false, stability = false;
  static NotionSet parse(const std::string& csv);  // "nash,mindis,localmindis,..."
  static NotionSet all();
};

EquilibriumReport check_equilibrium(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    const NotionSet& notions);

}  // namespace ssm

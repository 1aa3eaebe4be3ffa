#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssm/core.hpp"
#include "ssm/rational.hpp"

namespace ssm {

/// Proposal-by-proposal record of a deferred-acceptance run.
struct ProposalEvent {
  int proposer;   // index on the proposing side
  int target;     // index on the receiving side
  bool accepted;  // held (possibly displacing someone) vs. rejected outright
  int displaced;  // index displaced by this acceptance, or -1
};

struct GSTrace {
  std::vector<ProposalEvent> events;
  Matching result;
  int proposal_count() const { return static_cast<int>(events.size()); }
};

// Deferred acceptance with `proposing` side proposing; yields that side's
// optimal stable matching.
GSTrace gale_shapley(const Profile& p, Side proposing);
Matching gale_shapley_matching(const Profile& p, Side proposing);

// All stable matchings, sorted by man_to vector. Recursive assignment with
// individual-rationality pruning keeps desk sizes fast.
std::vector<Matching> enumerate_stable(const Profile& p);

// All matchings (stable or not) of the instance.
std::vector<Matching> enumerate_matchings(int nm, int nw);

// Sum over agents of cost_rank of their partner, under profile p.
int egalitarian_cost(const Profile& p, const Matching& mu);

// Stable matchings minimising egalitarian cost.
std::vector<Matching> egalitarian_argmin(const Profile& p);

/// A lottery over matchings with exact rational probabilities.
struct MatchDistribution {
  std::vector<std::pair<Matching, Rat>> support;  // sorted by Matching, probs > 0

  static MatchDistribution point(Matching mu);
  static MatchDistribution uniform(std::vector<Matching> mus);

  bool deterministic() const { return support.size() == 1; }
  // P[y is matched to `code`] for agent y.
  Rat marginal(const Profile& p, AgentId y, int code) const;
  // Support partners of agent y (codes), deduplicated, sorted.
  std::vector<int> support_codes(const Profile& p, AgentId y) const;

  friend bool operator==(const MatchDistribution&, const MatchDistribution&) = default;
};

/// A (possibly randomised) matching mechanism together with the structural
/// properties the analysis relies on.
struct Mechanism {
  std::string name;
  bool deterministic = false;
  bool monotonic = false;        // better submitted partner stays weakly better
  bool ins = false;              // independence of non-supported alternatives
  bool fully_randomized = false; // positive probability on every stable matching
  std::function<MatchDistribution(const Profile&)> run;
};

// Known names: gs-man, gs-woman, uniform, uniform-egal, egal-lex.
Mechanism make_mechanism(const std::string& name);
std::vector<std::string> mechanism_names();

/// Memoising wrapper: equilibrium checks re-evaluate many nearby profiles.
class Evaluator {
 public:
  explicit Evaluator(Mechanism mech) : mech_(std::move(mech)) {}

  const Mechanism& mechanism() const { return mech_; }
  const MatchDistribution& operator()(const Profile& p);
  size_t cache_size() const { return cache_.size(); }

 private:
  Mechanism mech_;
  std::unordered_map<std::string, MatchDistribution> cache_;
};

}  // namespace ssm

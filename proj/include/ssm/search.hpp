#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssm/game.hpp"

namespace ssm {

/// Honesty-restoring replacement available to one agent: a strictly more
/// honest list whose outcome is weakly better for them.
struct Violation {
  AgentId agent;
  std::vector<int> list;
  int k_new = 0;         // full-order distance of the replacement to sincere
  bool in_inv_prime = false;  // prefix up to the agent's current partner is sincere-ordered
};

struct SearchStep {
  Violation chosen;
  int phi_before = 0, phi_after = 0;
};

struct SearchTrace {
  std::vector<SearchStep> steps;
  Profile final_profile;
  bool certified = false;  // Nash + minimally dishonest for every agent
  int iteration_bound = 0;
};

// Profile where every matched agent truncates their sincere list directly
// after their partner; self-matched agents keep their sincere list. The
// matching must be stable, and is then the unique stable matching of the result.
Profile truncate_at(const Profile& sincere, const Matching& mu);
// Same, but only the given side truncates; the other side stays sincere.
Profile truncate_at(const Profile& sincere, const Matching& mu, Side truncating);

// Inv: agents' strictly-more-honest lists (full-order metric) with weakly
// better outcomes; Inv' restricts to lists whose prefix through the agent's
// current partner is the sincere order of the weakly-above set.
std::pair<std::vector<Violation>, std::vector<Violation>> inv_sets(Evaluator& eval,
                                                                   const GameConfig& cfg,
                                                                   const Profile& sincere,
                                                                   const Profile& putative);

// Iteratively replace lists chosen from Inv' until it empties; the summed
// full-order distance to sincere strictly decreases each step. Supported
// mechanisms: uniform (any stable target) and gs-man (woman-optimal target).
std::pair<Profile, SearchTrace> equilibrium_find(Evaluator& eval, const GameConfig& cfg,
                                                 const Profile& sincere,
                                                 const Matching& target);

// Upper bound on equilibrium_find iterations: total pair-inversion capacity.
int iteration_bound(const Profile& sincere);

enum class PruneMode { Corollary3, None };

struct FoundEquilibrium {
  Profile profile;
  Matching outcome;
  EquilibriumReport report;
};

// All putative profiles passing the requested notions. Corollary3 pruning
// fixes each agent's above-partner prefix to the sincere order and keeps only
// candidates the mechanism maps to exactly the seeding matching; it is
// lossless for monotonic+INS and fully-randomized mechanisms. None = full
// exhaustion, only allowed at side size <= 2.
std::vector<FoundEquilibrium> enumerate_equilibria(Evaluator& eval, const GameConfig& cfg,
                                                   const Profile& sincere,
                                                   const NotionSet& notions,
                                                   PruneMode prune = PruneMode::Corollary3);

}  // namespace ssm

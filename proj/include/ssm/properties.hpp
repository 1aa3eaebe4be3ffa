#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssm/mechanisms.hpp"

namespace ssm {

/// Promotion of one element by exactly one position in an agent's list.
struct SwapMove {
  AgentId agent;
  int promoted;   // code moved up
  int new_pos;    // its position after the move
  int displaced;  // code previously occupying new_pos
};

// All single-position promotions available in the profile.
std::vector<SwapMove> all_up_moves(const Profile& p);
Profile apply_move(const Profile& p, const SwapMove& move);

enum class PropertyResult { NoViolationFound, Violated };

struct PropertyWitness {
  Profile profile;
  std::optional<SwapMove> move;
  std::string detail;  // offending marginals, human-readable
};

struct PropertyVerdict {
  std::string property;
  PropertyResult result = PropertyResult::NoViolationFound;
  std::optional<PropertyWitness> witness;
  std::int64_t budget = 0;  // checks performed
};

// Violated iff promoting j lowers the agent's probability of matching j.
PropertyVerdict check_monotonic_at(Evaluator& eval, const Profile& p, const SwapMove& move);

// When the displaced code has zero probability, promoting past it must not
// raise the probability of matching anyone other than the promoted code.
// Moves with a positive-probability displaced code pass vacuously.
PropertyVerdict check_ins_at(Evaluator& eval, const Profile& p, const SwapMove& move);

// Violated iff some agent is matched to a code with probability 1 while a
// stable matching of the profile assigns them elsewhere.
PropertyVerdict check_fully_randomized_at(Evaluator& eval, const Profile& p);

// Exhaustive moves on `trials` seeded random profiles of size n x n.
// property in {"monotonic", "ins", "fully-randomized"}.
PropertyVerdict property_sweep(const Mechanism& mech, const std::string& property, int n,
                               int trials, std::uint64_t seed);

}  // namespace ssm

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ssm/core.hpp"

namespace ssm {

/// Kendall tau distance between two total orders over the same universe,
/// given as permutations of codes: the number of unordered pairs the two
/// orders rank oppositely.
int kendall_tau(const std::vector<int>& a, const std::vector<int>& b);

// Kendall tau between agent y's list in `submitted` and in `sincere`.
int kendall_tau(const Profile& sincere, const Profile& submitted, AgentId y);

// Sum of per-agent distances over the whole profile.
int kendall_tau_total(const Profile& sincere, const Profile& submitted);

/// Pair classification for a truncated list against a sincere total order.
///
/// A truncated list keeps only the acceptable prefix ending at SELF; codes
/// after SELF are unranked. Pairs of codes fall into:
///  - D:  both ranked by the truncation, in the opposite order to sincere
///  - R1: exactly one ranked (the other cut off), and sincere order says the
///        unranked one comes first
///  - R2: neither ranked, so the truncation is silent on a compared pair
struct DisparitySets {
  std::vector<std::pair<int, int>> d, r1, r2;
};

// `truncated` is a full permutation; entries after SELF are treated as
// unranked. `sincere_order` is the sincere full permutation.
DisparitySets disparity_sets(const std::vector<int>& sincere_order,
                             const std::vector<int>& truncated);

/// Parameterised distance |D| + p(|R1| + |R2|) for truncations; collapses to
/// plain Kendall tau on untruncated lists for any p.
double kendall_tau_penalty(const std::vector<int>& sincere_order,
                           const std::vector<int>& truncated, double p);

// Integer pieces: returns {|D|, |R1|, |R2|}.
std::array<int, 3> disparity_counts(const std::vector<int>& sincere_order,
                                    const std::vector<int>& truncated);

/// Hausdorff variant |D| + max(|R1|, |R2|).
int hausdorff_kt(const std::vector<int>& sincere_order, const std::vector<int>& truncated);

// Whether `list` is a truncation of `sincere_order`: the prefix before SELF
// is a prefix of the sincere acceptable order, in sincere order.
bool is_truncation_of(const std::vector<int>& sincere_order, const std::vector<int>& list,
                      int self_code);

}  // namespace ssm

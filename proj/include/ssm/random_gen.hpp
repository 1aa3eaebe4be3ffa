#pragma once

#include <cstdint>
#include <random>

#include "ssm/core.hpp"

namespace ssm {

enum class SelfPosition { Uniform, AlwaysLast };

/// Deterministic bounded draw in [0, n); avoids std::uniform_int_distribution,
/// whose output differs across standard libraries.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

// Uniformly random strict lists; SELF placed per policy. Same seed, same profile.
Profile random_instance(int n_men, int n_women, std::mt19937_64& rng,
                        SelfPosition policy = SelfPosition::Uniform);
Profile random_instance(int n_men, int n_women, std::uint64_t seed,
                        SelfPosition policy = SelfPosition::Uniform);

}  // namespace ssm

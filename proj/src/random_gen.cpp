#include "ssm/random_gen.hpp"

#include <algorithm>
#include <numeric>

namespace ssm {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling over the largest multiple of n, so draws are exactly
  // uniform and reproducible across standard libraries.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

namespace {

std::vector<int> random_list(int universe, std::mt19937_64& rng, SelfPosition policy) {
  int self = universe - 1;
  std::vector<int> list(universe);
  std::iota(list.begin(), list.end(), 0);
  // Fisher-Yates over the opposite-side codes; SELF joins the shuffle only
  // under the uniform policy.
  int shuffled = policy == SelfPosition::Uniform ? universe : universe - 1;
  for (int i = shuffled - 1; i > 0; --i) {
    int j = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(list[i], list[j]);
  }
  (void)self;  // iota leaves SELF last; the restricted shuffle keeps it there
  return list;
}

}  // namespace

Profile random_instance(int n_men, int n_women, std::mt19937_64& rng, SelfPosition policy) {
  if (n_men > kDefaultMaxSide || n_women > kDefaultMaxSide)
    throw SizeBoundError("instance size exceeds the side bound");
  std::vector<std::vector<int>> men, women;
  for (int i = 0; i < n_men; ++i) men.push_back(random_list(n_women + 1, rng, policy));
  for (int i = 0; i < n_women; ++i) women.push_back(random_list(n_men + 1, rng, policy));
  return Profile::from_lists(std::move(men), std::move(women));
}

Profile random_instance(int n_men, int n_women, std::uint64_t seed, SelfPosition policy) {
  std::mt19937_64 rng(seed);
  return random_instance(n_men, n_women, rng, policy);
}

}  // namespace ssm

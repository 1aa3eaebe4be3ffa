#include "ssm/honesty.hpp"

#include <algorithm>

namespace ssm {

namespace {

// Position map, with -1 for codes a list does not rank.
std::vector<int> positions(const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  return pos;
}

// Comparison under the truncation partial order: codes at or before SELF are
// totally ordered by list position; codes after SELF sit strictly below SELF
// (and everything above it) but are mutually incomparable.
//  returns +1 if a < b (a preferred), -1 if b < a, 0 if incomparable.
struct PartialOrder {
  std::vector<int> pos;
  int self_pos;

  PartialOrder(const std::vector<int>& order, int self_code)
      : pos(positions(order)), self_pos(pos[self_code]) {}

  bool ranked(int code) const { return pos[code] <= self_pos; }

  int compare(int a, int b) const {
    bool ra = ranked(a), rb = ranked(b);
    if (ra && rb) return pos[a] < pos[b] ? 1 : -1;
    if (ra) return 1;   // b is cut off, hence below everything ranked
    if (rb) return -1;
    return 0;  // two cut-off codes: no relative order
  }
};

}  // namespace

int kendall_tau(const std::vector<int>& a, const std::vector<int>& b) {
  auto pa = positions(a), pb = positions(b);
  int n = static_cast<int>(a.size());
  int d = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if ((pa[x] < pa[y]) != (pb[x] < pb[y])) ++d;
  return d;
}

int kendall_tau(const Profile& sincere, const Profile& submitted, AgentId y) {
  return kendall_tau(sincere.list_of(y), submitted.list_of(y));
}

int kendall_tau_total(const Profile& sincere, const Profile& submitted) {
  int total = 0;
  for (AgentId y : sincere.agents()) total += kendall_tau(sincere, submitted, y);
  return total;
}

DisparitySets disparity_sets(const std::vector<int>& sincere_order,
                             const std::vector<int>& truncated) {
  int n = static_cast<int>(sincere_order.size());
  int self_code = n - 1;
  // The lists are permutations of 0..n-1 where SELF is whichever code appears
  // in both; callers pass opposite-side codes 0..n-2 plus SELF = n-1.
  PartialOrder s(sincere_order, self_code), t(truncated, self_code);
  DisparitySets out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int cs = s.compare(a, b), ct = t.compare(a, b);
      if (cs != 0 && ct != 0) {
        if (cs != ct) out.d.emplace_back(a, b);
      } else if (cs != 0) {
        out.r1.emplace_back(a, b);
      } else if (ct != 0) {
        out.r2.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::array<int, 3> disparity_counts(const std::vector<int>& sincere_order,
                                    const std::vector<int>& truncated) {
  auto ds = disparity_sets(sincere_order, truncated);
  return {static_cast<int>(ds.d.size()), static_cast<int>(ds.r1.size()),
          static_cast<int>(ds.r2.size())};
}

double kendall_tau_penalty(const std::vector<int>& sincere_order,
                           const std::vector<int>& truncated, double p) {
  auto [d, r1, r2] = disparity_counts(sincere_order, truncated);
  return d + p * (r1 + r2);
}

int hausdorff_kt(const std::vector<int>& sincere_order, const std::vector<int>& truncated) {
  auto [d, r1, r2] = disparity_counts(sincere_order, truncated);
  return d + std::max(r1, r2);
}

bool is_truncation_of(const std::vector<int>& sincere_order, const std::vector<int>& list,
                      int self_code) {
  size_t k = 0;
  while (k < list.size() && list[k] != self_code) ++k;
  if (k == list.size()) return false;
  for (size_t i = 0; i < k; ++i)
    if (sincere_order[i] != list[i]) return false;
  return true;
}

}  // namespace ssm

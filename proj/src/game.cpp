#include "ssm/game.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssm {

bool GameConfig::is_truth_teller(AgentId y) const {
  return std::find(truth_tellers.begin(), truth_tellers.end(), y) != truth_tellers.end();
}

Rat honesty_distance(const GameConfig& cfg, const std::vector<int>& sincere_list,
                     const std::vector<int>& submitted_list) {
  switch (cfg.honesty) {
    case HonestyMode::FullOrder:
      return Rat(kendall_tau(sincere_list, submitted_list));
    case HonestyMode::TruncatedP: {
      auto [d, r1, r2] = disparity_counts(sincere_list, submitted_list);
      return Rat(d) + cfg.penalty * Rat(r1 + r2);
    }
    case HonestyMode::Hausdorff:
      return Rat(hausdorff_kt(sincere_list, submitted_list));
  }
  throw std::logic_error("unreachable");
}

Rat honesty_distance(const GameConfig& cfg, const Profile& sincere, const Profile& submitted,
                     AgentId y) {
  return honesty_distance(cfg, sincere.list_of(y), submitted.list_of(y));
}

Comparison compare_against_partner(const Profile& sincere, AgentId y,
                                   const MatchDistribution& dist, int baseline_code) {
  bool worse = false, better = false;
  for (int code : dist.support_codes(sincere, y)) {
    if (sincere.prefers(y, baseline_code, code)) worse = true;
    if (sincere.prefers(y, code, baseline_code)) better = true;
  }
  if (!worse) return Comparison::AllWeaklyBetter;
  return better ? Comparison::Mixed : Comparison::SomeStrictlyWorse;
}

bool has_strictly_worse(const Profile& sincere, AgentId y, const MatchDistribution& dist,
                        int baseline_code) {
  return compare_against_partner(sincere, y, dist, baseline_code) != Comparison::AllWeaklyBetter;
}

namespace {

// Best/worst support partner of y per the sincere order (smaller position = better).
std::pair<int, int> support_extremes(const Profile& sincere, AgentId y,
                                     const MatchDistribution& dist) {
  int best = -1, worst = -1;
  for (int code : dist.support_codes(sincere, y)) {
    if (best < 0 || sincere.prefers(y, code, best)) best = code;
    if (worst < 0 || sincere.prefers(y, worst, code)) worst = code;
  }
  return {best, worst};
}

}  // namespace

bool is_profitable(const Profile& sincere, AgentId y, const MatchDistribution& current,
                   const MatchDistribution& deviation, Profitability notion) {
  auto [cur_best, cur_worst] = support_extremes(sincere, y, current);
  auto [dev_best, dev_worst] = support_extremes(sincere, y, deviation);
  if (notion == Profitability::Optimistic)
    return sincere.prefers(y, dev_best, cur_best);
  // Guaranteed: worst deviation partner weakly above best current partner,
  // and some deviation partner strictly above some current partner.
  bool all_weak = !sincere.prefers(y, cur_best, dev_worst);
  bool some_strict = sincere.prefers(y, dev_best, cur_worst);
  return all_weak && some_strict;
}

std::vector<std::vector<int>> all_lists(const Profile& p, AgentId y) {
  std::vector<int> list(p.universe_size(y.side));
  std::iota(list.begin(), list.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(list);
  } while (std::next_permutation(list.begin(), list.end()));
  return out;
}

namespace {

void require_size(const GameConfig& cfg, const Profile& p) {
  if (p.num_men() > cfg.max_side || p.num_women() > cfg.max_side)
    throw SizeBoundError("instance exceeds the configured side bound");
}

// Deterministic partner code of y under the putative outcome, required by the
// refinement definitions; nullopt when the marginal is split.
std::optional<int> deterministic_partner(const Profile& p, AgentId y,
                                         const MatchDistribution& dist) {
  auto codes = dist.support_codes(p, y);
  if (codes.size() != 1) return std::nullopt;
  return codes.front();
}

}  // namespace

std::vector<AgentVerdict> is_nash(Evaluator& eval, const GameConfig& cfg,
                                  const Profile& sincere, const Profile& putative) {
  require_size(cfg, sincere);
  const auto current = eval(putative);
  std::vector<AgentVerdict> out;
  for (AgentId y : sincere.agents()) {
    AgentVerdict v{y};
    if (!cfg.is_truth_teller(y)) {
      for (auto& list : all_lists(sincere, y)) {
        if (list == putative.list_of(y)) continue;
        const auto& dev = eval(putative.with_list(y, list));
        if (is_profitable(sincere, y, current, dev, cfg.notion)) {
          v.pass = false;
          v.witness_list = list;
          v.detail = "profitable deviation";
          break;
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Shared core of the honesty refinements: the agent passes iff every
// candidate list leaves them with a strictly worse support partner.
AgentVerdict sweep_candidates(Evaluator& eval, const Profile& sincere, const Profile& putative,
                              AgentId agent, const std::vector<std::vector<int>>& candidates) {
  AgentVerdict v{agent};
  if (candidates.empty()) return v;  // nothing more honest to try
  auto baseline = deterministic_partner(sincere, agent, eval(putative));
  if (!baseline) {
    v.error = "agent's outcome under the putative profile is not deterministic";
    return v;
  }
  for (const auto& list : candidates) {
    const auto& dist = eval(putative.with_list(agent, list));
    if (!has_strictly_worse(sincere, agent, dist, *baseline)) {
      v.pass = false;
      v.witness_list = list;
      v.detail = "a more honest list keeps a weakly better outcome";
      return v;
    }
  }
  return v;
}

}  // namespace

AgentVerdict is_minimally_dishonest(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    AgentId agent) {
  require_size(cfg, sincere);
  if (cfg.is_truth_teller(agent)) return {agent};
  Rat current = honesty_distance(cfg, sincere, putative, agent);
  std::vector<std::vector<int>> candidates;
  for (auto& list : all_lists(sincere, agent))
    if (honesty_distance(cfg, sincere.list_of(agent), list) < current)
      candidates.push_back(std::move(list));
  return sweep_candidates(eval, sincere, putative, agent, candidates);
}

AgentVerdict is_locally_minimally_dishonest(Evaluator& eval, const GameConfig& cfg,
                                            const Profile& sincere, const Profile& putative,
                                            AgentId agent) {
  require_size(cfg, sincere);
  if (cfg.is_truth_teller(agent)) return {agent};
  Rat current = honesty_distance(cfg, sincere, putative, agent);
  const auto& base = putative.list_of(agent);
  std::vector<std::vector<int>> candidates;
  int n = static_cast<int>(base.size());
  for (int i = 0; i < n; ++i) {
    int jmax = cfg.local_swaps == SwapScope::Adjacent ? std::min(i + 2, n) : n;
    for (int j = i + 1; j < jmax; ++j) {
      auto list = base;
      std::swap(list[i], list[j]);
      if (honesty_distance(cfg, sincere.list_of(agent), list) < current)
        candidates.push_back(std::move(list));
    }
  }
  return sweep_candidates(eval, sincere, putative, agent, candidates);
}

AgentVerdict is_partially_honest(Evaluator& eval, const GameConfig& cfg,
                                 const Profile& sincere, const Profile& putative,
                                 AgentId agent) {
  require_size(cfg, sincere);
  if (cfg.is_truth_teller(agent)) return {agent};
  if (putative.list_of(agent) == sincere.list_of(agent)) return {agent};
  return sweep_candidates(eval, sincere, putative, agent, {sincere.list_of(agent)});
}

AgentVerdict is_minimally_truncated(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    AgentId agent) {
  require_size(cfg, sincere);
  if (cfg.is_truth_teller(agent)) return {agent};
  int self = sincere.self_code(agent.side);
  const auto& sin = sincere.list_of(agent);
  const auto& sub = putative.list_of(agent);
  if (!is_truncation_of(sin, sub, self)) {
    AgentVerdict v{agent};
    v.error = "submitted list is not a truncation of the sincere list";
    return v;
  }
  int depth = putative.position(agent, self);  // acceptable-prefix length
  // Candidate truncations excluding strictly fewer partners: longer prefixes.
  std::vector<std::vector<int>> candidates;
  int full = sincere.position(agent, self);
  for (int k = depth + 1; k <= full; ++k) {
    std::vector<int> list;
    for (int i = 0; i < k; ++i) list.push_back(sin[i]);
    list.push_back(self);
    for (int c : sin)
      if (c != self && std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
    candidates.push_back(std::move(list));
  }
  return sweep_candidates(eval, sincere, putative, agent, candidates);
}

CoalitionVerdict check_strong(Evaluator& eval, const GameConfig& cfg, const Profile& sincere,
                              const Profile& putative) {
  require_size(cfg, sincere);
  CoalitionVerdict v;
  const auto current = eval(putative);
  std::vector<AgentId> strategic;
  for (AgentId y : sincere.agents())
    if (!cfg.is_truth_teller(y)) strategic.push_back(y);
  auto improves = [&](AgentId y, const MatchDistribution& dist) {
    // Every support partner strictly above y's best current support partner.
    auto [cur_best, cur_worst] = support_extremes(sincere, y, current);
    auto [dev_best, dev_worst] = support_extremes(sincere, y, dist);
    (void)cur_worst;
    (void)dev_best;
    return sincere.prefers(y, dev_worst, cur_best);
  };
  if (cfg.coalition_bound >= 1) {
    for (AgentId y : strategic) {
      for (auto& list : all_lists(sincere, y)) {
        ++v.budget;
        const auto& dist = eval(putative.with_list(y, list));
        if (improves(y, dist)) {
          v.pass = false;
          v.coalition = {y};
          v.deviation_lists = {list};
          return v;
        }
      }
    }
  }
  if (cfg.coalition_bound >= 2) {
    for (size_t a = 0; a < strategic.size(); ++a) {
      for (size_t b = a + 1; b < strategic.size(); ++b) {
        AgentId ya = strategic[a], yb = strategic[b];
        for (auto& la : all_lists(sincere, ya)) {
          Profile pa = putative.with_list(ya, la);
          for (auto& lb : all_lists(sincere, yb)) {
            ++v.budget;
            const auto& dist = eval(pa.with_list(yb, lb));
            if (improves(ya, dist) && improves(yb, dist)) {
              v.pass = false;
              v.coalition = {ya, yb};
              v.deviation_lists = {la, lb};
              return v;
            }
          }
        }
      }
    }
  }
  return v;
}

StabilityVerdict outcome_sincerely_stable(Evaluator& eval, const Profile& sincere,
                                          const Profile& putative) {
  StabilityVerdict v;
  for (const auto& [mu, pr] : eval(putative).support) {
    auto blocks = blocking_pairs(sincere, mu);
    bool ir = is_individually_rational(sincere, mu);
    if (!blocks.empty() || !ir) {
      v.stable = false;
      v.offending = mu;
      v.blocking = std::move(blocks);
      return v;
    }
  }
  return v;
}

bool EquilibriumReport::all_pass() const {
  auto ok = [](const std::vector<AgentVerdict>& vs) {
    return std::all_of(vs.begin(), vs.end(),
                       [](const AgentVerdict& v) { return v.pass && v.error.empty(); });
  };
  return ok(nash) && ok(min_dishonest) && ok(local_min_dishonest) && ok(partial) &&
         ok(truncated) && (!strong || strong->pass) &&
         (!sincere_stability || sincere_stability->stable);
}

NotionSet NotionSet::parse(const std::string& csv) {
  NotionSet s;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "nash")
      s.nash = true;
    else if (tok == "mindis")
      s.mindis = true;
    else if (tok == "localmindis")
      s.localmindis = true;
    else if (tok == "partial")
      s.partial = true;
    else if (tok == "trunc")
      s.trunc = true;
    else if (tok == "strong")
      s.strong = true;
    else if (tok == "stability")
      s.stability = true;
    else if (!tok.empty())
      throw std::invalid_argument("unknown notion '" + tok + "'");
  }
  return s;
}

NotionSet NotionSet::all() {
  return {true, true, true, true, true, true, true};
}

EquilibriumReport check_equilibrium(Evaluator& eval, const GameConfig& cfg,
                                    const Profile& sincere, const Profile& putative,
                                    const NotionSet& notions) {
  EquilibriumReport r;
  if (notions.nash) r.nash = is_nash(eval, cfg, sincere, putative);
  for (AgentId y : sincere.agents()) {
    if (notions.mindis)
      r.min_dishonest.push_back(is_minimally_dishonest(eval, cfg, sincere, putative, y));
    if (notions.localmindis)
      r.local_min_dishonest.push_back(
          is_locally_minimally_dishonest(eval, cfg, sincere, putative, y));
    if (notions.partial)
      r.partial.push_back(is_partially_honest(eval, cfg, sincere, putative, y));
    if (notions.trunc)
      r.truncated.push_back(is_minimally_truncated(eval, cfg, sincere, putative, y));
  }
  if (notions.strong) r.strong = check_strong(eval, cfg, sincere, putative);
  if (notions.stability) r.sincere_stability = outcome_sincerely_stable(eval, sincere, putative);
  return r;
}

}  // namespace ssm

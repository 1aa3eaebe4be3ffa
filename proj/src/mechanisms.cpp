#include "ssm/mechanisms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ssm {

GSTrace gale_shapley(const Profile& p, Side proposing) {
  Side receiving = opposite(proposing);
  int np = p.side_size(proposing), nr = p.side_size(receiving);
  GSTrace trace;
  // next[i]: position in i's list to propose from; holds[j]: proposer held by j.
  std::vector<int> next(np, 0), holds(nr, -1);
  std::deque<int> free;
  for (int i = 0; i < np; ++i) free.push_back(i);
  int self = p.self_code(proposing);
  while (!free.empty()) {
    int i = free.front();
    free.pop_front();
    AgentId ai{proposing, i};
    while (next[i] < static_cast<int>(p.list_of(ai).size())) {
      int target = p.list_of(ai)[next[i]++];
      if (target == self) break;  // prefers staying single to proposing further
      AgentId at{receiving, target};
      int held = holds[target];
      int held_code = held >= 0 ? held : p.self_code(receiving);
      if (p.prefers(at, i, held_code)) {
        holds[target] = i;
        trace.events.push_back({i, target, true, held});
        if (held >= 0) free.push_back(held);
        break;
      }
      trace.events.push_back({i, target, false, -1});
    }
  }
  std::vector<int> prop_to(np, -1);
  for (int j = 0; j < nr; ++j)
    if (holds[j] >= 0) prop_to[holds[j]] = j;
  if (proposing == Side::Men) {
    trace.result = Matching::from_man_vector(std::move(prop_to), nr);
  } else {
    Matching mu = Matching::all_self(nr, np);
    for (int w = 0; w < np; ++w)
      if (prop_to[w] >= 0) {
        mu.woman_to[w] = prop_to[w];
        mu.man_to[prop_to[w]] = w;
      }
    trace.result = std::move(mu);
  }
  return trace;
}

Matching gale_shapley_matching(const Profile& p, Side proposing) {
  return gale_shapley(p, proposing).result;
}

namespace {

// Assign women to men one man at a time, pruning branches where the pair is
// not individually rational for either endpoint; stability is re-checked on
// complete assignments only.
void enumerate_stable_rec(const Profile& p, int m, std::vector<int>& man_to,
                          std::vector<bool>& woman_used, std::vector<Matching>& out) {
  if (m == p.num_men()) {
    Matching mu = Matching::from_man_vector(man_to, p.num_women());
    if (blocking_pairs(p, mu).empty()) out.push_back(std::move(mu));
    return;
  }
  AgentId am{Side::Men, m};
  int mself = p.self_code(Side::Men);
  man_to[m] = -1;
  enumerate_stable_rec(p, m + 1, man_to, woman_used, out);
  for (int w = 0; w < p.num_women(); ++w) {
    if (woman_used[w]) continue;
    if (!p.prefers(am, w, mself)) continue;
    AgentId aw{Side::Women, w};
    if (!p.prefers(aw, m, p.self_code(Side::Women))) continue;
    man_to[m] = w;
    woman_used[w] = true;
    enumerate_stable_rec(p, m + 1, man_to, woman_used, out);
    woman_used[w] = false;
    man_to[m] = -1;
  }
}

}  // namespace

std::vector<Matching> enumerate_stable(const Profile& p) {
  std::vector<Matching> out;
  std::vector<int> man_to(p.num_men(), -1);
  std::vector<bool> woman_used(p.num_women(), false);
  enumerate_stable_rec(p, 0, man_to, woman_used, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_matchings_rec(int m, int nm, int nw, std::vector<int>& man_to,
                             std::vector<bool>& used, std::vector<Matching>& out) {
  if (m == nm) {
    out.push_back(Matching::from_man_vector(man_to, nw));
    return;
  }
  man_to[m] = -1;
  enumerate_matchings_rec(m + 1, nm, nw, man_to, used, out);
  for (int w = 0; w < nw; ++w) {
    if (used[w]) continue;
    man_to[m] = w;
    used[w] = true;
    enumerate_matchings_rec(m + 1, nm, nw, man_to, used, out);
    used[w] = false;
    man_to[m] = -1;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int nm, int nw) {
  std::vector<Matching> out;
  std::vector<int> man_to(nm, -1);
  std::vector<bool> used(nw, false);
  enumerate_matchings_rec(0, nm, nw, man_to, used, out);
  return out;
}

int egalitarian_cost(const Profile& p, const Matching& mu) {
  int total = 0;
  for (AgentId y : p.agents()) total += p.cost_rank(y, mu.partner_code(p, y));
  return total;
}

std::vector<Matching> egalitarian_argmin(const Profile& p) {
  auto stable = enumerate_stable(p);
  int best = -1;
  std::vector<Matching> out;
  for (auto& mu : stable) {
    int c = egalitarian_cost(p, mu);
    if (out.empty() || c < best) {
      best = c;
      out.clear();
    }
    if (c == best) out.push_back(mu);
  }
  return out;
}

MatchDistribution MatchDistribution::point(Matching mu) {
  return {{{std::move(mu), Rat(1)}}};
}

MatchDistribution MatchDistribution::uniform(std::vector<Matching> mus) {
  if (mus.empty()) throw std::invalid_argument("uniform distribution over empty set");
  std::sort(mus.begin(), mus.end());
  MatchDistribution d;
  Rat p(1, static_cast<std::int64_t>(mus.size()));
  for (auto& mu : mus) d.support.emplace_back(std::move(mu), p);
  return d;
}

Rat MatchDistribution::marginal(const Profile& p, AgentId y, int code) const {
  Rat total(0);
  for (const auto& [mu, pr] : support)
    if (mu.partner_code(p, y) == code) total += pr;
  return total;
}

std::vector<int> MatchDistribution::support_codes(const Profile& p, AgentId y) const {
  std::vector<int> codes;
  for (const auto& [mu, pr] : support) codes.push_back(mu.partner_code(p, y));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

Mechanism make_mechanism(const std::string& name) {
  Mechanism m;
  m.name = name;
  if (name == "gs-man") {
    m.deterministic = m.monotonic = m.ins = true;
    m.run = [](const Profile& p) {
      return MatchDistribution::point(gale_shapley_matching(p, Side::Men));
    };
  } else if (name == "gs-woman") {
    m.deterministic = m.monotonic = m.ins = true;
    m.run = [](const Profile& p) {
      return MatchDistribution::point(gale_shapley_matching(p, Side::Women));
    };
  } else if (name == "uniform") {
    m.fully_randomized = true;
    m.run = [](const Profile& p) { return MatchDistribution::uniform(enumerate_stable(p)); };
  } else if (name == "uniform-egal") {
    m.monotonic = m.ins = true;
    m.run = [](const Profile& p) { return MatchDistribution::uniform(egalitarian_argmin(p)); };
  } else if (name == "egal-lex") {
    m.deterministic = m.monotonic = m.ins = true;
    m.run = [](const Profile& p) {
      auto arg = egalitarian_argmin(p);
      return MatchDistribution::point(arg.front());  // argmin is sorted; pick least
    };
  } else {
    throw std::invalid_argument("unknown mechanism '" + name + "'");
  }
  return m;
}

std::vector<std::string> mechanism_names() {
  return {"gs-man", "gs-woman", "uniform", "uniform-egal", "egal-lex"};
}

const MatchDistribution& Evaluator::operator()(const Profile& p) {
  auto key = p.key();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(std::move(key), mech_.run(p)).first->second;
}

}  // namespace ssm

#include "ssm/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ssm {

namespace {

std::vector<int> truncated_list(const Profile& sincere, AgentId y, int partner_code) {
  const auto& sin = sincere.list_of(y);
  int self = sincere.self_code(y.side);
  if (partner_code == self) return sin;
  std::vector<int> list;
  for (int c : sin) {
    if (c == self) continue;
    list.push_back(c);
    if (c == partner_code) break;
  }
  list.push_back(self);
  for (int c : sin)
    if (c != self && sincere.prefers(y, partner_code, c)) list.push_back(c);
  return list;
}

}  // namespace

Profile truncate_at(const Profile& sincere, const Matching& mu, Side truncating) {
  if (!is_stable(sincere, mu))
    throw std::invalid_argument("truncation seed matching is not stable");
  Profile p = sincere;
  for (AgentId y : sincere.agents()) {
    if (y.side != truncating) continue;
    p = p.with_list(y, truncated_list(sincere, y, mu.partner_code(sincere, y)));
  }
  return p;
}

Profile truncate_at(const Profile& sincere, const Matching& mu) {
  return truncate_at(truncate_at(sincere, mu, Side::Men), mu, Side::Women);
}

std::pair<std::vector<Violation>, std::vector<Violation>> inv_sets(Evaluator& eval,
                                                                   const GameConfig& cfg,
                                                                   const Profile& sincere,
                                                                   const Profile& putative) {
  std::vector<Violation> inv, inv_prime;
  const auto current = eval(putative);
  for (AgentId y : sincere.agents()) {
    if (cfg.is_truth_teller(y)) continue;
    auto codes = current.support_codes(sincere, y);
    if (codes.size() != 1)
      throw std::invalid_argument("agent outcome is not deterministic; Inv is undefined");
    int partner = codes.front();
    int k_current = kendall_tau(sincere, putative, y);
    // Sincere order of the weakly-above-partner set, which Inv' entries must
    // reproduce as their prefix.
    std::vector<int> honest_prefix = truncated_list(sincere, y, partner);
    int prefix_len = 0;
    for (int c : honest_prefix) {
      ++prefix_len;
      if (c == partner) break;
    }
    for (auto& list : all_lists(sincere, y)) {
      int k_new = kendall_tau(sincere.list_of(y), list);
      if (k_new >= k_current) continue;
      const auto& dist = eval(putative.with_list(y, list));
      if (has_strictly_worse(sincere, y, dist, partner)) continue;
      bool in_prime =
          std::equal(honest_prefix.begin(), honest_prefix.begin() + prefix_len, list.begin());
      Violation v{y, std::move(list), k_new, in_prime};
      if (in_prime) inv_prime.push_back(v);
      inv.push_back(std::move(v));
    }
  }
  return {std::move(inv), std::move(inv_prime)};
}

int iteration_bound(const Profile& sincere) {
  // Total pair-inversion capacity: each list over k+1 codes holds at most
  // C(k+1, 2) inversions against the sincere order.
  int nm = sincere.num_men(), nw = sincere.num_women();
  return nm * (nw + 1) * nw / 2 + nw * (nm + 1) * nm / 2;
}

std::pair<Profile, SearchTrace> equilibrium_find(Evaluator& eval, const GameConfig& cfg,
                                                 const Profile& sincere,
                                                 const Matching& target) {
  const std::string& mech = eval.mechanism().name;
  if (mech != "uniform" && mech != "gs-man")
    throw std::invalid_argument("equilibrium search supports uniform and gs-man only");
  if (!is_stable(sincere, target))
    throw std::invalid_argument("target matching is not stable under the sincere profile");
  Profile work = sincere;
  if (mech == "gs-man") {
    if (!(target == gale_shapley_matching(sincere, Side::Women)))
      throw std::invalid_argument("gs-man search requires the woman-optimal target");
    work = truncate_at(sincere, target, Side::Women);
  } else {
    work = truncate_at(sincere, target);
  }
  SearchTrace trace;
  trace.iteration_bound = iteration_bound(sincere);
  auto phi = [&](const Profile& p) { return kendall_tau_total(sincere, p); };
  while (true) {
    auto [inv, inv_prime] = inv_sets(eval, cfg, sincere, work);
    if (inv_prime.empty()) break;
    // Deterministic pick: least agent, then greatest honesty gain, then
    // lexicographically least list.
    const Violation* best = nullptr;
    for (const auto& v : inv_prime) {
      if (!best || v.agent < best->agent ||
          (v.agent == best->agent &&
           (v.k_new < best->k_new || (v.k_new == best->k_new && v.list < best->list))))
        best = &v;
    }
    SearchStep step{*best, phi(work), 0};
    work = work.with_list(best->agent, best->list);
    step.phi_after = phi(work);
    if (step.phi_after >= step.phi_before)
      throw std::logic_error("potential failed to decrease");
    trace.steps.push_back(std::move(step));
    if (static_cast<int>(trace.steps.size()) > trace.iteration_bound)
      throw std::logic_error("iteration bound exceeded");
  }
  // Certify the output: Nash, minimally dishonest everywhere, outcome = target.
  bool ok = true;
  const auto& out = eval(work);
  ok = ok && out.deterministic() && out.support.front().first == target;
  for (const auto& v : is_nash(eval, cfg, sincere, work)) ok = ok && v.pass && v.error.empty();
  for (AgentId y : sincere.agents()) {
    auto v = is_minimally_dishonest(eval, cfg, sincere, work, y);
    ok = ok && v.pass && v.error.empty();
  }
  ok = ok && outcome_sincerely_stable(eval, sincere, work).stable;
  trace.certified = ok;
  trace.final_profile = work;
  return {std::move(work), std::move(trace)};
}

std::vector<FoundEquilibrium> enumerate_equilibria(Evaluator& eval, const GameConfig& cfg,
                                                   const Profile& sincere,
                                                   const NotionSet& notions, PruneMode prune) {
  int nm = sincere.num_men(), nw = sincere.num_women();
  std::vector<FoundEquilibrium> found;
  std::set<std::string> seen;  // a profile can surface under several seeds
  auto consider = [&](const Profile& candidate, const Matching& outcome) {
    if (!seen.insert(candidate.key()).second) return;
    // Cheap-first verdict chain; any failure of a requested notion drops the
    // candidate (minimal dishonesty implies the local variant, so it runs last).
    bool want_lmd = notions.localmindis || notions.mindis;
    if (want_lmd) {
      for (AgentId y : sincere.agents()) {
        auto v = is_locally_minimally_dishonest(eval, cfg, sincere, candidate, y);
        if (!v.pass || !v.error.empty()) return;
      }
    }
    if (notions.nash || notions.strong || notions.mindis) {
      for (const auto& v : is_nash(eval, cfg, sincere, candidate))
        if (!v.pass || !v.error.empty()) return;
    }
    if (notions.mindis) {
      for (AgentId y : sincere.agents()) {
        auto v = is_minimally_dishonest(eval, cfg, sincere, candidate, y);
        if (!v.pass || !v.error.empty()) return;
      }
    }
    if (notions.partial) {
      for (AgentId y : sincere.agents()) {
        auto v = is_partially_honest(eval, cfg, sincere, candidate, y);
        if (!v.pass || !v.error.empty()) return;
      }
    }
    if (notions.strong) {
      if (!check_strong(eval, cfg, sincere, candidate).pass) return;
    }
    FoundEquilibrium fe{candidate, outcome,
                        check_equilibrium(eval, cfg, sincere, candidate, notions)};
    found.push_back(std::move(fe));
  };

  if (prune == PruneMode::None) {
    if (nm > 2 || nw > 2)
      throw SizeBoundError("unpruned enumeration is limited to side size 2");
    std::vector<AgentId> agents = sincere.agents();
    std::vector<std::vector<std::vector<int>>> spaces;
    for (AgentId y : agents)
      spaces.push_back(cfg.is_truth_teller(y)
                           ? std::vector<std::vector<int>>{sincere.list_of(y)}
                           : all_lists(sincere, y));
    std::vector<size_t> idx(agents.size(), 0);
    while (true) {
      Profile candidate = sincere;
      for (size_t i = 0; i < agents.size(); ++i)
        candidate = candidate.with_list(agents[i], spaces[i][idx[i]]);
      consider(candidate, eval(candidate).support.front().first);
      size_t i = 0;
      while (i < agents.size() && ++idx[i] == spaces[i].size()) idx[i++] = 0;
      if (i == agents.size()) break;
    }
    return found;
  }

  const auto& mech = eval.mechanism();
  if (!(mech.fully_randomized || (mech.monotonic && mech.ins)))
    throw std::invalid_argument(
        "structural pruning is lossless only for monotonic+INS or fully-randomized mechanisms");
  // Seed with every matching; each agent's list is forced down to their
  // partner (sincere above-partner set in sincere order, then the partner),
  // the tail ranges over all permutations. Keep candidates the mechanism maps
  // to exactly the seeding matching.
  for (const Matching& mu : enumerate_matchings(nm, nw)) {
    std::vector<AgentId> agents = sincere.agents();
    std::vector<std::vector<int>> prefixes;
    std::vector<std::vector<std::vector<int>>> tails;
    for (AgentId y : agents) {
      int partner = mu.partner_code(sincere, y);
      const auto& sin = sincere.list_of(y);
      std::vector<int> prefix;
      for (int c : sin) {
        if (sincere.prefers(y, c, partner)) prefix.push_back(c);
      }
      prefix.push_back(partner);
      std::vector<int> rest;
      for (int c : sin)
        if (std::find(prefix.begin(), prefix.end(), c) == prefix.end()) rest.push_back(c);
      std::sort(rest.begin(), rest.end());
      std::vector<std::vector<int>> perms;
      if (cfg.is_truth_teller(y)) {
        // Truth-tellers are pinned; their sincere list must fit the seed.
        std::vector<int> tail(sin.begin() + prefix.size(), sin.end());
        if (std::equal(prefix.begin(), prefix.end(), sin.begin())) perms.push_back(tail);
      } else if (rest.empty()) {
        perms.push_back({});
      } else {
        do {
          perms.push_back(rest);
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
      if (perms.empty()) break;
      prefixes.push_back(std::move(prefix));
      tails.push_back(std::move(perms));
    }
    if (tails.size() != agents.size()) continue;  // a truth-teller ruled this seed out
    std::vector<size_t> idx(agents.size(), 0);
    while (true) {
      Profile candidate = sincere;
      for (size_t i = 0; i < agents.size(); ++i) {
        auto list = prefixes[i];
        list.insert(list.end(), tails[i][idx[i]].begin(), tails[i][idx[i]].end());
        candidate = candidate.with_list(agents[i], std::move(list));
      }
      if (is_stable(candidate, mu)) {
        const auto& dist = eval(candidate);
        bool accept;
        if (cfg.truth_tellers.empty()) {
          accept = dist.deterministic() && dist.support.front().first == mu;
        } else {
          // With truth-tellers only strategic agents need deterministic
          // outcomes; the seed must be in the support and agree with them.
          accept = std::find_if(dist.support.begin(), dist.support.end(),
                                [&](const auto& pr) { return pr.first == mu; }) !=
                   dist.support.end();
          for (AgentId y : agents) {
            if (!accept) break;
            if (cfg.is_truth_teller(y)) continue;
            auto codes = dist.support_codes(sincere, y);
            accept = codes.size() == 1 && codes.front() == mu.partner_code(sincere, y);
          }
        }
        if (accept) consider(candidate, mu);
      }
      size_t i = 0;
      while (i < agents.size() && ++idx[i] == tails[i].size()) idx[i++] = 0;
      if (i == agents.size()) break;
    }
  }
  return found;
}

}  // namespace ssm

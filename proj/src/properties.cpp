#include "ssm/properties.hpp"

#include <sstream>
#include <stdexcept>

#include "ssm/random_gen.hpp"

namespace ssm {

std::vector<SwapMove> all_up_moves(const Profile& p) {
  std::vector<SwapMove> moves;
  for (AgentId y : p.agents()) {
    const auto& list = p.list_of(y);
    for (size_t k = 1; k < list.size(); ++k)
      moves.push_back({y, list[k], static_cast<int>(k) - 1, list[k - 1]});
  }
  return moves;
}

Profile apply_move(const Profile& p, const SwapMove& move) {
  auto list = p.list_of(move.agent);
  if (move.new_pos < 0 || move.new_pos + 1 >= static_cast<int>(list.size()) ||
      list[move.new_pos] != move.displaced || list[move.new_pos + 1] != move.promoted)
    throw std::invalid_argument("move does not match the profile");
  std::swap(list[move.new_pos], list[move.new_pos + 1]);
  return p.with_list(move.agent, std::move(list));
}

namespace {

std::string marginal_detail(const Profile& p, AgentId y, int code, const Rat& before,
                            const Rat& after) {
  std::ostringstream out;
  out << "agent " << p.name_of(y) << ", code " << code << ": p=" << to_string(before)
      << " -> " << to_string(after);
  return out.str();
}

}  // namespace

PropertyVerdict check_monotonic_at(Evaluator& eval, const Profile& p, const SwapMove& move) {
  PropertyVerdict v{"monotonic"};
  Profile q = apply_move(p, move);
  Rat before = eval(p).marginal(p, move.agent, move.promoted);
  Rat after = eval(q).marginal(q, move.agent, move.promoted);
  v.budget = 1;
  if (after < before) {
    v.result = PropertyResult::Violated;
    v.witness = {p, move, marginal_detail(p, move.agent, move.promoted, before, after)};
  }
  return v;
}

PropertyVerdict check_ins_at(Evaluator& eval, const Profile& p, const SwapMove& move) {
  PropertyVerdict v{"ins"};
  v.budget = 1;
  const auto& before = eval(p);
  if (before.marginal(p, move.agent, move.displaced) > Rat(0)) return v;  // vacuous
  Profile q = apply_move(p, move);
  const auto& after = eval(q);
  for (int code = 0; code < p.universe_size(move.agent.side); ++code) {
    if (code == move.promoted) continue;
    Rat b = before.marginal(p, move.agent, code);
    Rat a = after.marginal(q, move.agent, code);
    if (a > b) {
      v.result = PropertyResult::Violated;
      v.witness = {p, move, marginal_detail(p, move.agent, code, b, a)};
      return v;
    }
  }
  return v;
}

PropertyVerdict check_fully_randomized_at(Evaluator& eval, const Profile& p) {
  PropertyVerdict v{"fully-randomized"};
  v.budget = 1;
  const auto& dist = eval(p);
  auto stable = enumerate_stable(p);
  for (AgentId y : p.agents()) {
    for (int code = 0; code < p.universe_size(y.side); ++code) {
      if (dist.marginal(p, y, code) != Rat(1)) continue;
      for (const auto& mu : stable) {
        if (mu.partner_code(p, y) != code) {
          std::ostringstream out;
          out << "agent " << p.name_of(y) << " matched to code " << code
              << " w.p. 1, but a stable matching assigns code " << mu.partner_code(p, y);
          v.result = PropertyResult::Violated;
          v.witness = {p, std::nullopt, out.str()};
          return v;
        }
      }
    }
  }
  return v;
}

PropertyVerdict property_sweep(const Mechanism& mech, const std::string& property, int n,
                               int trials, std::uint64_t seed) {
  PropertyVerdict agg{property};
  std::mt19937_64 rng(seed);
  Evaluator eval(mech);
  for (int t = 0; t < trials; ++t) {
    Profile p = random_instance(n, n, rng);
    if (property == "fully-randomized") {
      auto v = check_fully_randomized_at(eval, p);
      agg.budget += v.budget;
      if (v.result == PropertyResult::Violated) {
        agg.result = v.result;
        agg.witness = v.witness;
        return agg;
      }
      continue;
    }
    for (const auto& move : all_up_moves(p)) {
      PropertyVerdict v = property == "monotonic" ? check_monotonic_at(eval, p, move)
                          : property == "ins"
                              ? check_ins_at(eval, p, move)
                              : throw std::invalid_argument("unknown property '" + property + "'");
      agg.budget += v.budget;
      if (v.result == PropertyResult::Violated) {
        agg.result = v.result;
        agg.witness = v.witness;
        return agg;
      }
    }
  }
  return agg;
}

}  // namespace ssm

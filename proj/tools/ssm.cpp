// Command-line front end for the strategic stable-matching toolkit.
//
// Exit codes: 0 = everything checked holds, 1 = a violation or failed check
// was found, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssm/college.hpp"
#include "ssm/experiments.hpp"
#include "ssm/fixtures.hpp"
#include "ssm/properties.hpp"
#include "ssm/random_gen.hpp"
#include "ssm/search.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ssm::ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ssm::GameConfig make_config(const ssm::Profile& sincere, const std::string& honesty,
                            const std::string& penalty, const std::string& profitability,
                            const std::string& swaps, const std::string& truth_tellers,
                            int max_n) {
  ssm::GameConfig cfg;
  cfg.max_side = max_n;
  if (honesty == "full")
    cfg.honesty = ssm::HonestyMode::FullOrder;
  else if (honesty == "trunc")
    cfg.honesty = ssm::HonestyMode::TruncatedP;
  else if (honesty == "hausdorff")
    cfg.honesty = ssm::HonestyMode::Hausdorff;
  else
    throw CLI::ValidationError("--honesty", "expected full|trunc|hausdorff");
  // Penalty as an exact fraction "a/b" or integer.
  auto slash = penalty.find('/');
  if (slash == std::string::npos)
    cfg.penalty = ssm::Rat(std::stoll(penalty));
  else
    cfg.penalty = ssm::Rat(std::stoll(penalty.substr(0, slash)),
                           std::stoll(penalty.substr(slash + 1)));
  cfg.notion = profitability == "guaranteed" ? ssm::Profitability::Guaranteed
                                             : ssm::Profitability::Optimistic;
  cfg.local_swaps = swaps == "adjacent" ? ssm::SwapScope::Adjacent : ssm::SwapScope::Any;
  if (!truth_tellers.empty()) {
    std::stringstream ss(truth_tellers);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      int m = sincere.index_of_name(name, ssm::Side::Men);
      if (m >= 0) {
        cfg.truth_tellers.push_back({ssm::Side::Men, m});
        continue;
      }
      int w = sincere.index_of_name(name, ssm::Side::Women);
      if (w < 0) throw CLI::ValidationError("--truth-tellers", "unknown agent '" + name + "'");
      cfg.truth_tellers.push_back({ssm::Side::Women, w});
    }
  }
  return cfg;
}

json matching_json(const ssm::Profile& p, const ssm::Matching& mu) {
  return ssm::format_matching(p, mu);
}

json assignment_json(const ssm::CollegeInstance& inst, const ssm::Assignment& mu) {
  json j = json::object();
  for (int c = 0; c < inst.num_colleges(); ++c) {
    json names = json::array();
    for (int s : mu.college_to[c]) names.push_back(inst.students[s]);
    j[inst.colleges[c]] = names;
  }
  json unmatched = json::array();
  for (int s = 0; s < inst.num_students(); ++s)
    if (mu.student_to[s] < 0) unmatched.push_back(inst.students[s]);
  j["unmatched"] = unmatched;
  return j;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string verdict_line(const ssm::Profile& p, const char* notion,
                         const std::vector<ssm::AgentVerdict>& vs) {
  std::ostringstream out;
  out << notion << ": ";
  bool ok = true;
  for (const auto& v : vs)
    if (!v.pass || !v.error.empty()) {
      ok = false;
      out << p.name_of(v.agent) << (v.error.empty() ? " fails " : " error ")
          << (v.error.empty() ? "" : v.error) << "; ";
    }
  if (ok) out << "pass";
  out << '\n';
  return out.str();
}

json verdicts_json(const ssm::Profile& p, const std::vector<ssm::AgentVerdict>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json jv;
    jv["agent"] = p.name_of(v.agent);
    jv["pass"] = v.pass;
    if (!v.error.empty()) jv["error"] = v.error;
    if (v.witness_list) {
      json w = json::array();
      for (int c : *v.witness_list)
        w.push_back(c == p.self_code(v.agent.side)
                        ? "@"
                        : p.name_of({ssm::opposite(v.agent.side), c}));
      jv["witness"] = w;
    }
    arr.push_back(jv);
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strategic stable matching toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand
  bool as_json = false;
  std::uint64_t seed = 1;
  int max_n = ssm::kDefaultMaxSide;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--max-n", max_n, "hard cap on side size for exhaustive work");

  // --- stable -------------------------------------------------------------
  auto* stable_cmd = app.add_subcommand("stable", "check a matching, or run deferred acceptance");
  std::string stable_file, stable_matching;
  bool many_to_one = false, show_trace = false;
  stable_cmd->add_option("file", stable_file, "instance file")->required();
  stable_cmd->add_option("--matching", stable_matching,
                         "matching to check, e.g. 'm1:w2,m2:w1' (omit: run DA both sides)");
  stable_cmd->add_flag("--many-to-one", many_to_one, "college-admissions instance");
  stable_cmd->add_flag("--trace", show_trace, "print every proposal");

  // --- enumerate ------------------------------------------------------------
  auto* enum_cmd = app.add_subcommand("enumerate", "list all stable matchings");
  std::string enum_file;
  bool enum_college = false;
  enum_cmd->add_option("file", enum_file, "instance file")->required();
  enum_cmd->add_flag("--many-to-one", enum_college, "college-admissions instance");

  // --- eq -------------------------------------------------------------------
  auto* eq_cmd = app.add_subcommand("eq", "equilibrium analysis");
  eq_cmd->require_subcommand(1);
  std::string mechanism = "uniform", honesty = "full", penalty = "0",
              profitability = "optimistic", swaps = "any", truth_tellers, notions_csv = "nash";

  auto* find_cmd = eq_cmd->add_subcommand("find", "search for an equilibrium with a target outcome");
  std::string find_file, find_target;
  find_cmd->add_option("file", find_file, "sincere instance file")->required();
  find_cmd->add_option("--target", find_target, "target matching (default: woman-optimal)");
  find_cmd->add_option("--mechanism", mechanism, "uniform|gs-man");

  auto* check_cmd = eq_cmd->add_subcommand("check", "test a submitted profile against notions");
  std::string check_sincere, check_putative;
  check_cmd->add_option("sincere", check_sincere, "sincere instance file")->required();
  check_cmd->add_option("putative", check_putative, "submitted instance file")->required();
  check_cmd->add_option("--mechanism", mechanism, "mechanism name");
  check_cmd->add_option("--notions", notions_csv,
                        "csv of nash,mindis,localmindis,partial,trunc,strong,stability");
  check_cmd->add_option("--honesty", honesty, "full|trunc|hausdorff");
  check_cmd->add_option("--penalty", penalty, "p for the truncated metric, e.g. 1/2");
  check_cmd->add_option("--profitability", profitability, "optimistic|guaranteed");
  check_cmd->add_option("--local-swaps", swaps, "any|adjacent");
  check_cmd->add_option("--truth-tellers", truth_tellers, "csv of agent names pinned to sincere");

  auto* eenum_cmd = eq_cmd->add_subcommand("enumerate", "list all equilibria of an instance");
  std::string eenum_file, prune = "corollary3";
  eenum_cmd->add_option("file", eenum_file, "sincere instance file")->required();
  eenum_cmd->add_option("--mechanism", mechanism, "mechanism name");
  eenum_cmd->add_option("--notions", notions_csv, "csv of notions every hit must satisfy");
  eenum_cmd->add_option("--prune", prune, "corollary3|none");
  eenum_cmd->add_option("--truth-tellers", truth_tellers, "csv of agent names pinned to sincere");
  eenum_cmd->add_option("--honesty", honesty, "full|trunc|hausdorff");
  eenum_cmd->add_option("--penalty", penalty, "p for the truncated metric");

  // --- props ---------------------------------------------------------------
  auto* props_cmd = app.add_subcommand("props", "randomised mechanism-property sweep");
  std::string prop_mech = "uniform", prop_name = "monotonic";
  int prop_n = 3, prop_trials = 20;
  props_cmd->add_option("--mechanism", prop_mech, "mechanism name")->required();
  props_cmd->add_option("--property", prop_name, "monotonic|ins|fully-randomized")->required();
  props_cmd->add_option("--n", prop_n, "side size");
  props_cmd->add_option("--trials", prop_trials, "random instances");

  // --- repro -----------------------------------------------------------------
  auto* repro_cmd = app.add_subcommand("repro", "replay a bundled case study");
  std::string repro_case;
  bool repro_list = false;
  repro_cmd->add_option("case", repro_case, "case id");
  repro_cmd->add_flag("--list", repro_list, "list available case ids");

  // --- sweep -----------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand("sweep", "randomised theorem verification sweep");
  std::string sweep_id, sweep_mech = "uniform";
  int sweep_n = 3, sweep_trials = 25;
  sweep_cmd->add_option("id", sweep_id, "thm1|thm3|thm4|thm6|placement")->required();
  sweep_cmd->add_option("--mechanism", sweep_mech, "mechanism name");
  sweep_cmd->add_option("--n", sweep_n, "side size");
  sweep_cmd->add_option("--trials", sweep_trials, "random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*stable_cmd) {
      if (many_to_one) {
        ssm::CollegeInstance inst = ssm::parse_college_instance(slurp(stable_file));
        auto student_opt = ssm::college_da(inst, ssm::Side::Men);
        auto college_opt = ssm::college_da(inst, ssm::Side::Women);
        json j;
        j["student_optimal"] = assignment_json(inst, student_opt);
        j["college_optimal"] = assignment_json(inst, college_opt);
        std::ostringstream out;
        out << "student-optimal: " << j["student_optimal"].dump() << '\n'
            << "college-optimal: " << j["college_optimal"].dump() << '\n';
        emit(as_json, j, out.str());
        return 0;
      }
      ssm::Profile p = ssm::parse_profile(slurp(stable_file));
      if (!stable_matching.empty()) {
        ssm::Matching mu = ssm::parse_matching(p, stable_matching);
        auto blocks = ssm::blocking_pairs(p, mu);
        bool ir = ssm::is_individually_rational(p, mu);
        json j;
        j["stable"] = ir && blocks.empty();
        j["individually_rational"] = ir;
        json jb = json::array();
        for (auto [m, w] : blocks)
          jb.push_back({p.name_of({ssm::Side::Men, m}), p.name_of({ssm::Side::Women, w})});
        j["blocking_pairs"] = jb;
        std::ostringstream out;
        out << (ir && blocks.empty() ? "stable" : "unstable") << '\n';
        for (auto [m, w] : blocks)
          out << "blocking pair: " << p.name_of({ssm::Side::Men, m}) << " "
              << p.name_of({ssm::Side::Women, w}) << '\n';
        if (!ir) out << "not individually rational\n";
        emit(as_json, j, out.str());
        return ir && blocks.empty() ? 0 : 1;
      }
      json j;
      std::ostringstream out;
      for (auto side : {ssm::Side::Men, ssm::Side::Women}) {
        ssm::GSTrace t = ssm::gale_shapley(p, side);
        const char* label = side == ssm::Side::Men ? "man_optimal" : "woman_optimal";
        j[label] = matching_json(p, t.result);
        j[std::string(label) + "_proposals"] = t.proposal_count();
        out << label << ": " << ssm::format_matching(p, t.result) << "  ("
            << t.proposal_count() << " proposals)\n";
        if (show_trace)
          for (const auto& e : t.events)
            out << "  " << p.name_of({side, e.proposer}) << " -> "
                << p.name_of({ssm::opposite(side), e.target})
                << (e.accepted ? " accepted" : " rejected")
                << (e.displaced >= 0
                        ? " displacing " + p.name_of({side, e.displaced})
                        : "")
                << '\n';
      }
      emit(as_json, j, out.str());
      return 0;
    }

    if (*enum_cmd) {
      json j;
      std::ostringstream out;
      if (enum_college) {
        ssm::CollegeInstance inst = ssm::parse_college_instance(slurp(enum_file));
        json arr = json::array();
        for (const auto& mu : ssm::enumerate_college_stable(inst)) {
          arr.push_back(assignment_json(inst, mu));
          out << arr.back().dump() << '\n';
        }
        j["stable"] = arr;
        j["count"] = arr.size();
      } else {
        ssm::Profile p = ssm::parse_profile(slurp(enum_file));
        auto argmin = ssm::egalitarian_argmin(p);
        json arr = json::array();
        for (const auto& mu : ssm::enumerate_stable(p)) {
          bool egal = std::find(argmin.begin(), argmin.end(), mu) != argmin.end();
          json e;
          e["matching"] = matching_json(p, mu);
          e["egalitarian_cost"] = ssm::egalitarian_cost(p, mu);
          e["egalitarian_min"] = egal;
          arr.push_back(e);
          out << ssm::format_matching(p, mu) << "  cost=" << ssm::egalitarian_cost(p, mu)
              << (egal ? "  (egalitarian)" : "") << '\n';
        }
        j["stable"] = arr;
        j["count"] = arr.size();
      }
      emit(as_json, j, out.str());
      return 0;
    }

    if (*find_cmd) {
      ssm::Profile sincere = ssm::parse_profile(slurp(find_file));
      ssm::Matching target = find_target.empty()
                                 ? ssm::gale_shapley_matching(sincere, ssm::Side::Women)
                                 : ssm::parse_matching(sincere, find_target);
      ssm::Evaluator eval(ssm::make_mechanism(mechanism));
      ssm::GameConfig cfg;
      cfg.max_side = max_n;
      auto [profile, trace] = ssm::equilibrium_find(eval, cfg, sincere, target);
      json j;
      j["certified"] = trace.certified;
      j["iterations"] = trace.steps.size();
      j["iteration_bound"] = trace.iteration_bound;
      j["target"] = matching_json(sincere, target);
      j["profile"] = ssm::serialize_profile(profile);
      std::ostringstream out;
      out << "target: " << ssm::format_matching(sincere, target) << '\n';
      for (const auto& s : trace.steps)
        out << "  replace " << sincere.name_of(s.chosen.agent) << " (sum-distance "
            << s.phi_before << " -> " << s.phi_after << ")\n";
      out << (trace.certified ? "certified equilibrium" : "NOT certified") << " after "
          << trace.steps.size() << " steps (bound " << trace.iteration_bound << ")\n"
          << ssm::serialize_profile(profile);
      emit(as_json, j, out.str());
      return trace.certified ? 0 : 1;
    }

    if (*check_cmd) {
      ssm::Profile sincere = ssm::parse_profile(slurp(check_sincere));
      ssm::Profile putative = ssm::parse_profile(slurp(check_putative));
      ssm::GameConfig cfg =
          make_config(sincere, honesty, penalty, profitability, swaps, truth_tellers, max_n);
      ssm::Evaluator eval(ssm::make_mechanism(mechanism));
      ssm::NotionSet notions = ssm::NotionSet::parse(notions_csv);
      auto report = ssm::check_equilibrium(eval, cfg, sincere, putative, notions);
      json j;
      j["all_pass"] = report.all_pass();
      std::ostringstream out;
      auto section = [&](const char* name, const std::vector<ssm::AgentVerdict>& vs) {
        if (vs.empty()) return;
        j[name] = verdicts_json(sincere, vs);
        out << verdict_line(sincere, name, vs);
      };
      section("nash", report.nash);
      section("mindis", report.min_dishonest);
      section("localmindis", report.local_min_dishonest);
      section("partial", report.partial);
      section("trunc", report.truncated);
      if (report.strong) {
        j["strong"] = report.strong->pass;
        out << "strong: " << (report.strong->pass ? "pass" : "fail") << '\n';
      }
      if (report.sincere_stability) {
        j["sincerely_stable"] = report.sincere_stability->stable;
        out << "sincerely stable outcome: "
            << (report.sincere_stability->stable ? "yes" : "no") << '\n';
      }
      out << (report.all_pass() ? "PASS" : "FAIL") << '\n';
      emit(as_json, j, out.str());
      return report.all_pass() ? 0 : 1;
    }

    if (*eenum_cmd) {
      ssm::Profile sincere = ssm::parse_profile(slurp(eenum_file));
      ssm::GameConfig cfg =
          make_config(sincere, honesty, penalty, profitability, swaps, truth_tellers, max_n);
      ssm::Evaluator eval(ssm::make_mechanism(mechanism));
      ssm::NotionSet notions = ssm::NotionSet::parse(notions_csv);
      ssm::PruneMode mode =
          prune == "none" ? ssm::PruneMode::None : ssm::PruneMode::Corollary3;
      auto found = ssm::enumerate_equilibria(eval, cfg, sincere, notions, mode);
      json arr = json::array();
      std::ostringstream out;
      for (const auto& fe : found) {
        json e;
        e["outcome"] = matching_json(sincere, fe.outcome);
        e["profile"] = ssm::serialize_profile(fe.profile);
        arr.push_back(e);
        out << "outcome " << ssm::format_matching(sincere, fe.outcome) << '\n'
            << ssm::serialize_profile(fe.profile) << '\n';
      }
      json j;
      j["equilibria"] = arr;
      j["count"] = arr.size();
      out << found.size() << " equilibria\n";
      emit(as_json, j, out.str());
      return 0;
    }

    if (*props_cmd) {
      auto verdict =
          ssm::property_sweep(ssm::make_mechanism(prop_mech), prop_name, prop_n, prop_trials, seed);
      bool ok = verdict.result == ssm::PropertyResult::NoViolationFound;
      json j;
      j["property"] = verdict.property;
      j["mechanism"] = prop_mech;
      j["violated"] = !ok;
      j["checks"] = verdict.budget;
      if (verdict.witness) {
        j["witness_profile"] = ssm::serialize_profile(verdict.witness->profile);
        j["detail"] = verdict.witness->detail;
      }
      std::ostringstream out;
      out << prop_mech << ' ' << verdict.property << ": "
          << (ok ? "no violation" : "VIOLATED") << " (" << verdict.budget << " checks)\n";
      if (verdict.witness)
        out << verdict.witness->detail << '\n'
            << ssm::serialize_profile(verdict.witness->profile);
      emit(as_json, j, out.str());
      return ok ? 0 : 1;
    }

    if (*repro_cmd) {
      if (repro_list || repro_case.empty()) {
        for (const auto& id : ssm::fixtures::case_ids()) std::cout << id << '\n';
        return repro_list || !repro_case.empty() ? 0 : 2;
      }
      ssm::Report rep = ssm::run_repro(repro_case);
      emit(as_json, json::parse(ssm::report_to_json(rep)), ssm::report_to_text(rep));
      return rep.all_pass() ? 0 : 1;
    }

    if (*sweep_cmd) {
      ssm::Report rep = ssm::run_sweep(sweep_id, sweep_mech, sweep_n, sweep_trials, seed);
      emit(as_json, json::parse(ssm::report_to_json(rep)), ssm::report_to_text(rep));
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const ssm::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

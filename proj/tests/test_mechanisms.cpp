#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "ssm/fixtures.hpp"
#include "ssm/mechanisms.hpp"

using namespace ssm;

TEST_CASE("matching enumeration counts") {
  CHECK(enumerate_matchings(3, 3).size() == 34);
  CHECK(enumerate_matchings(4, 4).size() == 209);
  CHECK(enumerate_matchings(1, 2).size() == 3);
}

TEST_CASE("deferred acceptance trace on the manipulated profile") {
  Profile put = fixtures::profile("thm2", "putative1");
  GSTrace t = gale_shapley(put, Side::Men);
  REQUIRE(t.proposal_count() == 7);
  // First proposal: m1 to w1, declined outright.
  CHECK(t.events[0].proposer == 0);
  CHECK(t.events[0].target == 0);
  CHECK(!t.events[0].accepted);
  CHECK(t.result == parse_matching(put, "m1:w2,m2:w3,m3:w1,m4:w4"));
  // Every acceptance in this run lands on a free woman; refusals are
  // outright rejections rather than displacements.
  for (const auto& e : t.events) CHECK(e.displaced == -1);
}

TEST_CASE("stable sets of the bundled instances") {
  Profile s1 = fixtures::profile("thm2", "sincere1");
  auto stable = enumerate_stable(s1);
  REQUIRE(stable.size() == 3);
  CHECK(stable[0] == parse_matching(s1, "m1:w1,m2:w2,m3:w3,m4:w4"));
  CHECK(stable[1] == parse_matching(s1, "m1:w2,m2:w3,m3:w1,m4:w4"));
  CHECK(stable[2] == parse_matching(s1, "m1:w3,m2:w1,m3:w2,m4:w4"));
  CHECK(enumerate_stable(fixtures::profile("thm2", "sincere2")) == stable);

  Profile p51 = fixtures::profile("prop51", "sincere");
  auto stable51 = enumerate_stable(p51);
  REQUIRE(stable51.size() == 2);
  CHECK(stable51[0] == parse_matching(p51, "m1:w2,m2:w1,m3:w3,m4:w4"));
  CHECK(stable51[1] == parse_matching(p51, "m1:w2,m2:w1,m3:w4,m4:w3"));
}

TEST_CASE("lattice extremes sit inside the stable set") {
  for (const char* role : {"sincere1", "sincere2"}) {
    Profile p = fixtures::profile("thm2", role);
    auto stable = enumerate_stable(p);
    Matching man_opt = gale_shapley_matching(p, Side::Men);
    Matching woman_opt = gale_shapley_matching(p, Side::Women);
    CHECK(std::find(stable.begin(), stable.end(), man_opt) != stable.end());
    CHECK(std::find(stable.begin(), stable.end(), woman_opt) != stable.end());
    for (const auto& mu : stable)
      for (int m = 0; m < p.num_men(); ++m) {
        AgentId y{Side::Men, m};
        CHECK(!p.prefers(y, mu.partner_code(p, y), man_opt.partner_code(p, y)));
      }
  }
}

TEST_CASE("egalitarian costs and argmin") {
  Profile p51 = fixtures::profile("prop51", "sincere");
  Matching mu1 = parse_matching(p51, "m1:w2,m2:w1,m3:w4,m4:w3");
  Matching mu2 = parse_matching(p51, "m1:w2,m2:w1,m3:w3,m4:w4");
  CHECK(egalitarian_cost(p51, mu1) == 14);
  CHECK(egalitarian_cost(p51, mu2) == 14);
  auto argmin = egalitarian_argmin(p51);
  CHECK(argmin.size() == 2);

  Profile dev = fixtures::profile("prop51", "deviation");
  Matching mu3 = parse_matching(dev, "m1:w1,m2:w2,m3:w3,m4:w4");
  CHECK(egalitarian_cost(dev, mu3) == 13);
  CHECK(egalitarian_cost(dev, mu2) == 13);
  CHECK(egalitarian_cost(dev, mu1) == 14);
  auto argmin_dev = egalitarian_argmin(dev);
  REQUIRE(argmin_dev.size() == 2);
  CHECK(argmin_dev[0] == mu3);
  CHECK(argmin_dev[1] == mu2);
}

TEST_CASE("distributions are exact rationals") {
  Profile p51 = fixtures::profile("prop51", "sincere");
  auto dist = make_mechanism("uniform-egal").run(p51);
  REQUIRE(dist.support.size() == 2);
  CHECK(dist.support[0].second == Rat(1, 2));
  CHECK(dist.support[1].second == Rat(1, 2));
  AgentId w3{Side::Women, 2};
  CHECK(dist.marginal(p51, w3, 2) == Rat(1, 2));  // m3 in one of the two
  CHECK(dist.support_codes(p51, w3) == std::vector<int>{2, 3});

  auto uni = make_mechanism("uniform").run(fixtures::profile("thm2", "sincere1"));
  REQUIRE(uni.support.size() == 3);
  for (const auto& [mu, pr] : uni.support) CHECK(pr == Rat(1, 3));
}

TEST_CASE("mechanism flags and names") {
  auto names = mechanism_names();
  CHECK(names == std::vector<std::string>{"gs-man", "gs-woman", "uniform", "uniform-egal",
                                          "egal-lex"});
  CHECK(make_mechanism("gs-man").deterministic);
  CHECK(make_mechanism("gs-man").monotonic);
  CHECK(make_mechanism("gs-man").ins);
  CHECK(make_mechanism("uniform").fully_randomized);
  CHECK(!make_mechanism("uniform").monotonic);
  CHECK(make_mechanism("uniform-egal").monotonic);
  CHECK(make_mechanism("uniform-egal").ins);
  CHECK(make_mechanism("egal-lex").deterministic);
  CHECK_THROWS(make_mechanism("bogus"));
}

TEST_CASE("egal-lex picks the least-cost matching deterministically") {
  Profile dev = fixtures::profile("prop51", "deviation");
  auto dist = make_mechanism("egal-lex").run(dev);
  REQUIRE(dist.deterministic());
  // Two matchings tie at cost 13; the lexicographically smaller wins.
  CHECK(dist.support.front().first == parse_matching(dev, "m1:w1,m2:w2,m3:w3,m4:w4"));
}

TEST_CASE("evaluator memoises by profile") {
  Evaluator eval(make_mechanism("uniform"));
  Profile p = fixtures::profile("prop64", "sincere");
  const auto& a = eval(p);
  CHECK(eval.cache_size() == 1);
  const auto& b = eval(p);
  CHECK(eval.cache_size() == 1);
  CHECK(a == b);
  auto moved = p.list_of({Side::Men, 0});
  std::swap(moved[0], moved[1]);
  eval(p.with_list({Side::Men, 0}, moved));
  CHECK(eval.cache_size() == 2);
}

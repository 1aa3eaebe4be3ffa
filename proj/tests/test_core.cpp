#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ssm/core.hpp"
#include "ssm/fixtures.hpp"

using namespace ssm;

namespace {
const char* kSmall = R"(men: m1 m2
women: w1 w2
m1: w1 w2 @
m2: w2 @ w1
w1: m2 m1 @
w2: m1 m2 @
)";
}

TEST_CASE("parse and accessors") {
  Profile p = parse_profile(kSmall);
  CHECK(p.num_men() == 2);
  CHECK(p.num_women() == 2);
  CHECK(p.self_code(Side::Men) == 2);
  AgentId m1{Side::Men, 0}, m2{Side::Men, 1}, w1{Side::Women, 0};
  CHECK(p.list_of(m1) == std::vector<int>{0, 1, 2});
  CHECK(p.prefers(m1, 0, 1));
  CHECK(p.prefers(m2, 1, 2));
  CHECK(!p.prefers(m2, 0, 2));  // w1 is below SELF for m2
  CHECK(p.name_of(w1) == "w1");
  CHECK(p.index_of_name("m2", Side::Men) == 1);
  CHECK(p.index_of_name("nope", Side::Men) == -1);
}

TEST_CASE("serialize round trip, text and json") {
  for (const auto& id : fixtures::case_ids()) {
    if (id == "thm5") continue;  // college format, separate module
    for (const auto& role : fixtures::roles(id)) {
      Profile p = fixtures::profile(id, role);
      CHECK(parse_profile(serialize_profile(p)) == p);
      CHECK(parse_profile_json(serialize_profile_json(p)) == p);
    }
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_profile("men: m1\nwomen: w1\nm1: w9 @\nw1: m1 @\n"), ParseError);
  CHECK_THROWS_AS(parse_profile("men: m1\nwomen: w1\nm1: w1 w1 @\nw1: m1 @\n"), ParseError);
  CHECK_THROWS_AS(parse_profile("men: m1\nwomen: w1\nm1: w1\nw1: m1 @\n"), ParseError);
  try {
    parse_profile("men: m1\nwomen: w1\nm1: w9 @\nw1: m1 @\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("comments and student/college header aliases") {
  Profile p = parse_profile("# note\nstudents: a\ncolleges: b\na: b @\nb: a @\n");
  CHECK(p.num_men() == 1);
  CHECK(p.name_of({Side::Men, 0}) == "a");
}

TEST_CASE("matching validation and self matches") {
  Profile p = parse_profile(kSmall);
  Matching all_self = Matching::all_self(2, 2);
  CHECK_NOTHROW(validate_matching(p, all_self));
  CHECK(is_individually_rational(p, all_self));
  Matching mu = parse_matching(p, "m1:w1,m2:w2");
  CHECK(mu.partner_index({Side::Men, 0}) == 0);
  CHECK(mu.partner_code(p, {Side::Women, 1}) == 1);  // w2 is matched to m2
  CHECK(format_matching(p, mu) == "m1:w1,m2:w2");
  Matching half = parse_matching(p, "m1:w1,m2:m2,w2:w2");
  CHECK(half.partner_index({Side::Men, 1}) == -1);
  CHECK(half.partner_code(p, {Side::Men, 1}) == p.self_code(Side::Men));
}

TEST_CASE("individual rationality detects unacceptable partners") {
  // m2 ranks w1 below SELF, so pairing them is not individually rational.
  Profile p = parse_profile(kSmall);
  Matching mu = parse_matching(p, "m1:w2,m2:w1");
  CHECK(!is_individually_rational(p, mu));
  CHECK(!is_stable(p, mu));
}

TEST_CASE("stability on bundled instances") {
  Profile t1 = fixtures::profile("thm2", "sincere1");
  // m1's sincere list is w1,w2,w4,w3,@ so m1-w3 is acceptable to him.
  CHECK(t1.prefers({Side::Men, 0}, 2, t1.self_code(Side::Men)));
  Profile p62 = fixtures::profile("prop62", "sincere");
  // m1 ranks SELF above w4 there, so any matching pairing them is irrational.
  CHECK(!p62.prefers({Side::Men, 0}, 3, p62.self_code(Side::Men)));
  Matching mu = parse_matching(p62, "m1:w4,m2:m2,m3:m3,m4:m4,w1:w1,w2:w2,w3:w3");
  CHECK(!is_individually_rational(p62, mu));
}

TEST_CASE("blocking pairs") {
  Profile p51 = fixtures::profile("prop51", "sincere");
  Matching mu3 = parse_matching(p51, "m1:w1,m2:w2,m3:w3,m4:w4");
  auto blocks = blocking_pairs(p51, mu3);
  CHECK(!is_stable(p51, mu3));
  CHECK(std::find(blocks.begin(), blocks.end(), std::make_pair(1, 2)) != blocks.end());
  Matching mu1 = parse_matching(p51, "m1:w2,m2:w1,m3:w4,m4:w3");
  CHECK(blocking_pairs(p51, mu1).empty());
  CHECK(is_stable(p51, mu1));
}

TEST_CASE("cost rank skips SELF for matched partners") {
  Profile p = parse_profile("men: m1\nwomen: w1 w2\nm1: w1 @ w2\nw1: m1 @\nw2: m1 @\n");
  AgentId m1{Side::Men, 0};
  CHECK(p.cost_rank(m1, 0) == 1);  // w1 first
  CHECK(p.cost_rank(m1, 2) == 2);  // w2 ranked after SELF, SELF not charged
  CHECK(p.cost_rank(m1, p.self_code(Side::Men)) == 2);  // self-match: full position
}

TEST_CASE("with_list replaces exactly one list") {
  Profile p = parse_profile(kSmall);
  Profile q = p.with_list({Side::Men, 0}, {1, 0, 2});
  CHECK(q.list_of({Side::Men, 0}) == std::vector<int>{1, 0, 2});
  CHECK(q.list_of({Side::Men, 1}) == p.list_of({Side::Men, 1}));
  CHECK(q.key() != p.key());
  CHECK_THROWS(p.with_list({Side::Men, 0}, {0, 0, 2}));
}

TEST_CASE("corpus digest is frozen") {
  // Fixture edits must be deliberate; update this constant alongside them.
  CHECK(fixtures::corpus_digest() == 7092483663011224744ULL);
}

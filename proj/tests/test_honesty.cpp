#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ssm/fixtures.hpp"
#include "ssm/honesty.hpp"

using namespace ssm;

TEST_CASE("kendall tau on permutations") {
  CHECK(kendall_tau({0, 1, 2, 3}, {0, 1, 2, 3}) == 0);
  CHECK(kendall_tau({0, 1, 2, 3}, {3, 2, 1, 0}) == 6);
  CHECK(kendall_tau({0, 1, 2, 3}, {1, 0, 2, 3}) == 1);
  CHECK(kendall_tau({0, 1, 2}, {2, 0, 1}) == 2);
}

TEST_CASE("single swap vs truncation distances") {
  Profile sincere = fixtures::profile("prop64", "sincere");
  AgentId w1{Side::Women, 0};
  CHECK(kendall_tau(sincere, fixtures::profile("prop64", "swap"), w1) == 1);
  CHECK(kendall_tau(sincere, fixtures::profile("prop64", "trunc"), w1) == 2);
  CHECK(kendall_tau_total(sincere, fixtures::profile("prop64", "swap")) == 1);
}

TEST_CASE("disparity sets of truncations") {
  Profile ps = fixtures::profile("prop65", "sincere");
  Profile p1 = fixtures::profile("prop65", "trunc1");
  Profile p2 = fixtures::profile("prop65", "trunc2");
  const auto& sin = ps.list_of({Side::Women, 0});
  const auto& t1 = p1.list_of({Side::Women, 0});
  const auto& t2 = p2.list_of({Side::Women, 0});
  CHECK(kendall_tau(sin, t1) == 4);
  CHECK(kendall_tau(sin, t2) == 3);
  CHECK(disparity_counts(sin, t1) == std::array<int, 3>{4, 1, 0});
  CHECK(disparity_counts(sin, t2) == std::array<int, 3>{3, 3, 0});
  // Untruncated list: all pairs compared by both sides, R1 = R2 = empty.
  CHECK(disparity_counts(sin, sin) == std::array<int, 3>{0, 0, 0});
  auto sets = disparity_sets(sin, t1);
  CHECK(sets.d.size() == 4);
  CHECK(sets.r1.size() == 1);
  CHECK(sets.r2.empty());
}

TEST_CASE("penalty metric at several p") {
  Profile ps = fixtures::profile("prop65", "sincere");
  Profile p1 = fixtures::profile("prop65", "trunc1");
  Profile p2 = fixtures::profile("prop65", "trunc2");
  const auto& sin = ps.list_of({Side::Women, 0});
  const auto& t1 = p1.list_of({Side::Women, 0});
  const auto& t2 = p2.list_of({Side::Women, 0});
  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    CHECK(kendall_tau_penalty(sin, t1, p) == doctest::Approx(4 + p));
    CHECK(kendall_tau_penalty(sin, t2, p) == doctest::Approx(3 + 3 * p));
  }
  // The two truncations tie at p = 1/2 and swap order on either side of it.
  CHECK(kendall_tau_penalty(sin, t1, 0.5) == doctest::Approx(kendall_tau_penalty(sin, t2, 0.5)));
  CHECK(kendall_tau_penalty(sin, t1, 1.0) < kendall_tau_penalty(sin, t2, 1.0));
  CHECK(kendall_tau_penalty(sin, t1, 0.25) > kendall_tau_penalty(sin, t2, 0.25));
}

TEST_CASE("hausdorff variant") {
  Profile ps = fixtures::profile("prop65", "sincere");
  Profile p1 = fixtures::profile("prop65", "trunc1");
  Profile p2 = fixtures::profile("prop65", "trunc2");
  const auto& sin = ps.list_of({Side::Women, 0});
  const auto& t1 = p1.list_of({Side::Women, 0});
  const auto& t2 = p2.list_of({Side::Women, 0});
  CHECK(hausdorff_kt(sin, t1) == 5);
  CHECK(hausdorff_kt(sin, t2) == 6);
  CHECK(hausdorff_kt(sin, sin) == 0);
}

TEST_CASE("truncation recognition") {
  // sincere over codes {0,1,2} with SELF = 3: order 1,0,3(SELF),2
  std::vector<int> sin = {1, 0, 3, 2};
  CHECK(is_truncation_of(sin, {1, 0, 3, 2}, 3));  // identical
  CHECK(is_truncation_of(sin, {1, 3, 0, 2}, 3));  // cut after first entry
  CHECK(is_truncation_of(sin, {3, 1, 0, 2}, 3));  // empty acceptable prefix
  CHECK(!is_truncation_of(sin, {0, 1, 3, 2}, 3)); // reordered prefix
  CHECK(!is_truncation_of(sin, {1, 0, 2, 3}, 3)); // extends past sincere SELF
}

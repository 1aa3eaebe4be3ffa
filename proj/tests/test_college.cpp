#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ssm/college.hpp"
#include "ssm/fixtures.hpp"

using namespace ssm;

TEST_CASE("college instance parsing with quota suffixes") {
  CollegeInstance inst = fixtures::college("thm5", "sincere");
  CHECK(inst.num_students() == 4);
  CHECK(inst.num_colleges() == 3);
  CHECK(inst.quotas == std::vector<int>{2, 1, 1});
  CHECK(inst.student_self() == 3);
  CHECK(inst.college_self() == 4);
  CHECK(parse_college_instance(serialize_college_instance(inst)).quotas == inst.quotas);
}

TEST_CASE("unique stable assignment of the admissions fixture") {
  CollegeInstance inst = fixtures::college("thm5", "sincere");
  auto stable = enumerate_college_stable(inst);
  REQUIRE(stable.size() == 1);
  Assignment mu = Assignment::from_student_vector({2, 1, 0, 0}, 3);
  CHECK(stable[0] == mu);
  CHECK(mu.college_to[0] == std::vector<int>{2, 3});  // c1 admits s3 and s4
  CHECK(college_is_stable(inst, mu).stable);
  // Both deferred-acceptance directions collapse onto the unique assignment.
  CHECK(college_da(inst, Side::Men) == mu);
  CHECK(college_da(inst, Side::Women) == mu);
}

TEST_CASE("stability detects blocking student-college pairs") {
  CollegeInstance inst = fixtures::college("thm5", "sincere");
  Assignment mu_prime = Assignment::from_student_vector({0, 1, 2, 0}, 3);
  auto verdict = college_is_stable(inst, mu_prime);
  CHECK(!verdict.stable);
  REQUIRE(verdict.blocking.size() == 1);
  CHECK(verdict.blocking[0] == std::make_pair(2, 0));  // s3 with c1
}

TEST_CASE("responsive set comparison") {
  CollegeInstance inst = fixtures::college("thm5", "sincere");
  // c1 ranks s1 above s3, so {s1, s4} beats {s3, s4} by one replacement.
  CHECK(responsive_prefers(inst, 0, {0, 3}, {2, 3}) == SetPreference::StrictlyPrefers);
  CHECK(responsive_prefers(inst, 0, {2, 3}, {0, 3}) == SetPreference::StrictlyDispreferred);
  CHECK(responsive_prefers(inst, 0, {2, 3}, {2, 3}) ==
        SetPreference::IndifferentOrIncomparable);
  // A fuller house compares against the empty seat's SELF padding.
  CHECK(responsive_prefers(inst, 0, {0, 1}, {0}) == SetPreference::StrictlyPrefers);
}

TEST_CASE("college deviation found under every shipped mechanism") {
  CollegeInstance sincere = fixtures::college("thm5", "sincere");
  CollegeInstance dev = fixtures::college("thm5", "deviation");
  Assignment mu = Assignment::from_student_vector({2, 1, 0, 0}, 3);
  Assignment mu_prime = Assignment::from_student_vector({0, 1, 2, 0}, 3);
  for (const auto& name : college_mechanism_names()) {
    auto out = run_college_mechanism(dev, name);
    REQUIRE(out.support.size() == 1);
    CHECK(out.support.front().first == mu_prime);
    CHECK(responsive_prefers(sincere, 0, mu_prime.college_to[0], mu.college_to[0]) ==
          SetPreference::StrictlyPrefers);
    auto found = find_college_deviation(sincere, name);
    CHECK(found.found);
    CHECK(found.college == 0);
  }
  // The deviation fixture differs from the sincere one only in c1's list.
  CHECK(dev.college_lists[0] == std::vector<int>{0, 3, 4, 1, 2});
  CHECK(dev.student_lists == sincere.student_lists);
}

TEST_CASE("quota-1 instances reduce to the one-to-one model") {
  const char* text = R"(students: s1 s2
colleges: c1 c2
s1: c1 c2 @
s2: c2 c1 @
c1: s2 s1 @
c2: s1 s2 @
)";
  CollegeInstance inst = parse_college_instance(text);
  Profile p = to_one_to_one(inst);
  auto one = enumerate_stable(p);
  auto many = enumerate_college_stable(inst);
  REQUIRE(one.size() == many.size());
  for (size_t i = 0; i < one.size(); ++i)
    for (int s = 0; s < inst.num_students(); ++s)
      CHECK(one[i].man_to[s] == many[i].student_to[s]);
}

TEST_CASE("assignment validation") {
  CollegeInstance inst = fixtures::college("thm5", "sincere");
  Assignment over = Assignment::from_student_vector({0, 0, 0, 0}, 3);
  CHECK_THROWS(validate_assignment(inst, over));  // c1 has quota 2
}

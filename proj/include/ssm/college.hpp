#pragma once

#include <string>
#include <vector>

#include "ssm/core.hpp"
#include "ssm/mechanisms.hpp"

namespace ssm {

/// Many-to-one instance: students over colleges ∪ SELF, colleges (with a
/// quota each) over students ∪ SELF. Codes work as in Profile: a student's
/// SELF code is the number of colleges, a college's the number of students.
struct CollegeInstance {
  std::vector<std::string> students, colleges;
  std::vector<int> quotas;                       // per college, >= 1
  std::vector<std::vector<int>> student_lists;   // over colleges + SELF
  std::vector<std::vector<int>> college_lists;   // over students + SELF

  int num_students() const { return static_cast<int>(students.size()); }
  int num_colleges() const { return static_cast<int>(colleges.size()); }
  int student_self() const { return num_colleges(); }
  int college_self() const { return num_students(); }

  bool student_prefers(int s, int a, int b) const;  // codes over colleges+SELF
  bool college_prefers(int c, int a, int b) const;  // codes over students+SELF
  int college_rank(int c, int student) const;       // 0-based position

  CollegeInstance with_college_list(int c, std::vector<int> list) const;
  void validate() const;
};

// Text format matches the one-to-one files, with `colleges:`/`students:`
// headers and an optional quota suffix on college names: `c1(2): s1 s2 @ s3`.
CollegeInstance parse_college_instance(const std::string& text);
std::string serialize_college_instance(const CollegeInstance& inst);

struct Assignment {
  std::vector<std::vector<int>> college_to;  // admitted students, sorted
  std::vector<int> student_to;               // college index or -1 (self)

  static Assignment from_student_vector(std::vector<int> student_to, int num_colleges);
  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend bool operator<(const Assignment& a, const Assignment& b) {
    return a.student_to < b.student_to;
  }
};

void validate_assignment(const CollegeInstance& inst, const Assignment& mu);

struct CollegeStability {
  bool stable = true;
  std::vector<std::pair<int, int>> blocking;  // (student, college)
  std::vector<int> irrational_agents;         // students, then colleges offset by num_students
};

// Individual rationality plus: no pair (s, c) where s prefers c and c would
// take s into a free seat or over a currently admitted student.
CollegeStability college_is_stable(const CollegeInstance& inst, const Assignment& mu);

// Deferred acceptance via the duplicated-seat one-to-one reduction: each
// college becomes quota-many seats sharing its list; students rank seats of a
// college consecutively by seat index.
Assignment college_da(const CollegeInstance& inst, Side proposing);  // Men = students

// Exhaustive stable set, sorted.
std::vector<Assignment> enumerate_college_stable(const CollegeInstance& inst);

enum class SetPreference { StrictlyPrefers, IndifferentOrIncomparable, StrictlyDispreferred };

// Responsive comparison of admitted sets by sorted rank vectors padded with
// the SELF rank for empty seats; dominance must be position-wise.
SetPreference responsive_prefers(const CollegeInstance& inst, int college,
                                 const std::vector<int>& set_a, const std::vector<int>& set_b);

// Distribution marginals over assignments use exact rationals, mirroring the
// one-to-one pipeline.
struct AssignmentDistribution {
  std::vector<std::pair<Assignment, Rat>> support;
  static AssignmentDistribution point(Assignment mu);
  static AssignmentDistribution uniform(std::vector<Assignment> mus);
};

// Named college mechanisms: student-da, college-da, uniform.
AssignmentDistribution run_college_mechanism(const CollegeInstance& inst,
                                             const std::string& name);
std::vector<std::string> college_mechanism_names();

// Whether a college has a profitable deviation from the sincere profile under
// the named mechanism: some replacement list yields, in every support
// assignment, a seat set it responsively strictly prefers. Returns the
// witness list if found.
struct CollegeDeviation {
  bool found = false;
  int college = -1;
  std::vector<int> list;
};
CollegeDeviation find_college_deviation(const CollegeInstance& inst, const std::string& mechanism);

// Quota-1 reduction to the one-to-one Profile (students as men).
Profile to_one_to_one(const CollegeInstance& inst);

}  // namespace ssm

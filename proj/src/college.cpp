#include "ssm/college.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssm {

bool CollegeInstance::student_prefers(int s, int a, int b) const {
  const auto& l = student_lists[s];
  return std::find(l.begin(), l.end(), a) < std::find(l.begin(), l.end(), b);
}

bool CollegeInstance::college_prefers(int c, int a, int b) const {
  const auto& l = college_lists[c];
  return std::find(l.begin(), l.end(), a) < std::find(l.begin(), l.end(), b);
}

int CollegeInstance::college_rank(int c, int student) const {
  const auto& l = college_lists[c];
  return static_cast<int>(std::find(l.begin(), l.end(), student) - l.begin());
}

CollegeInstance CollegeInstance::with_college_list(int c, std::vector<int> list) const {
  CollegeInstance out = *this;
  out.college_lists[c] = std::move(list);
  out.validate();
  return out;
}

void CollegeInstance::validate() const {
  if (quotas.size() != colleges.size()) throw std::invalid_argument("quota per college required");
  for (int q : quotas)
    if (q < 1) throw std::invalid_argument("quotas must be positive");
  auto check_perm = [](const std::vector<int>& l, int universe) {
    std::vector<bool> seen(universe, false);
    if (static_cast<int>(l.size()) != universe) throw std::invalid_argument("bad list length");
    for (int c : l) {
      if (c < 0 || c >= universe || seen[c]) throw std::invalid_argument("bad list entry");
      seen[c] = true;
    }
  };
  for (const auto& l : student_lists) check_perm(l, num_colleges() + 1);
  for (const auto& l : college_lists) check_perm(l, num_students() + 1);
}

CollegeInstance parse_college_instance(const std::string& text) {
  // Reuse the flat "name: entries" scanning by normalising quota suffixes out
  // of the college names first.
  std::istringstream in(text);
  std::string line;
  CollegeInstance inst;
  std::vector<std::pair<std::string, std::vector<std::string>>> lists;
  int lineno = 0;
  auto strip_quota = [](std::string name, int* quota) {
    auto open = name.find('(');
    if (open == std::string::npos) {
      *quota = 1;
      return name;
    }
    auto close = name.find(')', open);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced quota suffix");
    *quota = std::stoi(name.substr(open + 1, close - open - 1));
    return name.substr(0, open);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0].back() != ':') throw ParseError(lineno, "expected 'name:' prefix");
    std::string head = toks[0].substr(0, toks[0].size() - 1);
    toks.erase(toks.begin());
    if (head == "students" || head == "men") {
      inst.students = toks;
    } else if (head == "colleges" || head == "women") {
      for (auto& name : toks) {
        int q;
        inst.colleges.push_back(strip_quota(name, &q));
        inst.quotas.push_back(q);
      }
    } else {
      int q;
      lists.emplace_back(strip_quota(head, &q), toks);
      (void)q;  // quota on a list line is informational; the header rules
    }
  }
  if (inst.students.empty() || inst.colleges.empty())
    throw ParseError(0, "missing 'students:' or 'colleges:' header");
  auto decode = [&](const std::string& owner, const std::vector<std::string>& names) {
    for (const auto& [name, toks] : lists) {
      if (name != owner) continue;
      std::vector<int> list;
      for (const auto& tok : toks) {
        if (tok == "@") {
          list.push_back(static_cast<int>(names.size()));
        } else {
          auto it = std::find(names.begin(), names.end(), tok);
          if (it == names.end())
            throw std::invalid_argument("unknown name '" + tok + "' in list of '" + owner + "'");
          list.push_back(static_cast<int>(it - names.begin()));
        }
      }
      return list;
    }
    throw std::invalid_argument("missing preference list for '" + owner + "'");
  };
  for (const auto& s : inst.students) inst.student_lists.push_back(decode(s, inst.colleges));
  for (const auto& c : inst.colleges) inst.college_lists.push_back(decode(c, inst.students));
  inst.validate();
  return inst;
}

std::string serialize_college_instance(const CollegeInstance& inst) {
  std::ostringstream out;
  out << "students:";
  for (const auto& s : inst.students) out << ' ' << s;
  out << "\ncolleges:";
  for (int c = 0; c < inst.num_colleges(); ++c) {
    out << ' ' << inst.colleges[c];
    if (inst.quotas[c] != 1) out << '(' << inst.quotas[c] << ')';
  }
  out << '\n';
  for (int s = 0; s < inst.num_students(); ++s) {
    out << inst.students[s] << ':';
    for (int code : inst.student_lists[s])
      out << ' ' << (code == inst.student_self() ? "@" : inst.colleges[code]);
    out << '\n';
  }
  for (int c = 0; c < inst.num_colleges(); ++c) {
    out << inst.colleges[c];
    if (inst.quotas[c] != 1) out << '(' << inst.quotas[c] << ')';
    out << ':';
    for (int code : inst.college_lists[c])
      out << ' ' << (code == inst.college_self() ? "@" : inst.students[code]);
    out << '\n';
  }
  return out.str();
}

Assignment Assignment::from_student_vector(std::vector<int> student_to, int num_colleges) {
  Assignment mu;
  mu.college_to.assign(num_colleges, {});
  for (size_t s = 0; s < student_to.size(); ++s)
    if (student_to[s] >= 0) mu.college_to[student_to[s]].push_back(static_cast<int>(s));
  mu.student_to = std::move(student_to);
  return mu;
}

void validate_assignment(const CollegeInstance& inst, const Assignment& mu) {
  if (static_cast<int>(mu.student_to.size()) != inst.num_students() ||
      static_cast<int>(mu.college_to.size()) != inst.num_colleges())
    throw std::invalid_argument("assignment has wrong dimensions");
  for (int c = 0; c < inst.num_colleges(); ++c) {
    if (static_cast<int>(mu.college_to[c].size()) > inst.quotas[c])
      throw std::invalid_argument("quota exceeded");
    for (int s : mu.college_to[c])
      if (mu.student_to[s] != c) throw std::invalid_argument("assignment not consistent");
  }
  for (int s = 0; s < inst.num_students(); ++s) {
    int c = mu.student_to[s];
    if (c < -1 || c >= inst.num_colleges()) throw std::invalid_argument("college out of range");
    if (c >= 0 && std::find(mu.college_to[c].begin(), mu.college_to[c].end(), s) ==
                      mu.college_to[c].end())
      throw std::invalid_argument("assignment not consistent");
  }
}

CollegeStability college_is_stable(const CollegeInstance& inst, const Assignment& mu) {
  CollegeStability v;
  for (int s = 0; s < inst.num_students(); ++s) {
    int c = mu.student_to[s];
    if (c >= 0 && inst.student_prefers(s, inst.student_self(), c)) {
      v.stable = false;
      v.irrational_agents.push_back(s);
    }
  }
  for (int c = 0; c < inst.num_colleges(); ++c) {
    for (int s : mu.college_to[c]) {
      if (inst.college_prefers(c, inst.college_self(), s)) {
        v.stable = false;
        v.irrational_agents.push_back(inst.num_students() + c);
      }
    }
  }
  for (int s = 0; s < inst.num_students(); ++s) {
    int assigned = mu.student_to[s];
    int assigned_code = assigned >= 0 ? assigned : inst.student_self();
    for (int c = 0; c < inst.num_colleges(); ++c) {
      if (!inst.student_prefers(s, c, assigned_code)) continue;
      bool wants = false;
      if (static_cast<int>(mu.college_to[c].size()) < inst.quotas[c]) {
        wants = inst.college_prefers(c, s, inst.college_self());
      } else {
        for (int admitted : mu.college_to[c])
          if (inst.college_prefers(c, s, admitted)) wants = true;
      }
      if (wants) {
        v.stable = false;
        v.blocking.emplace_back(s, c);
      }
    }
  }
  return v;
}

namespace {

// One-to-one reduction: colleges split into quota-many seats, each seat
// carrying the college's list; students rank a college's seats consecutively.
struct SeatMap {
  Profile profile;
  std::vector<int> seat_college;  // seat (woman) index -> college
};

SeatMap seat_reduction(const CollegeInstance& inst) {
  SeatMap map;
  std::vector<int> first_seat(inst.num_colleges());
  int seats = 0;
  for (int c = 0; c < inst.num_colleges(); ++c) {
    first_seat[c] = seats;
    seats += inst.quotas[c];
    for (int k = 0; k < inst.quotas[c]; ++k) map.seat_college.push_back(c);
  }
  std::vector<std::vector<int>> men, women;
  for (int s = 0; s < inst.num_students(); ++s) {
    std::vector<int> l;
    for (int code : inst.student_lists[s]) {
      if (code == inst.student_self()) {
        l.push_back(seats);  // SELF in the seat universe
      } else {
        for (int k = 0; k < inst.quotas[code]; ++k) l.push_back(first_seat[code] + k);
      }
    }
    men.push_back(std::move(l));
  }
  for (int seat = 0; seat < seats; ++seat) {
    std::vector<int> l;
    for (int code : inst.college_lists[map.seat_college[seat]]) {
      l.push_back(code == inst.college_self() ? inst.num_students() : code);
    }
    women.push_back(std::move(l));
  }
  map.profile = Profile::from_lists(std::move(men), std::move(women));
  return map;
}

Assignment from_seat_matching(const CollegeInstance& inst, const SeatMap& map,
                              const Matching& mu) {
  std::vector<int> student_to(inst.num_students(), -1);
  for (int s = 0; s < inst.num_students(); ++s)
    if (mu.man_to[s] >= 0) student_to[s] = map.seat_college[mu.man_to[s]];
  return Assignment::from_student_vector(std::move(student_to), inst.num_colleges());
}

}  // namespace

Assignment college_da(const CollegeInstance& inst, Side proposing) {
  SeatMap map = seat_reduction(inst);
  return from_seat_matching(inst, map, gale_shapley_matching(map.profile, proposing));
}

namespace {

void enumerate_college_rec(const CollegeInstance& inst, int s, std::vector<int>& student_to,
                           std::vector<int>& load, std::vector<Assignment>& out) {
  if (s == inst.num_students()) {
    Assignment mu = Assignment::from_student_vector(student_to, inst.num_colleges());
    if (college_is_stable(inst, mu).stable) out.push_back(std::move(mu));
    return;
  }
  student_to[s] = -1;
  enumerate_college_rec(inst, s + 1, student_to, load, out);
  for (int c = 0; c < inst.num_colleges(); ++c) {
    if (load[c] == inst.quotas[c]) continue;
    if (inst.student_prefers(s, inst.student_self(), c)) continue;
    if (inst.college_prefers(c, inst.college_self(), s)) continue;
    student_to[s] = c;
    ++load[c];
    enumerate_college_rec(inst, s + 1, student_to, load, out);
    --load[c];
    student_to[s] = -1;
  }
}

}  // namespace

std::vector<Assignment> enumerate_college_stable(const CollegeInstance& inst) {
  std::vector<Assignment> out;
  std::vector<int> student_to(inst.num_students(), -1), load(inst.num_colleges(), 0);
  enumerate_college_rec(inst, 0, student_to, load, out);
  std::sort(out.begin(), out.end());
  return out;
}

SetPreference responsive_prefers(const CollegeInstance& inst, int college,
                                 const std::vector<int>& set_a, const std::vector<int>& set_b) {
  int q = inst.quotas[college];
  if (static_cast<int>(set_a.size()) > q || static_cast<int>(set_b.size()) > q)
    throw std::invalid_argument("admitted set exceeds quota");
  auto ranks = [&](const std::vector<int>& set) {
    std::vector<int> r;
    for (int s : set) r.push_back(inst.college_rank(college, s));
    int self_rank = inst.college_rank(college, inst.college_self());
    while (static_cast<int>(r.size()) < q) r.push_back(self_rank);
    std::sort(r.begin(), r.end());
    return r;
  };
  auto ra = ranks(set_a), rb = ranks(set_b);
  bool a_dom = true, b_dom = true, strict = false;
  for (int i = 0; i < q; ++i) {
    if (ra[i] > rb[i]) a_dom = false;
    if (rb[i] > ra[i]) b_dom = false;
    if (ra[i] != rb[i]) strict = true;
  }
  if (a_dom && strict) return SetPreference::StrictlyPrefers;
  if (b_dom && strict) return SetPreference::StrictlyDispreferred;
  return SetPreference::IndifferentOrIncomparable;
}

AssignmentDistribution AssignmentDistribution::point(Assignment mu) {
  return {{{std::move(mu), Rat(1)}}};
}

AssignmentDistribution AssignmentDistribution::uniform(std::vector<Assignment> mus) {
  if (mus.empty()) throw std::invalid_argument("uniform distribution over empty set");
  std::sort(mus.begin(), mus.end());
  AssignmentDistribution d;
  Rat p(1, static_cast<std::int64_t>(mus.size()));
  for (auto& mu : mus) d.support.emplace_back(std::move(mu), p);
  return d;
}

AssignmentDistribution run_college_mechanism(const CollegeInstance& inst,
                                             const std::string& name) {
  if (name == "student-da")
    return AssignmentDistribution::point(college_da(inst, Side::Men));
  if (name == "college-da")
    return AssignmentDistribution::point(college_da(inst, Side::Women));
  if (name == "uniform")
    return AssignmentDistribution::uniform(enumerate_college_stable(inst));
  throw std::invalid_argument("unknown college mechanism '" + name + "'");
}

std::vector<std::string> college_mechanism_names() {
  return {"student-da", "college-da", "uniform"};
}

CollegeDeviation find_college_deviation(const CollegeInstance& inst,
                                        const std::string& mechanism) {
  auto current = run_college_mechanism(inst, mechanism);
  for (int c = 0; c < inst.num_colleges(); ++c) {
    std::vector<int> list(inst.num_students() + 1);
    std::iota(list.begin(), list.end(), 0);
    std::sort(list.begin(), list.end());
    do {
      if (list == inst.college_lists[c]) continue;
      auto dev = run_college_mechanism(inst.with_college_list(c, list), mechanism);
      // Profitable when every deviation outcome is responsively strictly
      // preferred to every current outcome.
      bool all_better = true;
      for (const auto& [mu_new, p_new] : dev.support) {
        for (const auto& [mu_old, p_old] : current.support) {
          if (responsive_prefers(inst, c, mu_new.college_to[c], mu_old.college_to[c]) !=
              SetPreference::StrictlyPrefers)
            all_better = false;
        }
      }
      if (all_better) return {true, c, list};
    } while (std::next_permutation(list.begin(), list.end()));
  }
  return {};
}

Profile to_one_to_one(const CollegeInstance& inst) {
  for (int q : inst.quotas)
    if (q != 1) throw std::invalid_argument("reduction requires all quotas 1");
  Profile p = Profile::from_lists(inst.student_lists, inst.college_lists);
  p.set_names(inst.students, inst.colleges);
  return p;
}

}  // namespace ssm

#include "ssm/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace ssm::fixtures {

namespace {

// 4x4 negative-result family. The first sincere profile; three stable
// matchings (identity pairing, the 3-cycle shift, and its inverse with m4-w4
// fixed in all of them).
const char* kThm2Sincere1 = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w4 w3 @
m2: w2 w3 w4 w1 @
m3: w3 w1 w4 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m3 m4 m1 @
w2: m3 m1 m4 m2 @
w3: m1 m2 m4 m3 @
w4: m4 m1 m2 m3 @
)";

// Second sincere profile: everyone but m4/w4 promotes the 4th agent one slot.
const char* kThm2Sincere2 = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w4 w2 w3 @
m2: w2 w4 w3 w1 @
m3: w3 w4 w1 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m4 m3 m1 @
w2: m3 m4 m1 m2 @
w3: m1 m4 m2 m3 @
w4: m4 m1 m2 m3 @
)";

// Manipulated profile built from the first sincere one: m1 and w1 exclude
// their cyclic partners; all suffixes completed in sincere order.
const char* kThm2Putative1 = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w4 @ w3
m2: w2 w3 w4 w1 @
m3: w3 w1 w4 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m3 m4 @ m1
w2: m3 m1 m4 m2 @
w3: m1 m2 m4 m3 @
w4: m4 m1 m2 m3 @
)";

// Alternative completion: m1 and w1 keep SELF directly after the kept block.
const char* kThm2Putative1Alt = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 @ w3 w4
m2: w2 w3 w4 w1 @
m3: w3 w1 w4 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m3 @ m1 m4
w2: m3 m1 m4 m2 @
w3: m1 m2 m4 m3 @
w4: m4 m1 m2 m3 @
)";

// Claimed equilibrium for the second sincere profile, transcribed literally
// (its middle rows repeat the first profile's rows).
const char* kThm2Putative2Literal = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w4 @ w3
m2: w2 w3 w4 w1 @
m3: w3 w1 w4 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m3 m4 @ m1
w2: m3 m1 m4 m2 @
w3: m1 m2 m4 m3 @
w4: m4 m1 m2 m3 @
)";

// Same equilibrium with the accompanying prose applied instead: only m1 and
// w1 deviate from the second sincere profile.
const char* kThm2Putative2Text = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w4 @ w3
m2: w2 w4 w3 w1 @
m3: w3 w4 w1 w2 @
m4: w4 w1 w2 w3 @
w1: m2 m3 m4 @ m1
w2: m3 m4 m1 m2 @
w3: m1 m4 m2 m3 @
w4: m4 m1 m2 m3 @
)";

// 3x3 cyclic instance where the uniform-egalitarian mechanism admits no
// locally honesty-minimal equilibrium.
const char* kProp4Sincere = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w1 w2 w3 @
m2: w2 w3 w1 @
m3: w3 w1 w2 @
w1: m3 m1 m2 @
w2: m1 m2 m3 @
w3: m2 m3 m1 @
)";

// Terminal candidates of the impossibility argument: everyone honest except
// m1, whose list is one of two exclusions of w2.
const char* kProp4TerminalA = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w1 w3 @ w2
m2: w2 w3 w1 @
m3: w3 w1 w2 @
w1: m3 m1 m2 @
w2: m1 m2 m3 @
w3: m2 m3 m1 @
)";

const char* kProp4TerminalB = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w1 @ w2 w3
m2: w2 w3 w1 @
m3: w3 w1 w2 @
w1: m3 m1 m2 @
w2: m1 m2 m3 @
w3: m2 m3 m1 @
)";

// 4x4 instance with two equal-cost stable matchings; w3's single swap tips
// the egalitarian argmin to a third matching that her sincere rivals block.
const char* kProp51Sincere = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w2 w1 @ w3 w4
m2: w1 w3 w2 @ w4
m3: w4 w3 @ w1 w2
m4: w3 w4 @ w1 w2
w1: m1 m3 m2 @ m4
w2: m2 m1 @ m3 m4
w3: m2 m3 m4 @ m1
w4: m4 m3 @ m1 m2
)";

const char* kProp51Deviation = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w2 w1 @ w3 w4
m2: w1 w3 w2 @ w4
m3: w4 w3 @ w1 w2
m4: w3 w4 @ w1 w2
w1: m1 m3 m2 @ m4
w2: m2 m1 @ m3 m4
w3: m3 m2 m4 @ m1
w4: m4 m3 @ m1 m2
)";

// 4x4 instance with a unique sincere stable matching; a coordinated m1/w1
// misreport yields a different matching that is a partially honest Nash
// equilibrium despite being sincerely blocked.
const char* kProp62Sincere = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w3 @ w4
m2: w4 w1 @ w2 w3
m3: w1 w4 @ w2 w3
m4: w3 w2 @ w1 w4
w1: m1 m2 m3 @ m4
w2: m4 m1 @ m2 m3
w3: m1 m4 @ m2 m3
w4: m3 m2 @ m1 m4
)";

const char* kProp62Putative = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w4 w2 @ w1 w3
m2: w4 w1 @ w2 w3
m3: w1 w4 @ w2 w3
m4: w3 w2 @ w1 w4
w1: m4 m2 @ m1 m3
w2: m4 m1 @ m2 m3
w3: m1 m4 @ m2 m3
w4: m3 m2 @ m1 m4
)";

// 3x3 instance separating truncation-minimal from swap-minimal manipulation
// for w1 under the man-proposing mechanism.
const char* kProp64Sincere = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w2 w1 @ w3
m2: w1 w2 @ w3
m3: w1 w3 @ w2
w1: m1 m2 m3 @
w2: m2 m3 m1 @
w3: m3 m1 m2 @
)";

const char* kProp64Swap = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w2 w1 @ w3
m2: w1 w2 @ w3
m3: w1 w3 @ w2
w1: m1 m3 m2 @
w2: m2 m3 m1 @
w3: m3 m1 m2 @
)";

const char* kProp64Trunc = R"(men: m1 m2 m3
women: w1 w2 w3
m1: w2 w1 @ w3
m2: w1 w2 @ w3
m3: w1 w3 @ w2
w1: m1 @ m2 m3
w2: m2 m3 m1 @
w3: m3 m1 m2 @
)";

// 4x4 instance where full-order and truncation-penalty metrics disagree on
// which of w1's two exclusion strategies is the more honest one.
const char* kProp65Sincere = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w3 w4 @
m2: w2 w3 w1 w4 @
m3: w3 w1 w2 w4 @
m4: w4 w1 w2 w3 @
w1: m2 m3 m1 m4 @
w2: m3 m1 m2 m4 @
w3: m1 m2 m3 m4 @
w4: m4 m1 m2 m3 @
)";

const char* kProp65Trunc1 = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w3 w4 @
m2: w2 w3 w1 w4 @
m3: w3 w1 w2 w4 @
m4: w4 w1 w2 w3 @
w1: m2 m4 @ m3 m1
w2: m3 m1 m2 m4 @
w3: m1 m2 m3 m4 @
w4: m4 m1 m2 m3 @
)";

const char* kProp65Trunc2 = R"(men: m1 m2 m3 m4
women: w1 w2 w3 w4
m1: w1 w2 w3 w4 @
m2: w2 w3 w1 w4 @
m3: w3 w1 w2 w4 @
m4: w4 w1 w2 w3 @
w1: m2 @ m3 m1 m4
w2: m3 m1 m2 m4 @
w3: m1 m2 m3 m4 @
w4: m4 m1 m2 m3 @
)";

// College admissions: c1 holds two seats and profits from burying s2 and s3.
const char* kThm5Sincere = R"(students: s1 s2 s3 s4
colleges: c1(2) c2 c3
s1: c3 c1 c2 @
s2: c2 c1 c3 @
s3: c1 c3 c2 @
s4: c1 c2 c3 @
c1(2): s1 s2 s3 s4 @
c2: s1 s2 s3 s4 @
c3: s3 s1 s2 s4 @
)";

const char* kThm5Deviation = R"(students: s1 s2 s3 s4
colleges: c1(2) c2 c3
s1: c3 c1 c2 @
s2: c2 c1 c3 @
s3: c1 c3 c2 @
s4: c1 c2 c3 @
c1(2): s1 s4 @ s2 s3
c2: s1 s2 s3 s4 @
c3: s3 s1 s2 s4 @
)";

const std::map<std::string, std::map<std::string, std::string>>& corpus() {
  static const std::map<std::string, std::map<std::string, std::string>> data = {
      {"thm2",
       {{"sincere1", kThm2Sincere1},
        {"sincere2", kThm2Sincere2},
        {"putative1", kThm2Putative1},
        {"putative1-alt", kThm2Putative1Alt},
        {"putative2-literal", kThm2Putative2Literal},
        {"putative2-text", kThm2Putative2Text}}},
      {"prop4",
       {{"sincere", kProp4Sincere},
        {"terminal-a", kProp4TerminalA},
        {"terminal-b", kProp4TerminalB}}},
      {"prop51", {{"sincere", kProp51Sincere}, {"deviation", kProp51Deviation}}},
      {"prop61", {{"sincere", kProp51Sincere}, {"deviation", kProp51Deviation}}},
      {"prop62", {{"sincere", kProp62Sincere}, {"putative", kProp62Putative}}},
      {"prop64",
       {{"sincere", kProp64Sincere}, {"swap", kProp64Swap}, {"trunc", kProp64Trunc}}},
      {"prop65",
       {{"sincere", kProp65Sincere}, {"trunc1", kProp65Trunc1}, {"trunc2", kProp65Trunc2}}},
      {"thm5", {{"sincere", kThm5Sincere}, {"deviation", kThm5Deviation}}},
  };
  return data;
}

}  // namespace

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, rest] : corpus()) ids.push_back(id);
  return ids;
}

bool has_case(const std::string& case_id) { return corpus().count(case_id) > 0; }

const std::string& text(const std::string& case_id, const std::string& role) {
  auto it = corpus().find(case_id);
  if (it == corpus().end()) throw std::invalid_argument("unknown case '" + case_id + "'");
  auto jt = it->second.find(role);
  if (jt == it->second.end())
    throw std::invalid_argument("case '" + case_id + "' has no role '" + role + "'");
  return jt->second;
}

std::vector<std::string> roles(const std::string& case_id) {
  auto it = corpus().find(case_id);
  if (it == corpus().end()) throw std::invalid_argument("unknown case '" + case_id + "'");
  std::vector<std::string> out;
  for (const auto& [role, rest] : it->second) out.push_back(role);
  return out;
}

Profile profile(const std::string& case_id, const std::string& role) {
  return parse_profile(text(case_id, role));
}

CollegeInstance college(const std::string& case_id, const std::string& role) {
  return parse_college_instance(text(case_id, role));
}

std::uint64_t corpus_digest() {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& [id, m] : corpus()) {
    for (const auto& [role, body] : m) {
      for (const std::string* s : {&id, &role, &body}) {
        for (char c : *s) {
          h ^= static_cast<unsigned char>(c);
          h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
      }
    }
  }
  return h;
}

}  // namespace ssm::fixtures

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssm {

// Side-size bound; strategy spaces grow as (n+1)! per agent.
inline constexpr int kDefaultMaxSide = 6;

enum class Side { Men, Women };

inline Side opposite(Side s) { return s == Side::Men ? Side::Women : Side::Men; }

struct AgentId {
  Side side;
  int index;

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class SizeBoundError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A complete profile of strict preference lists for a one-to-one instance.
///
/// Each list is a permutation of "codes": for a man, codes 0..num_women-1
/// name the women and code num_women is the man himself (SELF). Lists are
/// immutable after construction; with_list() produces a modified copy.
class Profile {
 public:
  Profile() = default;  // empty; populate via from_lists
  static Profile from_lists(std::vector<std::vector<int>> men_lists,
                            std::vector<std::vector<int>> women_lists);

  int num_men() const { return static_cast<int>(men_lists_.size()); }
  int num_women() const { return static_cast<int>(women_lists_.size()); }
  int side_size(Side s) const { return s == Side::Men ? num_men() : num_women(); }

  // Universe of an agent's list: opposite side plus SELF.
  int universe_size(Side s) const { return side_size(opposite(s)) + 1; }
  int self_code(Side s) const { return side_size(opposite(s)); }

  const std::vector<int>& list_of(AgentId y) const {
    return y.side == Side::Men ? men_lists_[y.index] : women_lists_[y.index];
  }
  // 0-based position of a code in y's list.
  int position(AgentId y, int code) const {
    return y.side == Side::Men ? men_pos_[y.index][code] : women_pos_[y.index][code];
  }

  bool prefers(AgentId y, int a, int b) const { return position(y, a) < position(y, b); }

  // 1-based rank counting every list element, SELF included.
  int rank_of(AgentId y, int code) const { return position(y, code) + 1; }

  // Rank used for egalitarian cost: partners are counted among the opposite
  // side only (SELF skipped); a self-match costs the full-list rank of SELF.
  int cost_rank(AgentId y, int code) const;

  Profile with_list(AgentId y, std::vector<int> list) const;

  // Canonical byte encoding, used as a memo-cache key.
  std::string key() const;

  const std::string& name_of(AgentId y) const {
    return y.side == Side::Men ? men_names_[y.index] : women_names_[y.index];
  }
  int index_of_name(const std::string& name, Side side) const;  // -1 if unknown
  void set_names(std::vector<std::string> men, std::vector<std::string> women);

  std::vector<AgentId> agents() const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.men_lists_ == b.men_lists_ && a.women_lists_ == b.women_lists_;
  }

 private:
  void rebuild_positions();

  std::vector<std::vector<int>> men_lists_, women_lists_;
  std::vector<std::vector<int>> men_pos_, women_pos_;
  std::vector<std::string> men_names_, women_names_;
};

/// Total symmetric pairing; -1 means self-matched.
struct Matching {
  std::vector<int> man_to;
  std::vector<int> woman_to;

  static Matching all_self(int nm, int nw) {
    return {std::vector<int>(nm, -1), std::vector<int>(nw, -1)};
  }
  static Matching from_man_vector(std::vector<int> man_to, int nw);

  int partner_index(AgentId y) const {
    return y.side == Side::Men ? man_to[y.index] : woman_to[y.index];
  }
  // Partner as a code in y's list universe (SELF code when self-matched).
  int partner_code(const Profile& p, AgentId y) const {
    int q = partner_index(y);
    return q >= 0 ? q : p.self_code(y.side);
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend bool operator<(const Matching& a, const Matching& b) {
    return a.man_to < b.man_to || (a.man_to == b.man_to && a.woman_to < b.woman_to);
  }
};

void validate_matching(const Profile& p, const Matching& mu);

bool is_individually_rational(const Profile& p, const Matching& mu);
std::vector<std::pair<int, int>> blocking_pairs(const Profile& p, const Matching& mu);
bool is_stable(const Profile& p, const Matching& mu);

Profile parse_profile(const std::string& text);
std::string serialize_profile(const Profile& p);
Profile parse_profile_json(const std::string& text);
std::string serialize_profile_json(const Profile& p);

// "m1:w2,m2:w3,m3:m3" — self-matches written as name:name.
std::string format_matching(const Profile& p, const Matching& mu);
Matching parse_matching(const Profile& p, const std::string& text);

}  // namespace ssm

#include "ssm/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ssm {

Profile Profile::from_lists(std::vector<std::vector<int>> men_lists,
                            std::vector<std::vector<int>> women_lists) {
  Profile p;
  p.men_lists_ = std::move(men_lists);
  p.women_lists_ = std::move(women_lists);
  int nm = p.num_men(), nw = p.num_women();
  for (int i = 0; i < nm; ++i) p.men_names_.push_back("m" + std::to_string(i + 1));
  for (int i = 0; i < nw; ++i) p.women_names_.push_back("w" + std::to_string(i + 1));
  for (int i = 0; i < nm; ++i) {
    if (static_cast<int>(p.men_lists_[i].size()) != nw + 1)
      throw std::invalid_argument("man list has wrong length");
  }
  for (int i = 0; i < nw; ++i) {
    if (static_cast<int>(p.women_lists_[i].size()) != nm + 1)
      throw std::invalid_argument("woman list has wrong length");
  }
  p.rebuild_positions();
  return p;
}

void Profile::rebuild_positions() {
  auto build = [](const std::vector<std::vector<int>>& lists, int universe) {
    std::vector<std::vector<int>> pos(lists.size(), std::vector<int>(universe, -1));
    for (size_t i = 0; i < lists.size(); ++i) {
      for (size_t k = 0; k < lists[i].size(); ++k) {
        int code = lists[i][k];
        if (code < 0 || code >= universe || pos[i][code] != -1)
          throw std::invalid_argument("list is not a permutation of its universe");
        pos[i][code] = static_cast<int>(k);
      }
    }
    return pos;
  };
  men_pos_ = build(men_lists_, num_women() + 1);
  women_pos_ = build(women_lists_, num_men() + 1);
}

int Profile::cost_rank(AgentId y, int code) const {
  int self = self_code(y.side);
  if (code == self) return rank_of(y, code);
  int pos = position(y, code);
  int self_pos = position(y, self);
  return self_pos < pos ? pos : pos + 1;
}

Profile Profile::with_list(AgentId y, std::vector<int> list) const {
  Profile p = *this;
  auto& slot = (y.side == Side::Men ? p.men_lists_[y.index] : p.women_lists_[y.index]);
  slot = std::move(list);
  p.rebuild_positions();
  return p;
}

std::string Profile::key() const {
  std::string k;
  k.reserve(2 + (num_men() + num_women()) * (num_men() + num_women() + 2));
  k.push_back(static_cast<char>(num_men()));
  k.push_back(static_cast<char>(num_women()));
  for (const auto& l : men_lists_)
    for (int c : l) k.push_back(static_cast<char>(c));
  for (const auto& l : women_lists_)
    for (int c : l) k.push_back(static_cast<char>(c));
  return k;
}

int Profile::index_of_name(const std::string& name, Side side) const {
  const auto& names = (side == Side::Men ? men_names_ : women_names_);
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void Profile::set_names(std::vector<std::string> men, std::vector<std::string> women) {
  if (static_cast<int>(men.size()) != num_men() ||
      static_cast<int>(women.size()) != num_women())
    throw std::invalid_argument("name vectors must match side sizes");
  men_names_ = std::move(men);
  women_names_ = std::move(women);
}

std::vector<AgentId> Profile::agents() const {
  std::vector<AgentId> out;
  for (int i = 0; i < num_men(); ++i) out.push_back({Side::Men, i});
  for (int i = 0; i < num_women(); ++i) out.push_back({Side::Women, i});
  return out;
}

Matching Matching::from_man_vector(std::vector<int> man_to, int nw) {
  Matching mu;
  mu.woman_to.assign(nw, -1);
  for (size_t m = 0; m < man_to.size(); ++m)
    if (man_to[m] >= 0) mu.woman_to[man_to[m]] = static_cast<int>(m);
  mu.man_to = std::move(man_to);
  return mu;
}

void validate_matching(const Profile& p, const Matching& mu) {
  if (static_cast<int>(mu.man_to.size()) != p.num_men() ||
      static_cast<int>(mu.woman_to.size()) != p.num_women())
    throw std::invalid_argument("matching has wrong dimensions");
  for (int m = 0; m < p.num_men(); ++m) {
    int w = mu.man_to[m];
    if (w < -1 || w >= p.num_women()) throw std::invalid_argument("partner out of range");
    if (w >= 0 && mu.woman_to[w] != m) throw std::invalid_argument("matching not symmetric");
  }
  for (int w = 0; w < p.num_women(); ++w) {
    int m = mu.woman_to[w];
    if (m < -1 || m >= p.num_men()) throw std::invalid_argument("partner out of range");
    if (m >= 0 && mu.man_to[m] != w) throw std::invalid_argument("matching not symmetric");
  }
}

bool is_individually_rational(const Profile& p, const Matching& mu) {
  for (AgentId y : p.agents()) {
    int c = mu.partner_code(p, y);
    int self = p.self_code(y.side);
    if (c != self && p.prefers(y, self, c)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> blocking_pairs(const Profile& p, const Matching& mu) {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < p.num_men(); ++m) {
    AgentId am{Side::Men, m};
    int cm = mu.partner_code(p, am);
    for (int w = 0; w < p.num_women(); ++w) {
      AgentId aw{Side::Women, w};
      if (p.prefers(am, w, cm) && p.prefers(aw, m, mu.partner_code(p, aw)))
        out.emplace_back(m, w);
    }
  }
  return out;
}

bool is_stable(const Profile& p, const Matching& mu) {
  return is_individually_rational(p, mu) && blocking_pairs(p, mu).empty();
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

struct RawInstance {
  std::vector<std::string> men, women;
  // agent name -> (line number, tokens after ':')
  std::map<std::string, std::pair<int, std::vector<std::string>>> lists;
};

RawInstance scan_lines(const std::string& text) {
  RawInstance raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    std::string head = toks[0];
    if (head.back() != ':') throw ParseError(lineno, "expected 'name:' prefix");
    head.pop_back();
    toks.erase(toks.begin());
    if (head == "men" || head == "students") {
      raw.men = toks;
    } else if (head == "women" || head == "colleges") {
      raw.women = toks;
    } else {
      if (raw.lists.count(head)) throw ParseError(lineno, "duplicate list for '" + head + "'");
      raw.lists[head] = {lineno, toks};
    }
  }
  return raw;
}

std::vector<int> decode_list(const RawInstance& raw, const std::string& owner, Side side,
                             const std::vector<std::string>& opposite_names) {
  auto it = raw.lists.find(owner);
  if (it == raw.lists.end()) throw ParseError(0, "missing preference list for '" + owner + "'");
  int lineno = it->second.first;
  const auto& toks = it->second.second;
  int opp = static_cast<int>(opposite_names.size());
  std::vector<int> list;
  std::vector<bool> seen(opp + 1, false);
  for (const auto& t : toks) {
    int code;
    if (t == "@") {
      code = opp;
    } else {
      auto pos = std::find(opposite_names.begin(), opposite_names.end(), t);
      if (pos == opposite_names.end())
        throw ParseError(lineno, "unknown or wrong-side name '" + t + "' in list of '" + owner + "'");
      code = static_cast<int>(pos - opposite_names.begin());
    }
    if (seen[code]) throw ParseError(lineno, "duplicate entry '" + t + "' in list of '" + owner + "'");
    seen[code] = true;
    list.push_back(code);
  }
  if (!seen[opp]) throw ParseError(lineno, "list of '" + owner + "' has no '@' (SELF) marker");
  if (static_cast<int>(list.size()) != opp + 1)
    throw ParseError(lineno, "list of '" + owner + "' does not cover the opposite side");
  (void)side;
  return list;
}

}  // namespace

Profile parse_profile(const std::string& text) {
  RawInstance raw = scan_lines(text);
  if (raw.men.empty()) throw ParseError(0, "missing 'men:' header");
  if (raw.women.empty()) throw ParseError(0, "missing 'women:' header");
  for (auto names : {&raw.men, &raw.women}) {
    auto sorted = *names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(0, "duplicate agent name in header");
  }
  std::vector<std::vector<int>> men_lists, women_lists;
  for (const auto& m : raw.men) men_lists.push_back(decode_list(raw, m, Side::Men, raw.women));
  for (const auto& w : raw.women) women_lists.push_back(decode_list(raw, w, Side::Women, raw.men));
  size_t expected = raw.men.size() + raw.women.size();
  if (raw.lists.size() != expected) {
    for (const auto& [name, rest] : raw.lists) {
      bool known = std::find(raw.men.begin(), raw.men.end(), name) != raw.men.end() ||
                   std::find(raw.women.begin(), raw.women.end(), name) != raw.women.end();
      if (!known) throw ParseError(rest.first, "list for undeclared agent '" + name + "'");
    }
  }
  Profile p = Profile::from_lists(std::move(men_lists), std::move(women_lists));
  p.set_names(raw.men, raw.women);
  return p;
}

std::string serialize_profile(const Profile& p) {
  std::ostringstream out;
  out << "men:";
  for (int i = 0; i < p.num_men(); ++i) out << ' ' << p.name_of({Side::Men, i});
  out << "\nwomen:";
  for (int i = 0; i < p.num_women(); ++i) out << ' ' << p.name_of({Side::Women, i});
  out << '\n';
  auto emit = [&](AgentId y) {
    out << p.name_of(y) << ':';
    int self = p.self_code(y.side);
    for (int c : p.list_of(y)) {
      if (c == self)
        out << " @";
      else
        out << ' ' << p.name_of({opposite(y.side), c});
    }
    out << '\n';
  };
  for (int i = 0; i < p.num_men(); ++i) emit({Side::Men, i});
  for (int i = 0; i < p.num_women(); ++i) emit({Side::Women, i});
  return out.str();
}

Profile parse_profile_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::ostringstream flat;
  flat << "men:";
  for (const auto& m : j.at("men")) flat << ' ' << m.get<std::string>();
  flat << "\nwomen:";
  for (const auto& w : j.at("women")) flat << ' ' << w.get<std::string>();
  flat << '\n';
  for (const auto& [name, list] : j.at("prefs").items()) {
    flat << name << ':';
    for (const auto& t : list) flat << ' ' << t.get<std::string>();
    flat << '\n';
  }
  return parse_profile(flat.str());
}

std::string serialize_profile_json(const Profile& p) {
  nlohmann::json j;
  j["men"] = nlohmann::json::array();
  j["women"] = nlohmann::json::array();
  for (int i = 0; i < p.num_men(); ++i) j["men"].push_back(p.name_of({Side::Men, i}));
  for (int i = 0; i < p.num_women(); ++i) j["women"].push_back(p.name_of({Side::Women, i}));
  nlohmann::json prefs = nlohmann::json::object();
  for (AgentId y : p.agents()) {
    nlohmann::json l = nlohmann::json::array();
    int self = p.self_code(y.side);
    for (int c : p.list_of(y)) l.push_back(c == self ? "@" : p.name_of({opposite(y.side), c}));
    prefs[p.name_of(y)] = l;
  }
  j["prefs"] = prefs;
  return j.dump(2);
}

std::string format_matching(const Profile& p, const Matching& mu) {
  std::ostringstream out;
  for (int m = 0; m < p.num_men(); ++m) {
    if (m) out << ',';
    out << p.name_of({Side::Men, m}) << ':';
    int w = mu.man_to[m];
    out << (w >= 0 ? p.name_of({Side::Women, w}) : p.name_of({Side::Men, m}));
  }
  for (int w = 0; w < p.num_women(); ++w)
    if (mu.woman_to[w] < 0) out << ',' << p.name_of({Side::Women, w}) << ':' << p.name_of({Side::Women, w});
  return out.str();
}

Matching parse_matching(const Profile& p, const std::string& text) {
  Matching mu = Matching::all_self(p.num_men(), p.num_women());
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'a:b' pair");
    std::string a = item.substr(0, colon), b = item.substr(colon + 1);
    if (a == b) continue;  // explicit self-match
    int m = p.index_of_name(a, Side::Men);
    int w = p.index_of_name(b, Side::Women);
    if (m < 0 || w < 0) {
      m = p.index_of_name(b, Side::Men);
      w = p.index_of_name(a, Side::Women);
    }
    if (m < 0 || w < 0) throw std::invalid_argument("unknown pair '" + item + "'");
    mu.man_to[m] = w;
    mu.woman_to[w] = m;
  }
  validate_matching(p, mu);
  return mu;
}

}  // namespace ssm

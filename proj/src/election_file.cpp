#include "electsys/election_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace electsys {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ':' || ch == '>' || ch == '#' || ch == ' ' || ch == '\t') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ElectionFile run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      ++line_;
      auto end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      line(text_.substr(start, end - start));
      start = end + 1;
    }
    if (!have_candidates_) throw ParseError(line_, "missing 'candidates:' line");
    return std::move(file_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  void line(std::string_view raw) {
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) return;
    const auto colon = raw.find(':');
    if (colon == std::string_view::npos) fail("expected 'keyword:' at the start of the line");
    const auto key = trim(raw.substr(0, colon));
    const auto rest = trim(raw.substr(colon + 1));
    if (key == "candidates") return candidates(rest);
    if (!have_candidates_) fail("'candidates:' must come first");
    if (key == "spoilers") return spoilers(rest);
    if (key == "voters" || key == "voterpool") {
      if (!rest.empty()) fail("unexpected text after '" + std::string(key) + ":'");
      in_pool_ = key == "voterpool";
      return;
    }
    if (key == "ballot" || key == "approve") {
      Voter v = voter(key == "ballot", rest);
      (in_pool_ ? file_.voter_pool : file_.election.voters).push_back(std::move(v));
      return;
    }
    fail("unknown keyword '" + std::string(key) + "'");
  }

  void candidates(std::string_view rest) {
    if (have_candidates_) fail("duplicate 'candidates:' line");
    have_candidates_ = true;
    for (auto name : split_ws(rest)) {
      if (!valid_name(name)) fail("invalid candidate name '" + std::string(name) + "'");
      const auto id = file_.election.candidate_count();
      if (!ids_.emplace(std::string(name), id).second) fail("duplicate candidate '" + std::string(name) + "'");
      file_.election.candidates.push_back(Candidate{id, std::string(name)});
    }
  }

  void spoilers(std::string_view rest) {
    if (have_spoilers_) fail("duplicate 'spoilers:' line");
    have_spoilers_ = true;
    std::vector<bool> seen(file_.election.candidates.size(), false);
    for (auto name : split_ws(rest)) {
      const auto id = lookup(name);
      if (seen[static_cast<std::size_t>(id)]) fail("spoiler '" + std::string(name) + "' listed twice");
      seen[static_cast<std::size_t>(id)] = true;
      file_.spoilers.push_back(id);
    }
  }

  CandidateId lookup(std::string_view name) const {
    const auto it = ids_.find(std::string(name));
    if (it == ids_.end()) fail("unknown candidate '" + std::string(name) + "'");
    return it->second;
  }

  Weight number(std::string_view tok, Weight min, const char* what) const {
    Weight value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < min) {
      fail(std::string(what) + " must be a " + (min > 0 ? "positive" : "nonnegative") + " integer, got '" +
           std::string(tok) + "'");
    }
    return value;
  }

  Voter voter(bool linear, std::string_view rest) {
    Voter v;
    std::string_view body = rest;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      const auto nums = split_ws(rest.substr(0, colon));
      if (nums.size() > 2) fail("expected '<weight> <price> :' before the ballot");
      if (!nums.empty()) v.weight = number(nums[0], 1, "weight");
      if (nums.size() == 2) v.price = number(nums[1], 0, "price");
      body = rest.substr(colon + 1);
    }
    const auto m = file_.election.candidates.size();
    if (linear) {
      std::vector<CandidateId> ranking;
      std::vector<bool> seen(m, false);
      std::string_view s = trim(body);
      while (!s.empty()) {
        const auto gt = s.find('>');
        const auto name = trim(s.substr(0, gt));
        if (name.empty()) fail("empty position in ballot");
        const auto id = lookup(name);
        if (seen[static_cast<std::size_t>(id)]) fail("candidate '" + std::string(name) + "' ranked twice");
        seen[static_cast<std::size_t>(id)] = true;
        ranking.push_back(id);
        if (gt == std::string_view::npos) break;
        s = trim(s.substr(gt + 1));
        if (s.empty()) fail("ballot ends with '>'");
      }
      if (ranking.size() != m) fail("ballot must rank all " + std::to_string(m) + " candidates");
      v.ballot = LinearOrder{std::move(ranking)};
    } else {
      std::vector<bool> approvals(m, false);
      for (auto name : split_ws(body)) {
        const auto id = lookup(name);
        if (approvals[static_cast<std::size_t>(id)]) fail("candidate '" + std::string(name) + "' approved twice");
        approvals[static_cast<std::size_t>(id)] = true;
      }
      v.ballot = ApprovalVector{std::move(approvals)};
    }
    return v;
  }

  std::string_view text_;
  int line_ = 0;
  bool have_candidates_ = false;
  bool have_spoilers_ = false;
  bool in_pool_ = false;
  std::map<std::string, CandidateId> ids_;
  ElectionFile file_;
};

void write_voter(std::ostream& out, const Election& e, const Voter& v) {
  out << (v.is_linear() ? "ballot: " : "approve: ") << v.weight << ' ' << v.price << " :";
  const auto body = format_ballot(e, v.ballot);
  if (!body.empty()) out << ' ' << body;
  out << '\n';
}

}  // namespace

std::string format_ballot(const Election& e, const Ballot& ballot) {
  std::string out;
  if (const auto* o = std::get_if<LinearOrder>(&ballot)) {
    for (std::size_t i = 0; i < o->ranking.size(); ++i) {
      if (i > 0) out += " > ";
      out += e.name(o->ranking[i]);
    }
  } else {
    const auto& a = std::get<ApprovalVector>(ballot).approvals;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      if (!out.empty()) out += ' ';
      out += e.name(static_cast<CandidateId>(i));
    }
  }
  return out;
}

ElectionFile parse_election(std::string_view text) {
  ElectionFile file = Parser(text).run();
  return file;
}

ElectionFile read_election_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election(buf.str());
}

std::string serialize_election(const ElectionFile& file) {
  const Election& e = file.election;
  std::ostringstream out;
  out << "candidates:";
  for (const auto& c : e.candidates) out << ' ' << c.name;
  out << '\n';
  if (!file.spoilers.empty()) {
    out << "spoilers:";
    for (CandidateId d : file.spoilers) out << ' ' << e.name(d);
    out << '\n';
  }
  out << "voters:\n";
  for (const auto& v : e.voters) write_voter(out, e, v);
  if (!file.voter_pool.empty()) {
    out << "voterpool:\n";
    for (const auto& v : file.voter_pool) write_voter(out, e, v);
  }
  return out.str();
}

std::string serialize_election(const Election& election) { return serialize_election(ElectionFile{election, {}, {}}); }

}  // namespace electsys

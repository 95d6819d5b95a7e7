#include "electsys/dodgson.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace electsys {
namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

void check_triple(const DodgsonTriple& t) {
  validate(t.election);
  require_linear(t.election, "Dodgson scoring");
  require_unit_weights(t.election, "Dodgson scoring");
  require_candidate(t.election, t.distinguished, "Dodgson triple");
}

// Covering problem: choose a lift j_v for every ballot so that each candidate
// d is passed in at least need[d] ballots, minimizing the total lift.
class LiftSearch {
 public:
  LiftSearch(std::vector<std::vector<CandidateId>> above, std::vector<int> need, std::uint64_t max_nodes)
      : above_(std::move(above)), rem_(std::move(need)), max_nodes_(max_nodes) {
    std::sort(above_.begin(), above_.end());
    const std::size_t n = above_.size();
    const std::size_t m = rem_.size();
    same_as_next_.assign(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) same_as_next_[i] = above_[i] == above_[i + 1];
    dist_.assign(m, std::vector<int>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t t = 0; t < above_[v].size(); ++t) {
        dist_[static_cast<std::size_t>(above_[v][t])][v] = static_cast<int>(t) + 1;
      }
    }
    for (int r : rem_) open_ += r > 0 ? 1 : 0;
    buffer_.reserve(n);
  }

  // Minimum total lift strictly below `bound`, or kInfinity if none.
  std::int64_t solve(std::int64_t bound) {
    best_ = bound;
    found_ = false;
    dfs(0, 0, std::numeric_limits<int>::max());
    return found_ ? best_ : kInfinity;
  }

 private:
  std::int64_t lower_bound(std::size_t from) {
    std::int64_t lb = 0;
    for (std::size_t d = 0; d < rem_.size(); ++d) {
      const int r = rem_[d];
      if (r <= 0) continue;
      buffer_.clear();
      for (std::size_t v = from; v < above_.size(); ++v) {
        if (dist_[d][v] > 0) buffer_.push_back(dist_[d][v]);
      }
      if (static_cast<int>(buffer_.size()) < r) return kInfinity;
      std::nth_element(buffer_.begin(), buffer_.begin() + (r - 1), buffer_.end());
      std::int64_t sum = 0;
      for (int i = 0; i < r; ++i) sum += buffer_[static_cast<std::size_t>(i)];
      lb = std::max(lb, sum);
    }
    return lb;
  }

  void cover(const std::vector<CandidateId>& above, int j, int delta) {
    for (int t = 0; t < j; ++t) {
      int& r = rem_[static_cast<std::size_t>(above[static_cast<std::size_t>(t)])];
      const bool was_open = r > 0;
      r -= delta;
      const bool is_open = r > 0;
      open_ += (is_open ? 1 : 0) - (was_open ? 1 : 0);
    }
  }

  void dfs(std::size_t i, std::int64_t cost, int cap) {
    if (open_ == 0) {
      if (cost < best_) {
        best_ = cost;
        found_ = true;
      }
      return;
    }
    if (i == above_.size()) return;
    if (++nodes_ > max_nodes_) throw SearchBudgetExceeded("Dodgson lift search exceeded its node budget");
    const std::int64_t lb = lower_bound(i);
    if (lb == kInfinity || cost + lb >= best_) return;

    const auto& above = above_[i];
    // Useful lifts stop just past a candidate that is still short of votes.
    std::vector<int> options;
    for (std::size_t t = 0; t < above.size(); ++t) {
      const int j = static_cast<int>(t) + 1;
      if (j > cap) break;
      if (rem_[static_cast<std::size_t>(above[t])] > 0) options.push_back(j);
    }
    const int next_cap_free = std::numeric_limits<int>::max();
    for (auto it = options.rbegin(); it != options.rend(); ++it) {
      const int j = *it;
      if (cost + j >= best_) continue;
      cover(above, j, 1);
      dfs(i + 1, cost + j, same_as_next_[i] ? j : next_cap_free);
      cover(above, j, -1);
    }
    dfs(i + 1, cost, same_as_next_[i] ? 0 : next_cap_free);
  }

  std::vector<std::vector<CandidateId>> above_;
  std::vector<int> rem_;
  std::vector<bool> same_as_next_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> buffer_;
  int open_ = 0;
  std::int64_t best_ = kInfinity;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

// Returns the score if it is <= limit (kInfinity means no limit).
std::optional<std::int64_t> lift_score(const DodgsonTriple& t, std::int64_t limit, const SearchLimits& limits) {
  const Election& e = t.election;
  const int m = e.candidate_count();
  const CandidateId c = t.distinguished;
  if (m == 1) return limit >= 0 ? std::optional<std::int64_t>(0) : std::nullopt;
  const auto n = static_cast<int>(e.voter_count());
  if (n == 0) throw Unreachable("no switch sequence makes '" + e.name(c) + "' a Condorcet winner without voters");

  const auto pair = pairwise_matrix(e);
  const int threshold = n / 2 + 1;
  std::vector<int> need(static_cast<std::size_t>(m), 0);
  bool any = false;
  for (int d = 0; d < m; ++d) {
    if (d == c) continue;
    const int have = static_cast<int>(pair[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]);
    need[static_cast<std::size_t>(d)] = std::max(0, threshold - have);
    any = any || need[static_cast<std::size_t>(d)] > 0;
  }
  if (!any) return limit >= 0 ? std::optional<std::int64_t>(0) : std::nullopt;

  std::vector<std::vector<CandidateId>> above;
  above.reserve(static_cast<std::size_t>(n));
  std::int64_t full_lift = 0;
  for (const auto& v : e.voters) {
    const auto& r = v.order().ranking;
    const auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), c) - r.begin());
    std::vector<CandidateId> list;
    std::size_t useful = 0;
    for (std::size_t t2 = 0; t2 < pos; ++t2) {
      const CandidateId d = r[pos - 1 - t2];
      list.push_back(d);
      if (need[static_cast<std::size_t>(d)] > 0) useful = t2 + 1;
    }
    list.resize(useful);
    full_lift += static_cast<std::int64_t>(useful);
    above.push_back(std::move(list));
  }

  LiftSearch search(std::move(above), std::move(need), limits.max_nodes);
  const std::int64_t bound = limit == kInfinity ? full_lift + 1 : std::min(limit, full_lift) + 1;
  const std::int64_t score = search.solve(bound);
  if (score == kInfinity) return std::nullopt;
  return score;
}

}  // namespace

std::int64_t dodgson_score(const DodgsonTriple& triple, const SearchLimits& limits) {
  check_triple(triple);
  return *lift_score(triple, kInfinity, limits);
}

std::optional<std::int64_t> dodgson_score_at_most(const DodgsonTriple& triple, std::int64_t limit,
                                                  const SearchLimits& limits) {
  check_triple(triple);
  if (limit < 0) return std::nullopt;
  return lift_score(triple, limit, limits);
}

WinnerSet dodgson_winners(const Election& election, const SearchLimits& limits) {
  validate(election);
  require_linear(election, "Dodgson winners");
  require_unit_weights(election, "Dodgson winners");
  const int m = election.candidate_count();
  if (m == 0 || (election.voter_count() == 0 && m != 1)) {
    throw NoWinnerExists("Dodgson winners need a candidate, and voters unless there is exactly one candidate");
  }
  WinnerSet winners;
  std::int64_t best = kInfinity;
  for (CandidateId c = 0; c < m; ++c) {
    const auto s = lift_score(DodgsonTriple{election, c}, best, limits);
    if (!s) continue;
    if (*s < best) {
      best = *s;
      winners.assign(1, c);
    } else {
      winners.push_back(c);
    }
  }
  return winners;
}

bool decide_dodgson_score(const DodgsonTriple& triple, std::int64_t k, const SearchLimits& limits) {
  check_triple(triple);
  if (k < 0) return false;
  if (k == 0) return condorcet_winner(triple.election) == triple.distinguished;
  try {
    return lift_score(triple, k, limits).has_value();
  } catch (const Unreachable&) {
    return false;
  }
}

bool dodgson_ranking(const Election& election, CandidateId c, CandidateId d, const SearchLimits& limits) {
  if (c == d) throw InvalidInput("Dodgson ranking needs two distinct candidates");
  const auto score_or_inf = [&](CandidateId x) {
    try {
      return dodgson_score(DodgsonTriple{election, x}, limits);
    } catch (const Unreachable&) {
      return kInfinity;
    }
  };
  return score_or_inf(c) <= score_or_inf(d);
}

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& used) {
  while (used.count(base) != 0) base += "'";
  return base;
}

void append(std::vector<CandidateId>& out, const std::vector<CandidateId>& xs) {
  out.insert(out.end(), xs.begin(), xs.end());
}

}  // namespace

MergeOutput merge(const DodgsonTriple& tc, const DodgsonTriple& td, int s_count, int t_count,
                  const SearchLimits& limits) {
  check_triple(tc);
  check_triple(td);
  if (s_count < 0 || t_count < 0) throw InvalidInput("separator counts must be nonnegative");
  if (tc.election.voter_count() % 2 == 0 || td.election.voter_count() % 2 == 0) {
    throw ParityViolation("merge needs an odd number of voters in both elections");
  }
  if (tc.election.name(tc.distinguished) == td.election.name(td.distinguished)) {
    throw InvalidInput("merge needs distinct distinguished candidates");
  }

  const int mc = tc.election.candidate_count();
  const int md = td.election.candidate_count();
  std::set<std::string> used;
  std::vector<std::string> names;
  for (const auto& cand : tc.election.candidates) {
    names.push_back(cand.name);
    used.insert(cand.name);
  }
  for (const auto& cand : td.election.candidates) {
    names.push_back(fresh_name(cand.name, used));
    used.insert(names.back());
  }
  MergeOutput out;
  for (int i = 0; i < s_count; ++i) {
    names.push_back(fresh_name("s" + std::to_string(i + 1), used));
    used.insert(names.back());
    out.separators_s.push_back(mc + md + i);
  }
  for (int i = 0; i < t_count; ++i) {
    names.push_back(fresh_name("t" + std::to_string(i + 1), used));
    used.insert(names.back());
    out.separators_t.push_back(mc + md + s_count + i);
  }
  out.c = tc.distinguished;
  out.d = mc + td.distinguished;

  std::vector<CandidateId> c_rest;
  for (CandidateId x = 0; x < mc; ++x) {
    if (x != out.c) c_rest.push_back(x);
  }
  std::vector<CandidateId> d_rest;
  for (CandidateId x = 0; x < md; ++x) {
    if (mc + x != out.d) d_rest.push_back(mc + x);
  }
  const auto& s = out.separators_s;
  const auto& t = out.separators_t;
  const std::vector<CandidateId> t_rev(t.rbegin(), t.rend());

  std::vector<Voter> voters;
  for (const auto& v : tc.election.voters) {
    auto r = v.order().ranking;
    append(r, s);
    append(r, d_rest);
    append(r, t);
    r.push_back(out.d);
    voters.push_back(linear_voter(std::move(r)));
  }
  for (const auto& w : td.election.voters) {
    std::vector<CandidateId> r;
    for (CandidateId x : w.order().ranking) r.push_back(mc + x);
    append(r, c_rest);
    append(r, t);
    r.push_back(out.c);
    append(r, s);
    voters.push_back(linear_voter(std::move(r)));
  }

  const int half_v = static_cast<int>((tc.election.voter_count() + 1) / 2);
  const int half_w = static_cast<int>((td.election.voter_count() + 1) / 2);
  const int count_a = std::max(0, half_v - half_w);
  const int count_b = half_v;
  const int count_c = half_w;
  const int count_a2 = std::max(0, half_w - half_v);

  for (int i = 0; i < count_a; ++i) {
    std::vector<CandidateId> r{out.d};
    append(r, d_rest);
    append(r, c_rest);
    append(r, t);
    r.push_back(out.c);
    append(r, s);
    voters.push_back(linear_voter(std::move(r)));
  }
  for (int i = 0; i < count_b; ++i) {
    std::vector<CandidateId> r{out.d, out.c};
    append(r, t_rev);
    append(r, d_rest);
    append(r, c_rest);
    append(r, s);
    voters.push_back(linear_voter(std::move(r)));
  }
  for (int i = 0; i < count_c; ++i) {
    std::vector<CandidateId> r{out.c, out.d};
    append(r, t);
    append(r, d_rest);
    append(r, c_rest);
    append(r, s);
    voters.push_back(linear_voter(std::move(r)));
  }
  for (int i = 0; i < count_a2; ++i) {
    std::vector<CandidateId> r{out.c};
    append(r, c_rest);
    append(r, d_rest);
    append(r, t);
    r.push_back(out.d);
    append(r, s);
    voters.push_back(linear_voter(std::move(r)));
  }

  out.merged_election = make_election(names, std::move(voters));
  if (!verify_merge_properties(out, tc, td, limits)) {
    throw ConstructionUnverified("merged election fails the score properties for this input");
  }
  return out;
}

bool verify_merge_properties(const MergeOutput& out, const DodgsonTriple& tc, const DodgsonTriple& td,
                             const SearchLimits& limits) {
  const auto score_or_inf = [&](const DodgsonTriple& t) {
    try {
      return dodgson_score(t, limits);
    } catch (const Unreachable&) {
      return kInfinity;
    }
  };
  const Election& e = out.merged_election;
  if (!e.contains(out.c) || !e.contains(out.d) || out.c == out.d) return false;
  const std::int64_t source_c = score_or_inf(tc);
  const std::int64_t source_d = score_or_inf(td);
  if (source_c == kInfinity || source_d == kInfinity) return false;
  const std::int64_t merged_c = score_or_inf(DodgsonTriple{e, out.c});
  if (merged_c != source_c + 1) return false;
  if (score_or_inf(DodgsonTriple{e, out.d}) != source_d + 1) return false;
  for (CandidateId x = 0; x < e.candidate_count(); ++x) {
    if (x == out.c || x == out.d) continue;
    if (dodgson_score_at_most(DodgsonTriple{e, x}, merged_c, limits).has_value()) return false;
  }
  return true;
}

}  // namespace electsys

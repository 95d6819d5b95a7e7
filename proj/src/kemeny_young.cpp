#include "electsys/kemeny_young.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace electsys {
namespace {

struct YoungSearch {
  std::vector<std::int64_t> sizes;               // voters per ballot group
  std::vector<std::vector<int>> effect;          // margin change per removed voter, per rival
  std::vector<std::int64_t> margin;              // N[c][d] - N[d][c]
  std::vector<std::int64_t> taken;

  bool all_positive() const {
    return std::all_of(margin.begin(), margin.end(), [](std::int64_t x) { return x > 0; });
  }

  bool dfs(std::size_t g, std::int64_t left) {
    if (left == 0) return all_positive();
    if (g == sizes.size()) return false;
    // Each removal lifts any margin by at most one.
    for (std::int64_t x : margin) {
      if (x <= 0 && 1 - x > left) return false;
    }
    const std::int64_t most = std::min(sizes[g], left);
    for (std::int64_t k = most; k >= 0; --k) {
      for (std::size_t d = 0; d < margin.size(); ++d) margin[d] += k * effect[g][d];
      taken[g] = k;
      const bool ok = dfs(g + 1, left - k);
      for (std::size_t d = 0; d < margin.size(); ++d) margin[d] -= k * effect[g][d];
      if (ok) return true;
    }
    taken[g] = 0;
    return false;
  }
};

}  // namespace

std::optional<std::int64_t> young_score(const Election& election, CandidateId c) {
  validate(election);
  require_linear(election, "Young scoring");
  require_unit_weights(election, "Young scoring");
  require_candidate(election, c, "Young score");
  const int m = election.candidate_count();
  if (m == 1) return 0;

  std::vector<CandidateId> rivals;
  for (CandidateId d = 0; d < m; ++d) {
    if (d != c) rivals.push_back(d);
  }
  std::map<std::vector<CandidateId>, std::int64_t> groups;
  for (const auto& v : election.voters) ++groups[v.order().ranking];

  YoungSearch s;
  s.margin.assign(rivals.size(), 0);
  const auto n = static_cast<std::int64_t>(election.voter_count());
  for (const auto& [ranking, count] : groups) {
    std::vector<int> pos(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < ranking.size(); ++i) pos[static_cast<std::size_t>(ranking[i])] = static_cast<int>(i);
    std::vector<int> eff(rivals.size());
    bool harmful = false;
    for (std::size_t r = 0; r < rivals.size(); ++r) {
      const bool prefers_c = pos[static_cast<std::size_t>(c)] < pos[static_cast<std::size_t>(rivals[r])];
      s.margin[r] += prefers_c ? count : -count;
      eff[r] = prefers_c ? -1 : 1;
      harmful = harmful || !prefers_c;
    }
    // Removing a voter who ranks c first only hurts c.
    if (harmful) {
      s.sizes.push_back(count);
      s.effect.push_back(std::move(eff));
    }
  }
  s.taken.assign(s.sizes.size(), 0);

  std::int64_t start = 0;
  for (std::int64_t x : s.margin) start = std::max(start, 1 - x);
  for (std::int64_t r = start; r < n; ++r) {
    if (s.dfs(0, r)) return r;
  }
  return std::nullopt;
}

WinnerSet young_winners(const Election& election) {
  WinnerSet out;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (CandidateId c = 0; c < election.candidate_count(); ++c) {
    const auto s = young_score(election, c);
    if (!s) continue;
    if (*s < best) {
      best = *s;
      out.assign(1, c);
    } else if (*s == best) {
      out.push_back(c);
    }
  }
  return out;
}

namespace {

// level[x] = index of x's level; throws unless the order partitions 0..m-1.
std::vector<int> level_index(const WeakOrder& order, int m) {
  std::vector<int> level(static_cast<std::size_t>(m), -1);
  for (std::size_t l = 0; l < order.levels.size(); ++l) {
    if (order.levels[l].empty()) throw InvalidInput("weak order has an empty level");
    for (CandidateId x : order.levels[l]) {
      if (x < 0 || x >= m) throw InvalidInput("weak order names an unknown candidate");
      if (level[static_cast<std::size_t>(x)] != -1) throw InvalidInput("weak order lists a candidate twice");
      level[static_cast<std::size_t>(x)] = static_cast<int>(l);
    }
  }
  if (std::find(level.begin(), level.end(), -1) != level.end()) {
    throw InvalidInput("weak order does not cover every candidate");
  }
  return level;
}

std::int64_t distance_from_matrix(const std::vector<int>& level, const PairwiseMatrix& n) {
  std::int64_t total = 0;
  const std::size_t m = level.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (level[a] == level[b]) {
        total += n[a][b] + n[b][a];
      } else if (level[a] < level[b]) {
        total += 2 * n[b][a];
      } else {
        total += 2 * n[a][b];
      }
    }
  }
  return total;
}

}  // namespace

std::int64_t kemeny_distance(const WeakOrder& order, const Election& election) {
  validate(election);
  require_linear(election, "Kemeny distance");
  return distance_from_matrix(level_index(order, election.candidate_count()), pairwise_matrix(election));
}

std::vector<WeakOrder> all_weak_orders(int m) {
  std::vector<WeakOrder> out;
  if (m == 0) {
    out.push_back(WeakOrder{});
    return out;
  }
  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  for (int levels = 1; levels <= m; ++levels) {
    std::fill(assign.begin(), assign.end(), 0);
    while (true) {
      std::vector<int> used(static_cast<std::size_t>(levels), 0);
      for (int a : assign) used[static_cast<std::size_t>(a)] = 1;
      if (std::all_of(used.begin(), used.end(), [](int u) { return u == 1; })) {
        WeakOrder w;
        w.levels.assign(static_cast<std::size_t>(levels), {});
        for (int x = 0; x < m; ++x) w.levels[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])].push_back(x);
        out.push_back(std::move(w));
      }
      int i = m - 1;
      while (i >= 0 && assign[static_cast<std::size_t>(i)] == levels - 1) assign[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++assign[static_cast<std::size_t>(i)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeakOrder> kemeny_consensuses(const Election& election, const KemenyOptions& options) {
  validate(election);
  require_linear(election, "Kemeny consensus");
  const int m = election.candidate_count();
  if (m > options.max_candidates) {
    throw BoundExceeded("Kemeny enumeration is limited to " + std::to_string(options.max_candidates) +
                        " candidates, got " + std::to_string(m));
  }
  const auto n = pairwise_matrix(election);
  std::vector<WeakOrder> best;
  std::int64_t best_distance = std::numeric_limits<std::int64_t>::max();
  for (auto& w : all_weak_orders(m)) {
    const std::int64_t d = distance_from_matrix(level_index(w, m), n);
    if (d < best_distance) {
      best_distance = d;
      best.clear();
    }
    if (d == best_distance) best.push_back(std::move(w));
  }
  return best;
}

WinnerSet kemeny_winners(const Election& election, const KemenyOptions& options) {
  WinnerSet out;
  for (const auto& w : kemeny_consensuses(election, options)) {
    if (!w.levels.empty()) out.insert(out.end(), w.levels.front().begin(), w.levels.front().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace electsys

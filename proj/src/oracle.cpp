#include "electsys/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <unordered_set>

namespace electsys {
namespace {

void within(const char* what, std::int64_t value, std::int64_t bound) {
  if (value > bound) {
    throw BoundExceeded(std::string(what) + " " + std::to_string(value) + " exceeds the oracle bound " +
                        std::to_string(bound));
  }
}

void check_voters(const std::vector<Voter>& voters, const ExhaustionBound& bound, bool check_prices) {
  within("voter count", static_cast<std::int64_t>(voters.size()), bound.max_voters);
  for (const auto& v : voters) {
    within("voter weight", v.weight, bound.max_weight);
    if (check_prices) within("voter price", v.price, bound.max_weight);
  }
}

std::vector<std::vector<CandidateId>> all_orders(int m) {
  std::vector<CandidateId> r(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<CandidateId>> out;
  do {
    out.push_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

// Points each ballot option hands out, one option per distinct allocation.
struct BallotOptions {
  std::vector<Ballot> ballots;
  std::vector<std::vector<Score>> points;
};

BallotOptions ballot_options(int m, BallotRule rule, const ScoringVector& alpha) {
  BallotOptions out;
  if (rule == BallotRule::Approval) {
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      std::vector<bool> a(static_cast<std::size_t>(m));
      std::vector<Score> pts(static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x) {
        a[static_cast<std::size_t>(x)] = ((mask >> x) & 1U) != 0;
        pts[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(x)] ? 1 : 0;
      }
      out.ballots.emplace_back(ApprovalVector{std::move(a)});
      out.points.push_back(std::move(pts));
    }
    return out;
  }
  std::map<std::vector<Score>, bool> seen;
  for (auto& r : all_orders(m)) {
    std::vector<Score> pts(static_cast<std::size_t>(m));
    for (std::size_t pos = 0; pos < r.size(); ++pos) pts[static_cast<std::size_t>(r[pos])] = alpha[pos];
    if (!seen.emplace(pts, true).second) continue;
    out.ballots.emplace_back(LinearOrder{std::move(r)});
    out.points.push_back(std::move(pts));
  }
  return out;
}

std::vector<Score> points_of(const Voter& v, BallotRule rule, const ScoringVector& alpha, int m) {
  std::vector<Score> pts(static_cast<std::size_t>(m), 0);
  if (rule == BallotRule::Approval) {
    const auto& a = v.approval().approvals;
    for (int x = 0; x < m; ++x) pts[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(x)] ? v.weight : 0;
  } else {
    const auto& r = v.order().ranking;
    for (std::size_t pos = 0; pos < r.size(); ++pos) pts[static_cast<std::size_t>(r[pos])] = v.weight * alpha[pos];
  }
  return pts;
}

bool target_wins(const std::vector<Score>& table, CandidateId c, WinnerMode mode) {
  const Score best = *std::max_element(table.begin(), table.end());
  if (table[static_cast<std::size_t>(c)] != best) return false;
  if (mode == WinnerMode::CoWinner) return true;
  return std::count(table.begin(), table.end(), best) == 1;
}

// Odometer over choices for a list of voters with the given weights; calls
// f(table) after each full assignment and stops when it returns true.
template <typename F>
bool odometer(std::vector<Score> table, const std::vector<Weight>& weights, const BallotOptions& opts,
              std::vector<std::size_t>& choice, F&& f) {
  const std::size_t s = weights.size();
  const std::size_t k = opts.points.size();
  const std::size_t m = table.size();
  choice.assign(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t x = 0; x < m; ++x) table[x] += weights[i] * opts.points[0][x];
  }
  while (true) {
    if (f(table)) return true;
    std::size_t i = 0;
    while (i < s && choice[i] + 1 == k) {
      for (std::size_t x = 0; x < m; ++x) table[x] += weights[i] * (opts.points[0][x] - opts.points[k - 1][x]);
      choice[i] = 0;
      ++i;
    }
    if (i == s) return false;
    for (std::size_t x = 0; x < m; ++x) {
      table[x] += weights[i] * (opts.points[choice[i] + 1][x] - opts.points[choice[i]][x]);
    }
    ++choice[i];
  }
}

}  // namespace

std::int64_t bf_dodgson_score(const DodgsonTriple& triple, const ExhaustionBound& bound) {
  const Election& e = triple.election;
  validate(e);
  require_linear(e, "Dodgson oracle");
  require_unit_weights(e, "Dodgson oracle");
  require_candidate(e, triple.distinguished, "Dodgson oracle");
  const int m = e.candidate_count();
  const auto n = static_cast<int>(e.voter_count());
  within("candidate count", m, std::min(bound.max_candidates, 5));
  within("voter count", n, std::min(bound.max_voters, 9));
  if (m == 1) return 0;
  if (n == 0) throw Unreachable("no switches are possible without voters");

  const auto orders = all_orders(m);
  std::map<std::vector<CandidateId>, std::uint8_t> index;
  for (std::size_t i = 0; i < orders.size(); ++i) index[orders[i]] = static_cast<std::uint8_t>(i);
  const CandidateId c = triple.distinguished;
  // beats[p][d]: c is above d in order p.
  std::vector<std::vector<char>> beats(orders.size(), std::vector<char>(static_cast<std::size_t>(m), 0));
  std::vector<std::vector<std::uint8_t>> swap(orders.size());
  for (std::size_t p = 0; p < orders.size(); ++p) {
    bool seen_c = false;
    for (CandidateId x : orders[p]) {
      if (x == c) seen_c = true;
      else beats[p][static_cast<std::size_t>(x)] = seen_c ? 1 : 0;
    }
    for (int j = 0; j + 1 < m; ++j) {
      auto r = orders[p];
      std::swap(r[static_cast<std::size_t>(j)], r[static_cast<std::size_t>(j) + 1]);
      swap[p].push_back(index[r]);
    }
  }

  // A profile is a sorted multiset of order indices packed 7 bits apiece.
  auto pack = [](std::vector<std::uint8_t> ps) {
    std::sort(ps.begin(), ps.end());
    std::uint64_t key = 0;
    for (auto p : ps) key = (key << 7) | p;
    return key;
  };
  auto unpack = [n](std::uint64_t key) {
    std::vector<std::uint8_t> ps(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      ps[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(key & 0x7F);
      key >>= 7;
    }
    return ps;
  };
  auto condorcet = [&](const std::vector<std::uint8_t>& ps) {
    for (int d = 0; d < m; ++d) {
      if (d == c) continue;
      int k = 0;
      for (auto p : ps) k += beats[p][static_cast<std::size_t>(d)];
      if (2 * k <= n) return false;
    }
    return true;
  };

  std::vector<std::uint8_t> start;
  for (const auto& v : e.voters) start.push_back(index[v.order().ranking]);
  std::vector<std::uint64_t> layer{pack(start)};
  std::unordered_set<std::uint64_t> seen(layer.begin(), layer.end());
  for (std::int64_t depth = 0;; ++depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : layer) {
      const auto ps = unpack(key);
      if (condorcet(ps)) return depth;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0 && ps[i] == ps[i - 1]) continue;
        for (auto q : swap[ps[i]]) {
          auto moved = ps;
          moved[i] = q;
          const auto k2 = pack(moved);
          if (seen.insert(k2).second) next.push_back(k2);
        }
      }
    }
    if (next.empty()) throw Unreachable("no switch sequence reaches a Condorcet win");
    layer = std::move(next);
  }
}

std::optional<std::int64_t> bf_young(const Election& election, CandidateId c, const ExhaustionBound& bound) {
  validate(election);
  require_linear(election, "Young oracle");
  require_unit_weights(election, "Young oracle");
  require_candidate(election, c, "Young oracle");
  within("candidate count", election.candidate_count(), bound.max_candidates);
  const auto n = election.voter_count();
  within("voter count", static_cast<std::int64_t>(n), std::min(bound.max_voters, 20));
  std::optional<std::int64_t> best;
  for (std::uint32_t removed = 0; removed < (1U << n); ++removed) {
    const auto k = static_cast<std::int64_t>(std::popcount(removed));
    if (best && k >= *best) continue;
    Election rest;
    rest.candidates = election.candidates;
    for (std::size_t i = 0; i < n; ++i) {
      if (((removed >> i) & 1U) == 0) rest.voters.push_back(election.voters[i]);
    }
    if (condorcet_winner(rest) == c) best = k;
  }
  return best;
}

namespace {

void ordered_partitions(std::uint32_t remaining, std::vector<std::uint32_t>& levels,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(levels);
    return;
  }
  for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    levels.push_back(sub);
    ordered_partitions(remaining & ~sub, levels, out);
    levels.pop_back();
  }
}

}  // namespace

std::vector<WeakOrder> bf_kemeny(const Election& election, const ExhaustionBound& bound) {
  validate(election);
  require_linear(election, "Kemeny oracle");
  const int m = election.candidate_count();
  within("candidate count", m, bound.max_candidates);
  within("voter count", static_cast<std::int64_t>(election.voter_count()), bound.max_voters);
  std::vector<std::vector<std::uint32_t>> parts;
  std::vector<std::uint32_t> levels;
  ordered_partitions((1U << m) - 1, levels, parts);

  std::vector<std::vector<int>> pos;
  for (const auto& v : election.voters) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < v.order().ranking.size(); ++i) {
      p[static_cast<std::size_t>(v.order().ranking[i])] = static_cast<int>(i);
    }
    pos.push_back(std::move(p));
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<WeakOrder> out;
  for (const auto& part : parts) {
    std::vector<int> level(static_cast<std::size_t>(m));
    for (std::size_t l = 0; l < part.size(); ++l) {
      for (int x = 0; x < m; ++x) {
        if ((part[l] >> x) & 1U) level[static_cast<std::size_t>(x)] = static_cast<int>(l);
      }
    }
    std::int64_t dist = 0;
    for (std::size_t vi = 0; vi < pos.size(); ++vi) {
      const Weight w = election.voters[vi].weight;
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          const int la = level[static_cast<std::size_t>(a)];
          const int lb = level[static_cast<std::size_t>(b)];
          const bool voter_a_first = pos[vi][static_cast<std::size_t>(a)] < pos[vi][static_cast<std::size_t>(b)];
          if (la == lb) dist += w;
          else if ((la < lb) != voter_a_first) dist += 2 * w;
        }
      }
    }
    if (dist > best) continue;
    if (dist < best) {
      best = dist;
      out.clear();
    }
    WeakOrder wo;
    for (std::uint32_t lv : part) {
      std::vector<CandidateId> ids;
      for (int x = 0; x < m; ++x) {
        if ((lv >> x) & 1U) ids.push_back(x);
      }
      wo.levels.push_back(std::move(ids));
    }
    out.push_back(std::move(wo));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WinnerSet bf_kemeny_winners(const Election& election, const ExhaustionBound& bound) {
  std::vector<char> top(election.candidates.size(), 0);
  for (const auto& w : bf_kemeny(election, bound)) {
    for (CandidateId x : w.levels.front()) top[static_cast<std::size_t>(x)] = 1;
  }
  WinnerSet out;
  for (std::size_t x = 0; x < top.size(); ++x) {
    if (top[x] != 0) out.push_back(static_cast<CandidateId>(x));
  }
  return out;
}

ManipulationVerdict bf_manipulation(const ManipulationInstance& in, const ExhaustionBound& bound) {
  validate(in.election);
  require_candidate(in.election, in.target, "manipulation oracle");
  const int m = in.election.candidate_count();
  within("candidate count", m, bound.max_candidates);
  check_voters(in.election.voters, bound, false);
  within("manipulator count", static_cast<std::int64_t>(in.manipulator_weights.size()), bound.max_voters);
  for (Weight w : in.manipulator_weights) {
    if (w < 1) throw InvalidInput("manipulator weights must be positive");
    within("manipulator weight", w, bound.max_weight);
  }
  if (in.rule == BallotRule::Scoring) {
    require_linear(in.election, "manipulation oracle");
    if (in.alpha.size() != static_cast<std::size_t>(m)) throw DimensionMismatch("scoring vector length mismatch");
  } else {
    require_approval(in.election, "manipulation oracle");
  }
  const auto opts = ballot_options(m, in.rule, in.alpha);
  std::vector<Score> base(static_cast<std::size_t>(m), 0);
  for (const auto& v : in.election.voters) {
    const auto pts = points_of(v, in.rule, in.alpha, m);
    for (int x = 0; x < m; ++x) base[static_cast<std::size_t>(x)] += pts[static_cast<std::size_t>(x)];
  }
  std::vector<std::size_t> choice;
  const bool found = odometer(base, in.manipulator_weights, opts, choice,
                              [&](const std::vector<Score>& t) { return target_wins(t, in.target, in.mode); });
  if (!found) return {};
  ManipulationVerdict v;
  v.yes = true;
  for (std::size_t i : choice) v.ballots.push_back(opts.ballots[i]);
  return v;
}

BriberyVerdict bf_bribery(const BriberyInstance& in, const ExhaustionBound& bound) {
  validate(in.election);
  require_candidate(in.election, in.target, "bribery oracle");
  const int m = in.election.candidate_count();
  within("candidate count", m, bound.max_candidates);
  check_voters(in.election.voters, bound, true);
  within("budget", in.budget, bound.max_budget);
  if (in.budget < 0) throw InvalidInput("bribery budget must be nonnegative");
  ScoringVector alpha = in.alpha;
  if (in.rule == BallotRule::Scoring) {
    require_linear(in.election, "bribery oracle");
    if (alpha.size() == 0) alpha = family_vector(RuleFamily::Plurality, m);
    if (alpha.size() != static_cast<std::size_t>(m)) throw DimensionMismatch("scoring vector length mismatch");
  } else {
    require_approval(in.election, "bribery oracle");
  }
  const bool priced = in.variant == BriberyVariant::Priced || in.variant == BriberyVariant::WeightedPriced;
  const auto opts = ballot_options(m, in.rule, alpha);
  const auto& voters = in.election.voters;
  const std::size_t n = voters.size();
  std::vector<std::vector<Score>> contrib;
  std::vector<Score> base(static_cast<std::size_t>(m), 0);
  for (const auto& v : voters) {
    contrib.push_back(points_of(v, in.rule, alpha, m));
    for (int x = 0; x < m; ++x) base[static_cast<std::size_t>(x)] += contrib.back()[static_cast<std::size_t>(x)];
  }

  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Weight cost = 0;
    std::vector<Score> table = base;
    std::vector<Weight> weights;
    std::vector<std::size_t> who;
    for (std::size_t i = 0; i < n; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      cost += priced ? voters[i].price : 1;
      weights.push_back(voters[i].weight);
      who.push_back(i);
      for (int x = 0; x < m; ++x) table[static_cast<std::size_t>(x)] -= contrib[i][static_cast<std::size_t>(x)];
    }
    if (cost > in.budget) continue;
    std::vector<std::size_t> choice;
    const bool found = odometer(table, weights, opts, choice,
                                [&](const std::vector<Score>& t) { return target_wins(t, in.target, in.mode); });
    if (!found) continue;
    BriberyVerdict v;
    v.yes = true;
    v.bribed = who;
    for (std::size_t k : choice) v.new_ballots.push_back(opts.ballots[k]);
    v.cost = cost;
    return v;
  }
  return {};
}

namespace {

// Control evaluation over bitmasks: candidates in a uint32, voters (V first,
// then the pool) in a uint64.
struct MaskElection {
  VotingSystem system;
  int m = 0;
  std::vector<std::vector<int>> pos;  // linear ballots
  std::vector<std::uint32_t> approve;  // approval ballots
  std::vector<Weight> weight;

  void add(const Voter& v) {
    weight.push_back(v.weight);
    if (system == VotingSystem::Approval) {
      std::uint32_t mask = 0;
      for (int x = 0; x < m; ++x) {
        if (v.approval().approvals[static_cast<std::size_t>(x)]) mask |= 1U << x;
      }
      approve.push_back(mask);
    } else {
      std::vector<int> p(static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < v.order().ranking.size(); ++i) {
        p[static_cast<std::size_t>(v.order().ranking[i])] = static_cast<int>(i);
      }
      pos.push_back(std::move(p));
    }
  }

  std::uint32_t winners(std::uint32_t cands, std::uint64_t voters) const {
    if (cands == 0) return 0;
    std::array<Weight, 32> score{};
    Weight total = 0;
    for (std::size_t v = 0; v < weight.size(); ++v) {
      if (((voters >> v) & 1U) == 0) continue;
      total += weight[v];
      if (system == VotingSystem::Plurality) {
        int best = -1;
        for (int x = 0; x < m; ++x) {
          if (((cands >> x) & 1U) && (best < 0 || pos[v][static_cast<std::size_t>(x)] < pos[v][static_cast<std::size_t>(best)])) {
            best = x;
          }
        }
        score[static_cast<std::size_t>(best)] += weight[v];
      } else if (system == VotingSystem::Approval) {
        for (int x = 0; x < m; ++x) {
          if ((cands >> x) & (approve[v] >> x) & 1U) score[static_cast<std::size_t>(x)] += weight[v];
        }
      }
    }
    if (system == VotingSystem::Condorcet) {
      for (int x = 0; x < m; ++x) {
        if (((cands >> x) & 1U) == 0) continue;
        bool all = true;
        for (int y = 0; y < m && all; ++y) {
          if (y == x || ((cands >> y) & 1U) == 0) continue;
          Weight k = 0;
          for (std::size_t v = 0; v < weight.size(); ++v) {
            if (((voters >> v) & 1U) && pos[v][static_cast<std::size_t>(x)] < pos[v][static_cast<std::size_t>(y)]) {
              k += weight[v];
            }
          }
          if (2 * k <= total) all = false;
        }
        if (all) return 1U << x;
      }
      return 0;
    }
    Weight best = -1;
    for (int x = 0; x < m; ++x) {
      if ((cands >> x) & 1U) best = std::max(best, score[static_cast<std::size_t>(x)]);
    }
    std::uint32_t out = 0;
    for (int x = 0; x < m; ++x) {
      if (((cands >> x) & 1U) && score[static_cast<std::size_t>(x)] == best) out |= 1U << x;
    }
    return out;
  }
};

std::uint32_t advance(std::uint32_t w, TieRule tie) {
  if (tie == TieRule::TE && std::popcount(w) != 1) return 0;
  return w;
}

}  // namespace

ControlVerdict bf_control(const ControlSpec& spec, const ControlInstance& in, const ExhaustionBound& bound) {
  validate_spec(spec);
  validate(in.election);
  const int m = in.election.candidate_count();
  within("candidate count", m, std::min(bound.max_candidates, 31));
  check_voters(in.election.voters, bound, false);
  check_voters(in.voter_pool, bound, false);
  require_candidate(in.election, in.target, "control oracle");
  if (in.limit < 0) throw InvalidInput("control limit must be nonnegative");
  std::uint32_t spoilers = 0;
  for (CandidateId d : in.spoilers) {
    require_candidate(in.election, d, "spoiler");
    spoilers |= 1U << d;
  }
  if ((spoilers >> in.target) & 1U) throw InvalidInput("the control target cannot be a spoiler");
  if (spec.type == ControlType::AddCandidates && spoilers == 0) throw PoolMissing("no spoilers to add");
  if (spec.type == ControlType::AddVoters && in.voter_pool.empty()) throw PoolMissing("no pool voters to add");

  MaskElection me{spec.system, m, {}, {}, {}};
  const bool approval = spec.system == VotingSystem::Approval;
  for (const auto* list : {&in.election.voters, &in.voter_pool}) {
    for (const auto& v : *list) {
      validate_voter(v, m);
      if (v.is_linear() == approval) throw BallotKindMismatch("ballot kind does not match the voting system");
      me.add(v);
    }
  }
  const std::size_t n = in.election.voters.size();
  const std::size_t w = in.voter_pool.size();
  const std::uint32_t all_c = (m == 32) ? ~0U : ((1U << m) - 1);
  const std::uint32_t base = all_c & ~spoilers;
  const std::uint64_t all_v = (std::uint64_t{1} << n) - 1;
  const std::uint32_t c_bit = 1U << in.target;
  const auto limit = static_cast<int>(in.limit);
  const auto met = [&](std::uint32_t winners) {
    return spec.mode == ControlMode::Constructive ? winners == c_bit : winners != c_bit;
  };

  ControlVerdict verdict;
  const auto found = [&](std::uint32_t winners, std::uint32_t cand_mask, std::uint64_t voter_mask) {
    verdict.yes = true;
    for (int x = 0; x < m; ++x) {
      if ((cand_mask >> x) & 1U) verdict.action.candidates.push_back(x);
    }
    for (std::size_t i = 0; i < 64; ++i) {
      if ((voter_mask >> i) & 1U) verdict.action.voters.push_back(i);
    }
    for (int x = 0; x < m; ++x) {
      if ((winners >> x) & 1U) verdict.final_winners.push_back(x);
    }
    return verdict;
  };

  switch (spec.type) {
    case ControlType::AddCandidates:
      for (std::uint32_t sub = 0; sub <= spoilers; ++sub) {
        if ((sub & ~spoilers) != 0) continue;
        const auto win = me.winners(base | sub, all_v);
        if (met(win)) return found(win, sub, 0);
      }
      break;
    case ControlType::DeleteCandidates:
      for (std::uint32_t sub = 0; sub <= base; ++sub) {
        if ((sub & ~base) != 0 || std::popcount(sub) > limit) continue;
        if (spec.mode == ControlMode::Destructive && (sub & c_bit) != 0) continue;
        const auto win = me.winners(base & ~sub, all_v);
        if (met(win)) return found(win, sub, 0);
      }
      break;
    case ControlType::PartitionCandidates:
    case ControlType::RunoffPartitionCandidates:
      for (std::uint32_t c1 = 0; c1 <= base; ++c1) {
        if ((c1 & ~base) != 0) continue;
        const std::uint32_t c2 = base & ~c1;
        const auto s1 = advance(me.winners(c1, all_v), *spec.tie);
        const auto s2 = spec.type == ControlType::PartitionCandidates ? c2 : advance(me.winners(c2, all_v), *spec.tie);
        const auto win = me.winners(s1 | s2, all_v);
        if (met(win)) return found(win, c1, 0);
      }
      break;
    case ControlType::AddVoters:
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << w); ++sub) {
        if (std::popcount(sub) > limit) continue;
        const auto win = me.winners(base, all_v | (sub << n));
        if (met(win)) return found(win, 0, sub);
      }
      break;
    case ControlType::DeleteVoters:
      for (std::uint64_t sub = 0; sub <= all_v; ++sub) {
        if (std::popcount(sub) > limit) continue;
        const auto win = me.winners(base, all_v & ~sub);
        if (met(win)) return found(win, 0, sub);
      }
      break;
    case ControlType::PartitionVoters:
      for (std::uint64_t v1 = 0; v1 <= all_v; ++v1) {
        const std::uint64_t v2 = all_v & ~v1;
        const auto s1 = v1 == 0 ? 0U : advance(me.winners(base, v1), *spec.tie);
        const auto s2 = v2 == 0 ? 0U : advance(me.winners(base, v2), *spec.tie);
        const auto win = me.winners(s1 | s2, all_v);
        if (met(win)) return found(win, 0, v1);
      }
      break;
  }
  return ControlVerdict{};
}

}  // namespace electsys

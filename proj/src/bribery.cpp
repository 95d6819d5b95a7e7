#include "electsys/bribery.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

namespace electsys {
namespace {

constexpr Weight kNone = std::numeric_limits<Weight>::max() / 4;

Weight strictness(const BriberyInstance& in) { return in.mode == WinnerMode::Unique ? 1 : 0; }

void check_common(const BriberyInstance& in) {
  validate(in.election);
  require_candidate(in.election, in.target, "bribery target");
  if (in.budget < 0) throw InvalidInput("bribery budget must be nonnegative");
}

bool is_plurality(const BriberyInstance& in) {
  return in.alpha.size() == 0 || in.alpha == family_vector(RuleFamily::Plurality, in.election.candidate_count());
}

void check_plurality(const BriberyInstance& in) {
  check_common(in);
  if (in.rule != BallotRule::Scoring) throw InvalidInput("plurality bribery needs linear ballots");
  require_linear(in.election, "plurality bribery");
  if (!is_plurality(in)) throw InvalidInput("plurality bribery needs the plurality vector");
}

ScoringVector effective_alpha(const BriberyInstance& in) {
  return in.alpha.size() == 0 ? family_vector(RuleFamily::Plurality, in.election.candidate_count()) : in.alpha;
}

std::vector<CandidateId> target_first(int m, CandidateId c) {
  std::vector<CandidateId> r{c};
  for (CandidateId x = 0; x < m; ++x) {
    if (x != c) r.push_back(x);
  }
  return r;
}

Ballot target_ballot(const BriberyInstance& in) {
  const int m = in.election.candidate_count();
  if (in.rule == BallotRule::Approval) {
    std::vector<bool> a(static_cast<std::size_t>(m), false);
    a[static_cast<std::size_t>(in.target)] = true;
    return ApprovalVector{std::move(a)};
  }
  return LinearOrder{target_first(m, in.target)};
}

BriberyVerdict verdict_for(const BriberyInstance& in, std::vector<std::size_t> bribed) {
  std::sort(bribed.begin(), bribed.end());
  BriberyVerdict v;
  v.yes = true;
  for (std::size_t i : bribed) v.cost += bribe_cost(in, in.election.voters[i]);
  v.new_ballots.assign(bribed.size(), target_ballot(in));
  v.bribed = std::move(bribed);
  return v;
}

CandidateId top(const Voter& v) { return v.order().ranking.front(); }

std::vector<Weight> plurality_tally(const Election& e) {
  std::vector<Weight> t(e.candidates.size(), 0);
  for (const auto& v : e.voters) t[static_cast<std::size_t>(top(v))] += v.weight;
  return t;
}

bool plurality_ok(const std::vector<Weight>& tally, CandidateId c, Weight s) {
  for (std::size_t d = 0; d < tally.size(); ++d) {
    if (static_cast<CandidateId>(d) != c && tally[d] > tally[static_cast<std::size_t>(c)] - s) return false;
  }
  return true;
}

// Non-target voters grouped by their top candidate.
std::vector<std::vector<std::size_t>> voters_by_top(const Election& e) {
  std::vector<std::vector<std::size_t>> out(e.candidates.size());
  for (std::size_t i = 0; i < e.voters.size(); ++i) out[static_cast<std::size_t>(top(e.voters[i]))].push_back(i);
  return out;
}

std::size_t budget_count(Weight budget, std::size_t cap) {
  return static_cast<std::size_t>(std::min<Weight>(budget, static_cast<Weight>(cap)));
}

}  // namespace

std::string_view to_string(BriberyVariant variant) {
  switch (variant) {
    case BriberyVariant::Plain: return "plain";
    case BriberyVariant::Weighted: return "weighted";
    case BriberyVariant::Priced: return "priced";
    case BriberyVariant::WeightedPriced: return "weighted_priced";
  }
  return "?";
}

std::string_view to_string(BriberyEncoding encoding) {
  switch (encoding) {
    case BriberyEncoding::Binary: return "binary";
    case BriberyEncoding::WeightsUnary: return "unary-weights";
    case BriberyEncoding::PricesUnary: return "unary-prices";
  }
  return "?";
}

Weight bribe_cost(const BriberyInstance& in, const Voter& voter) {
  const bool priced = in.variant == BriberyVariant::Priced || in.variant == BriberyVariant::WeightedPriced;
  return priced ? voter.price : 1;
}

BriberyVerdict bribe_plurality(const BriberyInstance& in) {
  check_plurality(in);
  require_unit_weights(in.election, "plain plurality bribery");
  const auto c = in.target;
  const Weight s = strictness(in);
  auto tally = plurality_tally(in.election);
  auto groups = voters_by_top(in.election);
  std::vector<std::size_t> next(groups.size(), 0);
  std::vector<std::size_t> bribed;
  Weight left = in.budget;
  while (!plurality_ok(tally, c, s)) {
    if (left == 0) return {};
    // Take a voter away from a strongest rival.
    std::optional<std::size_t> rival;
    for (std::size_t d = 0; d < tally.size(); ++d) {
      if (static_cast<CandidateId>(d) == c) continue;
      if (!rival || tally[d] > tally[*rival]) rival = d;
    }
    if (!rival || next[*rival] == groups[*rival].size()) return {};
    bribed.push_back(groups[*rival][next[*rival]++]);
    tally[*rival] -= 1;
    tally[static_cast<std::size_t>(c)] += 1;
    --left;
  }
  return verdict_for(in, std::move(bribed));
}

namespace {

struct Opponent {
  std::size_t id = 0;
  Weight tally = 0;
  std::vector<std::size_t> voters;
};

std::vector<Opponent> opponents(const BriberyInstance& in) {
  const auto groups = voters_by_top(in.election);
  std::vector<Opponent> out;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    if (static_cast<CandidateId>(d) == in.target) continue;
    Opponent o;
    o.id = d;
    o.voters = groups[d];
    for (std::size_t i : o.voters) o.tally += in.election.voters[i].weight;
    out.push_back(std::move(o));
  }
  return out;
}

class CountSearch {
 public:
  CountSearch(const BriberyInstance& in, const SearchLimits& limits) : in_(in), max_nodes_(limits.max_nodes) {
    ops_ = opponents(in);
    for (auto& o : ops_) {
      std::stable_sort(o.voters.begin(), o.voters.end(), [&](std::size_t a, std::size_t b) {
        return in.election.voters[a].weight > in.election.voters[b].weight;
      });
      std::vector<Weight> pre{0};
      for (std::size_t i : o.voters) pre.push_back(pre.back() + in.election.voters[i].weight);
      prefix_.push_back(std::move(pre));
    }
    // Heaviest voters among opponents dd.. for the optimistic bound.
    suffix_best_.resize(ops_.size() + 1);
    for (std::size_t dd = ops_.size(); dd-- > 0;) {
      std::vector<Weight> ws;
      for (std::size_t j = dd; j < ops_.size(); ++j) {
        for (std::size_t i : ops_[j].voters) ws.push_back(in.election.voters[i].weight);
      }
      std::sort(ws.rbegin(), ws.rend());
      std::vector<Weight> pre{0};
      for (Weight w : ws) pre.push_back(pre.back() + w);
      suffix_best_[dd] = std::move(pre);
    }
    suffix_best_[ops_.size()] = {0};
    base_ = plurality_tally(in.election)[static_cast<std::size_t>(in.target)];
    take_.assign(ops_.size(), 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    const Weight floor_rival = ops_.empty() ? std::numeric_limits<Weight>::min() : 0;
    if (!dfs(0, budget_count(in_.budget, in_.election.voters.size()), 0, floor_rival)) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < ops_.size(); ++d) {
      out.insert(out.end(), ops_[d].voters.begin(), ops_[d].voters.begin() + static_cast<std::ptrdiff_t>(take_[d]));
    }
    return out;
  }

 private:
  bool dfs(std::size_t dd, std::size_t left, Weight gained, Weight worst_rival) {
    const Weight s = strictness(in_);
    const auto& best = suffix_best_[dd];
    const Weight reach = base_ + gained + best[std::min(left, best.size() - 1)];
    if (worst_rival > reach - s) return false;
    if (dd == ops_.size()) return true;
    if (++nodes_ > max_nodes_) throw SearchBudgetExceeded("weighted plurality bribery exceeded its node budget");
    const auto& o = ops_[dd];
    for (std::size_t k = std::min(left, o.voters.size()) + 1; k-- > 0;) {
      take_[dd] = k;
      const Weight removed = prefix_[dd][k];
      if (dfs(dd + 1, left - k, gained + removed, std::max(worst_rival, o.tally - removed))) return true;
    }
    take_[dd] = 0;
    return false;
  }

  const BriberyInstance& in_;
  std::vector<Opponent> ops_;
  std::vector<std::vector<Weight>> prefix_;
  std::vector<std::vector<Weight>> suffix_best_;
  std::vector<std::size_t> take_;
  Weight base_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

}  // namespace

BriberyVerdict bribe_plurality_weighted(const BriberyInstance& in, const SearchLimits& limits) {
  check_plurality(in);
  CountSearch search(in, limits);
  auto chosen = search.run();
  if (!chosen) return {};
  return verdict_for(in, std::move(*chosen));
}

BriberyVerdict bribe_plurality_priced(const BriberyInstance& in) {
  check_plurality(in);
  require_unit_weights(in.election, "priced plurality bribery");
  const Weight s = strictness(in);
  auto ops = opponents(in);
  const auto& voters = in.election.voters;
  std::size_t pool = 0;
  for (auto& o : ops) {
    std::stable_sort(o.voters.begin(), o.voters.end(),
                     [&](std::size_t a, std::size_t b) { return voters[a].price < voters[b].price; });
    pool += o.voters.size();
  }
  const Weight base = plurality_tally(in.election)[static_cast<std::size_t>(in.target)];

  Weight best_cost = kNone;
  std::vector<std::size_t> best_set;
  // T is c's final score; each opponent must drop to T - s.
  for (Weight gain = 0; gain <= static_cast<Weight>(pool); ++gain) {
    const Weight limit = base + gain - s;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> rest;
    bool feasible = true;
    for (const auto& o : ops) {
      const Weight forced = std::max<Weight>(0, o.tally - limit);
      if (forced > static_cast<Weight>(o.voters.size())) {
        feasible = false;
        break;
      }
      chosen.insert(chosen.end(), o.voters.begin(), o.voters.begin() + forced);
      rest.insert(rest.end(), o.voters.begin() + forced, o.voters.end());
    }
    if (!feasible || static_cast<Weight>(chosen.size()) > gain) continue;
    const auto extra = static_cast<std::size_t>(gain) - chosen.size();
    if (extra > rest.size()) continue;
    std::stable_sort(rest.begin(), rest.end(),
                     [&](std::size_t a, std::size_t b) { return voters[a].price < voters[b].price; });
    chosen.insert(chosen.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(extra));
    Weight cost = 0;
    for (std::size_t i : chosen) cost += voters[i].price;
    if (cost < best_cost) {
      best_cost = cost;
      best_set = std::move(chosen);
    }
  }
  if (best_cost > in.budget) return {};
  return verdict_for(in, std::move(best_set));
}

namespace {

// Monotone include/exclude search: bribing one more voter never hurts c.
class SubsetSearch {
 public:
  using Check = std::function<bool(const std::vector<char>&)>;

  SubsetSearch(std::vector<std::size_t> items, std::vector<Weight> costs, Weight budget, Check ok,
               const SearchLimits& limits)
      : items_(std::move(items)), costs_(std::move(costs)), budget_(budget), ok_(std::move(ok)),
        max_nodes_(limits.max_nodes) {}

  std::optional<std::vector<std::size_t>> run(std::size_t voter_count) {
    chosen_.assign(voter_count, 0);
    if (!dfs(0, budget_)) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < voter_count; ++i) {
      if (chosen_[i] != 0) out.push_back(i);
    }
    return out;
  }

 private:
  bool dfs(std::size_t i, Weight left) {
    if (ok_(chosen_)) return true;
    if (i == items_.size()) return false;
    if (++nodes_ > max_nodes_) throw SearchBudgetExceeded("bribery search exceeded its node budget");
    std::vector<std::size_t> added;
    for (std::size_t j = i; j < items_.size(); ++j) {
      if (costs_[j] <= left && chosen_[items_[j]] == 0) {
        chosen_[items_[j]] = 1;
        added.push_back(items_[j]);
      }
    }
    const bool hopeful = ok_(chosen_);
    for (std::size_t x : added) chosen_[x] = 0;
    if (!hopeful) return false;
    if (costs_[i] <= left) {
      chosen_[items_[i]] = 1;
      if (dfs(i + 1, left - costs_[i])) return true;
      chosen_[items_[i]] = 0;
    }
    return dfs(i + 1, left);
  }

  std::vector<std::size_t> items_;
  std::vector<Weight> costs_;
  Weight budget_;
  Check ok_;
  std::vector<char> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

BriberyVerdict weighted_priced_binary(const BriberyInstance& in, const SearchLimits& limits) {
  const auto& voters = in.election.voters;
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < voters.size(); ++i) {
    if (top(voters[i]) != in.target) items.push_back(i);
  }
  std::stable_sort(items.begin(), items.end(),
                   [&](std::size_t a, std::size_t b) { return voters[a].weight > voters[b].weight; });
  std::vector<Weight> costs;
  for (std::size_t i : items) costs.push_back(voters[i].price);
  const auto base = plurality_tally(in.election);
  const Weight s = strictness(in);
  auto ok = [&](const std::vector<char>& chosen) {
    auto t = base;
    for (std::size_t i : items) {
      if (chosen[i] != 0) {
        t[static_cast<std::size_t>(top(voters[i]))] -= voters[i].weight;
        t[static_cast<std::size_t>(in.target)] += voters[i].weight;
      }
    }
    return plurality_ok(t, in.target, s);
  };
  SubsetSearch search(items, costs, in.budget, ok, limits);
  auto chosen = search.run(voters.size());
  if (!chosen) return {};
  return verdict_for(in, std::move(*chosen));
}

// Min price to bribe exactly x weight from one opponent, with choice table
// for reconstruction.
struct ExactWeightKnapsack {
  std::vector<std::vector<Weight>> cost;  // cost[i][x] using the first i voters
  std::vector<std::size_t> voters;

  ExactWeightKnapsack(const Election& e, std::vector<std::size_t> vs, Weight total) : voters(std::move(vs)) {
    const auto cap = static_cast<std::size_t>(total);
    cost.assign(voters.size() + 1, std::vector<Weight>(cap + 1, kNone));
    cost[0][0] = 0;
    for (std::size_t i = 0; i < voters.size(); ++i) {
      const auto& v = e.voters[voters[i]];
      const auto w = static_cast<std::size_t>(v.weight);
      for (std::size_t x = 0; x <= cap; ++x) {
        cost[i + 1][x] = cost[i][x];
        if (x >= w && cost[i][x - w] != kNone) cost[i + 1][x] = std::min(cost[i + 1][x], cost[i][x - w] + v.price);
      }
    }
  }

  const std::vector<Weight>& final_row() const { return cost.back(); }

  void pick(const Election& e, std::size_t x, std::vector<std::size_t>& out) const {
    for (std::size_t i = voters.size(); i > 0; --i) {
      if (cost[i][x] == cost[i - 1][x]) continue;
      out.push_back(voters[i - 1]);
      x -= static_cast<std::size_t>(e.voters[voters[i - 1]].weight);
    }
  }
};

BriberyVerdict weighted_priced_weights_unary(const BriberyInstance& in) {
  const auto ops = opponents(in);
  const Weight s = strictness(in);
  const Weight base = plurality_tally(in.election)[static_cast<std::size_t>(in.target)];
  std::vector<ExactWeightKnapsack> sacks;
  Weight total = 0;
  for (const auto& o : ops) {
    sacks.emplace_back(in.election, o.voters, o.tally);
    total += o.tally;
  }
  const auto cap = static_cast<std::size_t>(total);

  for (std::size_t y = 0; y <= cap; ++y) {
    const Weight limit = base + static_cast<Weight>(y) - s;
    // comb[j][z]: min cost for opponents < j removing z in total, each meeting
    // its own requirement.
    std::vector<std::vector<Weight>> comb(ops.size() + 1, std::vector<Weight>(cap + 1, kNone));
    std::vector<std::vector<std::size_t>> took(ops.size() + 1, std::vector<std::size_t>(cap + 1, 0));
    comb[0][0] = 0;
    bool feasible = limit >= 0 || ops.empty();
    for (std::size_t j = 0; j < ops.size() && feasible; ++j) {
      const Weight need = std::max<Weight>(0, ops[j].tally - limit);
      const auto& row = sacks[j].final_row();
      for (std::size_t z = 0; z <= cap; ++z) {
        if (comb[j][z] == kNone) continue;
        for (std::size_t x = static_cast<std::size_t>(need); x < row.size() && z + x <= cap; ++x) {
          if (row[x] == kNone) continue;
          const Weight c = comb[j][z] + row[x];
          if (c < comb[j + 1][z + x]) {
            comb[j + 1][z + x] = c;
            took[j + 1][z + x] = x;
          }
        }
      }
    }
    if (!feasible || comb[ops.size()][y] > in.budget) continue;
    std::vector<std::size_t> chosen;
    std::size_t z = y;
    for (std::size_t j = ops.size(); j > 0; --j) {
      const std::size_t x = took[j][z];
      sacks[j - 1].pick(in.election, x, chosen);
      z -= x;
    }
    return verdict_for(in, std::move(chosen));
  }
  return {};
}

// Max weight bribable from one opponent for at most p money.
struct MaxWeightKnapsack {
  std::vector<std::vector<Weight>> best;  // best[i][p] using the first i voters
  std::vector<std::size_t> voters;

  MaxWeightKnapsack(const Election& e, std::vector<std::size_t> vs, std::size_t cap) : voters(std::move(vs)) {
    best.assign(voters.size() + 1, std::vector<Weight>(cap + 1, 0));
    for (std::size_t i = 0; i < voters.size(); ++i) {
      const auto& v = e.voters[voters[i]];
      const auto p = static_cast<std::size_t>(v.price);
      for (std::size_t q = 0; q <= cap; ++q) {
        best[i + 1][q] = best[i][q];
        if (q >= p) best[i + 1][q] = std::max(best[i + 1][q], best[i][q - p] + v.weight);
      }
    }
  }

  const std::vector<Weight>& final_row() const { return best.back(); }

  void pick(const Election& e, std::size_t q, std::vector<std::size_t>& out) const {
    for (std::size_t i = voters.size(); i > 0; --i) {
      if (best[i][q] == best[i - 1][q]) continue;
      out.push_back(voters[i - 1]);
      q -= static_cast<std::size_t>(e.voters[voters[i - 1]].price);
    }
  }
};

BriberyVerdict weighted_priced_prices_unary(const BriberyInstance& in) {
  const auto ops = opponents(in);
  if (ops.empty()) return verdict_for(in, {});
  const Weight s = strictness(in);
  const Weight base = plurality_tally(in.election)[static_cast<std::size_t>(in.target)];
  Weight price_total = 0;
  for (const auto& o : ops) {
    for (std::size_t i : o.voters) price_total += in.election.voters[i].price;
  }
  const auto cap = static_cast<std::size_t>(std::min(in.budget, price_total));
  std::vector<MaxWeightKnapsack> sacks;
  for (const auto& o : ops) sacks.emplace_back(in.election, o.voters, cap);

  // The largest remaining opponent tally M is one of these values.
  std::vector<Weight> levels{0};
  for (std::size_t j = 0; j < ops.size(); ++j) {
    for (Weight w : sacks[j].final_row()) levels.push_back(ops[j].tally - w);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  constexpr Weight kUnset = -1;
  for (Weight m_level : levels) {
    if (m_level < 0) continue;
    // g[j][p]: most weight removed from opponents < j for at most p money,
    // each left with at most m_level.
    std::vector<std::vector<Weight>> g(ops.size() + 1, std::vector<Weight>(cap + 1, kUnset));
    std::vector<std::vector<std::size_t>> spent(ops.size() + 1, std::vector<std::size_t>(cap + 1, 0));
    std::fill(g[0].begin(), g[0].end(), 0);
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const auto& row = sacks[j].final_row();
      const Weight need = ops[j].tally - m_level;
      for (std::size_t p = 0; p <= cap; ++p) {
        for (std::size_t q = 0; q <= p; ++q) {
          if (row[q] < need || g[j][p - q] == kUnset) continue;
          const Weight v = g[j][p - q] + row[q];
          if (v > g[j + 1][p]) {
            g[j + 1][p] = v;
            spent[j + 1][p] = q;
          }
        }
      }
    }
    const Weight removed = g[ops.size()][cap];
    if (removed == kUnset || m_level > base + removed - s) continue;
    std::vector<std::size_t> chosen;
    std::size_t p = cap;
    for (std::size_t j = ops.size(); j > 0; --j) {
      const std::size_t q = spent[j][p];
      sacks[j - 1].pick(in.election, q, chosen);
      p -= q;
    }
    return verdict_for(in, std::move(chosen));
  }
  return {};
}

}  // namespace

BriberyVerdict bribe_plurality_weighted_priced(const BriberyInstance& in, const SearchLimits& limits) {
  check_plurality(in);
  switch (in.encoding) {
    case BriberyEncoding::WeightsUnary: return weighted_priced_weights_unary(in);
    case BriberyEncoding::PricesUnary: return weighted_priced_prices_unary(in);
    case BriberyEncoding::Binary: break;
  }
  return weighted_priced_binary(in, limits);
}

BriberyVerdict bribe_approval(const BriberyInstance& in, const SearchLimits& limits) {
  check_common(in);
  if (in.rule != BallotRule::Approval) throw InvalidInput("approval bribery needs approval ballots");
  require_approval(in.election, "approval bribery");
  const auto& voters = in.election.voters;
  const auto c = static_cast<std::size_t>(in.target);
  const Weight s = strictness(in);
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const auto& a = voters[i].approval().approvals;
    const auto approved = std::count(a.begin(), a.end(), true);
    // A voter who approves exactly c cannot be improved.
    if (!(a[c] && approved == 1)) items.push_back(i);
  }
  std::stable_sort(items.begin(), items.end(),
                   [&](std::size_t a, std::size_t b) { return voters[a].weight > voters[b].weight; });
  std::vector<Weight> costs;
  for (std::size_t i : items) costs.push_back(bribe_cost(in, voters[i]));
  const auto base = approval_scores(in.election);
  auto ok = [&](const std::vector<char>& chosen) {
    auto t = base;
    for (std::size_t i : items) {
      if (chosen[i] == 0) continue;
      const auto& a = voters[i].approval().approvals;
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x]) t[x] -= voters[i].weight;
      }
      t[c] += voters[i].weight;
    }
    return plurality_ok(t, in.target, s);
  };
  SubsetSearch search(items, costs, in.budget, ok, limits);
  auto chosen = search.run(voters.size());
  if (!chosen) return {};
  return verdict_for(in, std::move(*chosen));
}

BriberyVerdict bribe_scoring(const BriberyInstance& in, const ManipulationOptions& options) {
  check_common(in);
  if (in.rule != BallotRule::Scoring) throw InvalidInput("scoring bribery needs linear ballots");
  require_linear(in.election, "scoring bribery");
  const ScoringVector alpha = effective_alpha(in);
  const auto& voters = in.election.voters;
  const std::size_t n = voters.size();
  std::uint64_t visited = 0;

  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (++visited > options.limits.max_nodes) {
        throw SearchBudgetExceeded("scoring bribery exceeded its subset budget");
      }
      Weight cost = 0;
      for (std::size_t i : pick) cost += bribe_cost(in, voters[i]);
      if (cost <= in.budget) {
        ManipulationInstance m;
        m.election.candidates = in.election.candidates;
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (next < pick.size() && pick[next] == i) {
            m.manipulator_weights.push_back(voters[i].weight);
            ++next;
          } else {
            m.election.voters.push_back(voters[i]);
          }
        }
        m.target = in.target;
        m.alpha = alpha;
        m.mode = in.mode;
        const auto mv = manipulate_scoring_weighted(m, options);
        if (mv.yes) {
          BriberyVerdict v;
          v.yes = true;
          v.bribed = pick;
          v.new_ballots = mv.ballots;
          v.cost = cost;
          return v;
        }
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

BriberyVerdict bribe(const BriberyInstance& in, const ManipulationOptions& options) {
  if (in.rule == BallotRule::Approval) return bribe_approval(in, options.limits);
  check_common(in);
  if (!is_plurality(in)) return bribe_scoring(in, options);
  switch (in.variant) {
    case BriberyVariant::Plain: return bribe_plurality(in);
    case BriberyVariant::Weighted: return bribe_plurality_weighted(in, options.limits);
    case BriberyVariant::Priced: return bribe_plurality_priced(in);
    case BriberyVariant::WeightedPriced: return bribe_plurality_weighted_priced(in, options.limits);
  }
  return {};
}

Complexity classify_bribery(const ScoringVector& alpha, BriberyVariant variant) {
  if (alpha.size() == 0) throw InvalidInput("scoring vector must have at least one entry");
  switch (variant) {
    case BriberyVariant::WeightedPriced:
      return alpha.all_equal() ? Complexity::PolynomialTime : Complexity::NPComplete;
    case BriberyVariant::Weighted:
      return alpha.tail_constant() ? Complexity::PolynomialTime : Complexity::NPComplete;
    case BriberyVariant::Plain:
      return Complexity::PolynomialTime;
    case BriberyVariant::Priced:
      if (alpha.tail_constant()) return Complexity::PolynomialTime;
      throw InvalidInput("no classification is known for priced bribery under this scoring vector");
  }
  throw InvalidInput("unsupported bribery variant");
}

BriberyInstance reduce_partition_to_priced_bribery(const std::vector<Weight>& multiset) {
  if (multiset.empty()) throw InvalidInput("partition multiset must be nonempty");
  std::vector<Voter> voters;
  Weight sum = 0;
  for (Weight w : multiset) {
    if (w < 1) throw InvalidInput("partition entries must be positive");
    voters.push_back(linear_voter({0, 1}, w, w));
    sum += w;
  }
  BriberyInstance in;
  in.election = make_election({"b", "c"}, std::move(voters));
  in.target = 1;
  in.budget = sum / 2;
  in.variant = BriberyVariant::WeightedPriced;
  in.encoding = BriberyEncoding::Binary;
  in.mode = WinnerMode::CoWinner;
  return in;
}

Election apply_bribery(const BriberyInstance& in, const BriberyVerdict& verdict) {
  if (verdict.bribed.size() != verdict.new_ballots.size()) {
    throw DimensionMismatch("one replacement ballot per bribed voter is required");
  }
  Election e = in.election;
  for (std::size_t i = 0; i < verdict.bribed.size(); ++i) {
    if (verdict.bribed[i] >= e.voters.size()) throw InvalidInput("bribed voter index out of range");
    e.voters[verdict.bribed[i]].ballot = verdict.new_ballots[i];
  }
  validate(e);
  return e;
}

}  // namespace electsys

#include "electsys/manipulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace electsys {
namespace {

void check_instance(const ManipulationInstance& in) {
  validate(in.election);
  require_candidate(in.election, in.target, "manipulation target");
  for (Weight w : in.manipulator_weights) {
    if (w < 1) throw InvalidInput("manipulator weights must be positive");
  }
  if (in.rule == BallotRule::Scoring) {
    require_linear(in.election, "scoring manipulation");
    if (in.alpha.size() != in.election.candidates.size()) {
      throw DimensionMismatch("scoring vector length does not match the candidate count");
    }
  } else {
    require_approval(in.election, "approval manipulation");
  }
}

std::vector<CandidateId> target_first(int m, CandidateId c) {
  std::vector<CandidateId> r{c};
  for (CandidateId x = 0; x < m; ++x) {
    if (x != c) r.push_back(x);
  }
  return r;
}

bool target_wins(const ScoreTable& table, CandidateId c, WinnerMode mode) {
  return wins(argmax(table), c, mode);
}

// Linear orders over 0..m-1 whose point allocations differ, first in
// lexicographic order for each allocation.
std::vector<std::vector<CandidateId>> distinct_orders(int m, const ScoringVector& alpha, bool target_on_top,
                                                      CandidateId c) {
  std::vector<CandidateId> rest;
  for (CandidateId x = 0; x < m; ++x) {
    if (!target_on_top || x != c) rest.push_back(x);
  }
  std::map<std::vector<Score>, std::vector<CandidateId>> seen;
  std::vector<std::vector<CandidateId>> out;
  do {
    std::vector<CandidateId> r;
    if (target_on_top) r.push_back(c);
    r.insert(r.end(), rest.begin(), rest.end());
    auto pts = ballot_points(LinearOrder{r}, alpha);
    if (seen.emplace(std::move(pts), r).second) out.push_back(std::move(r));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<Ballot> as_ballots(const std::vector<std::vector<CandidateId>>& orders) {
  std::vector<Ballot> out;
  for (const auto& o : orders) out.emplace_back(LinearOrder{o});
  return out;
}

}  // namespace

Complexity classify_manipulation(const ScoringVector& alpha) {
  if (alpha.size() == 0) throw InvalidInput("scoring vector must have at least one entry");
  return alpha.tail_constant() ? Complexity::PolynomialTime : Complexity::NPComplete;
}

WinnerSet rule_winners(const Election& election, BallotRule rule, const ScoringVector& alpha) {
  return rule == BallotRule::Approval ? approval_winners(election) : scoring_winners(election, alpha);
}

Election with_manipulators(const ManipulationInstance& instance, const std::vector<Ballot>& ballots) {
  if (ballots.size() != instance.manipulator_weights.size()) {
    throw DimensionMismatch("one ballot per manipulator is required");
  }
  Election e = instance.election;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    e.voters.push_back(Voter{ballots[i], instance.manipulator_weights[i], 1});
  }
  validate(e);
  return e;
}

ManipulationVerdict manipulate_plurality(const ManipulationInstance& in) {
  check_instance(in);
  const int m = in.election.candidate_count();
  if (in.rule != BallotRule::Scoring || in.alpha != family_vector(RuleFamily::Plurality, m)) {
    throw InvalidInput("plurality manipulation needs the plurality vector");
  }
  // Voting for c is optimal: it is the only way to raise c and raises no rival.
  std::vector<Ballot> ballots(in.manipulator_weights.size(), Ballot{LinearOrder{target_first(m, in.target)}});
  const Election e = with_manipulators(in, ballots);
  if (!wins(scoring_winners(e, in.alpha), in.target, in.mode)) return {};
  return {true, std::move(ballots)};
}

ManipulationVerdict manipulate_approval(const ManipulationInstance& in) {
  check_instance(in);
  if (in.rule != BallotRule::Approval) throw InvalidInput("approval manipulation needs approval ballots");
  std::vector<bool> only_c(static_cast<std::size_t>(in.election.candidate_count()), false);
  only_c[static_cast<std::size_t>(in.target)] = true;
  std::vector<Ballot> ballots(in.manipulator_weights.size(), Ballot{ApprovalVector{only_c}});
  const Election e = with_manipulators(in, ballots);
  if (!wins(approval_winners(e), in.target, in.mode)) return {};
  return {true, std::move(ballots)};
}

ManipulationVerdict manipulate_scoring_unweighted(const ManipulationInstance& in, const ManipulationOptions& options) {
  check_instance(in);
  if (in.rule != BallotRule::Scoring) throw InvalidInput("scoring manipulation needs linear ballots");
  for (Weight w : in.manipulator_weights) {
    if (w != 1) throw InvalidInput("unweighted manipulation needs unit manipulator weights");
  }
  const int m = in.election.candidate_count();
  if (m > options.max_candidates) {
    throw SearchBudgetExceeded("unweighted manipulation enumerates all orders; limited to " +
                               std::to_string(options.max_candidates) + " candidates");
  }
  const auto orders = distinct_orders(m, in.alpha, false, in.target);
  const std::size_t p = orders.size();
  const std::size_t s = in.manipulator_weights.size();

  // Number of multisets of size s over p kinds, C(p+s-1, s), capped.
  long double count = 1;
  for (std::size_t i = 1; i <= s; ++i) count = count * static_cast<long double>(p - 1 + i) / static_cast<long double>(i);
  if (count > static_cast<long double>(options.max_profiles)) {
    throw SearchBudgetExceeded("unweighted manipulation would visit more than " +
                               std::to_string(options.max_profiles) + " ballot multisets");
  }

  std::vector<std::vector<Score>> points;
  for (const auto& o : orders) points.push_back(ballot_points(LinearOrder{o}, in.alpha));
  ScoreTable table = scores(in.election, in.alpha);
  std::vector<std::size_t> pick(s, 0);

  // Odometer over non-decreasing index sequences.
  for (std::size_t i = 0; i < s; ++i) {
    for (int x = 0; x < m; ++x) table[static_cast<std::size_t>(x)] += points[0][static_cast<std::size_t>(x)];
  }
  while (true) {
    if (target_wins(table, in.target, in.mode)) {
      std::vector<std::vector<CandidateId>> chosen;
      for (std::size_t i : pick) chosen.push_back(orders[i]);
      return {true, as_ballots(chosen)};
    }
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == p - 1) --i;
    if (i == 0) break;
    const std::size_t next = pick[i - 1] + 1;
    for (std::size_t j = i - 1; j < s; ++j) {
      for (int x = 0; x < m; ++x) {
        table[static_cast<std::size_t>(x)] += points[next][static_cast<std::size_t>(x)] - points[pick[j]][static_cast<std::size_t>(x)];
      }
      pick[j] = next;
    }
  }
  return {};
}

namespace {

class WeightedSearch {
 public:
  WeightedSearch(const ManipulationInstance& in, const ManipulationOptions& options)
      : in_(in), max_nodes_(options.limits.max_nodes) {
    const int m = in.election.candidate_count();
    orders_ = distinct_orders(m, in.alpha, true, in.target);
    for (const auto& o : orders_) points_.push_back(ballot_points(LinearOrder{o}, in.alpha));
    order_.resize(in.manipulator_weights.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return in.manipulator_weights[a] > in.manipulator_weights[b];
    });
    table_ = scores(in.election, in.alpha);
    Weight total = 0;
    for (Weight w : in.manipulator_weights) total += w;
    const Score alpha_sum = std::accumulate(in.alpha.alpha().begin(), in.alpha.alpha().end(), Score{0});
    target_final_ = table_[static_cast<std::size_t>(in.target)] + total * in.alpha[0];
    rest_points_ = alpha_sum - in.alpha[0];
    suffix_weight_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i > 0; --i) {
      suffix_weight_[i - 1] = suffix_weight_[i] + in.manipulator_weights[order_[i - 1]];
    }
    choice_.assign(order_.size(), 0);
  }

  bool run() { return dfs(0, 0); }

  std::vector<Ballot> witness() const {
    std::vector<Ballot> out(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) out[order_[i]] = LinearOrder{orders_[choice_[i]]};
    return out;
  }

 private:
  Score cap() const { return in_.mode == WinnerMode::Unique ? target_final_ - 1 : target_final_; }

  bool feasible(std::size_t i) const {
    // Remaining points must fit under the cap, and every rival gets at least
    // the last position's points from each remaining manipulator.
    const Weight w = suffix_weight_[i];
    const Score least = w * in_.alpha[in_.alpha.size() - 1];
    Score room = 0;
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (static_cast<CandidateId>(x) == in_.target) continue;
      const Score slack = cap() - table_[x] - least;
      if (slack < 0) return false;
      room += slack + least;
    }
    return room >= w * rest_points_;
  }

  bool dfs(std::size_t i, std::size_t min_choice) {
    if (!feasible(i)) return false;
    if (i == order_.size()) return true;
    if (++nodes_ > max_nodes_) throw SearchBudgetExceeded("weighted manipulation search exceeded its node budget");
    const Weight w = in_.manipulator_weights[order_[i]];
    for (std::size_t k = min_choice; k < orders_.size(); ++k) {
      for (std::size_t x = 0; x < table_.size(); ++x) table_[x] += w * points_[k][x];
      choice_[i] = k;
      const bool same_next = i + 1 < order_.size() && in_.manipulator_weights[order_[i + 1]] == w;
      const bool ok = dfs(i + 1, same_next ? k : 0);
      for (std::size_t x = 0; x < table_.size(); ++x) table_[x] -= w * points_[k][x];
      if (ok) return true;
    }
    return false;
  }

  const ManipulationInstance& in_;
  std::vector<std::vector<CandidateId>> orders_;
  std::vector<std::vector<Score>> points_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> choice_;
  std::vector<Weight> suffix_weight_;
  ScoreTable table_;
  Score target_final_ = 0;
  Score rest_points_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

}  // namespace

ManipulationVerdict manipulate_scoring_weighted(const ManipulationInstance& in, const ManipulationOptions& options) {
  check_instance(in);
  if (in.rule != BallotRule::Scoring) throw InvalidInput("scoring manipulation needs linear ballots");
  const int m = in.election.candidate_count();
  if (classify_manipulation(in.alpha) == Complexity::PolynomialTime) {
    std::vector<Ballot> ballots(in.manipulator_weights.size(), Ballot{LinearOrder{target_first(m, in.target)}});
    const Election e = with_manipulators(in, ballots);
    if (!wins(scoring_winners(e, in.alpha), in.target, in.mode)) return {};
    return {true, std::move(ballots)};
  }
  if (m > options.max_candidates) {
    throw SearchBudgetExceeded("weighted manipulation search is limited to " + std::to_string(options.max_candidates) +
                               " candidates");
  }
  // Ranking c first never hurts c under a scoring rule, so the search only
  // orders the other candidates.
  WeightedSearch search(in, options);
  if (!search.run()) return {};
  return {true, search.witness()};
}

ManipulationVerdict manipulate(const ManipulationInstance& in, const ManipulationOptions& options) {
  if (in.rule == BallotRule::Approval) return manipulate_approval(in);
  check_instance(in);
  if (in.alpha == family_vector(RuleFamily::Plurality, in.election.candidate_count())) return manipulate_plurality(in);
  return manipulate_scoring_weighted(in, options);
}

}  // namespace electsys

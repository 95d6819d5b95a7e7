#include "electsys/election.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace electsys {

std::string_view to_string(WinnerMode mode) {
  return mode == WinnerMode::CoWinner ? "cowinner" : "unique";
}

std::string_view to_string(Complexity c) {
  return c == Complexity::PolynomialTime ? "P" : "NP-complete";
}

const LinearOrder& Voter::order() const {
  if (const auto* o = std::get_if<LinearOrder>(&ballot)) return *o;
  throw BallotKindMismatch("expected a linear-order ballot, found an approval vector");
}

const ApprovalVector& Voter::approval() const {
  if (const auto* a = std::get_if<ApprovalVector>(&ballot)) return *a;
  throw BallotKindMismatch("expected an approval ballot, found a linear order");
}

Voter linear_voter(std::vector<CandidateId> ranking, Weight weight, Weight price) {
  return Voter{LinearOrder{std::move(ranking)}, weight, price};
}

Voter approval_voter(std::vector<bool> approvals, Weight weight, Weight price) {
  return Voter{ApprovalVector{std::move(approvals)}, weight, price};
}

Weight Election::total_weight() const {
  Weight total = 0;
  for (const auto& v : voters) total += v.weight;
  return total;
}

bool Election::all_linear() const {
  return std::all_of(voters.begin(), voters.end(), [](const Voter& v) { return v.is_linear(); });
}

bool Election::all_approval() const {
  return std::none_of(voters.begin(), voters.end(), [](const Voter& v) { return v.is_linear(); });
}

bool Election::unit_weights() const {
  return std::all_of(voters.begin(), voters.end(), [](const Voter& v) { return v.weight == 1; });
}

std::optional<CandidateId> Election::find(std::string_view name) const {
  for (const auto& c : candidates) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

const std::string& Election::name(CandidateId c) const {
  if (!contains(c)) throw InvalidInput("candidate id " + std::to_string(c) + " out of range");
  return candidates[static_cast<std::size_t>(c)].name;
}

Election make_election(const std::vector<std::string>& names, std::vector<Voter> voters) {
  Election e;
  e.candidates.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    e.candidates.push_back(Candidate{static_cast<CandidateId>(i), names[i]});
  }
  e.voters = std::move(voters);
  validate(e);
  return e;
}

void validate_voter(const Voter& voter, int m) {
  if (voter.weight < 1) throw InvalidInput("voter weight must be a positive integer");
  if (voter.price < 0) throw InvalidInput("voter price must be a nonnegative integer");
  if (const auto* o = std::get_if<LinearOrder>(&voter.ballot)) {
    if (static_cast<int>(o->ranking.size()) != m) {
      throw InvalidInput("linear ballot must rank all " + std::to_string(m) + " candidates");
    }
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (CandidateId c : o->ranking) {
      if (c < 0 || c >= m) throw InvalidInput("ballot references unknown candidate id " + std::to_string(c));
      if (seen[static_cast<std::size_t>(c)]) {
        throw InvalidInput("ballot ranks candidate id " + std::to_string(c) + " twice");
      }
      seen[static_cast<std::size_t>(c)] = true;
    }
  } else {
    const auto& a = std::get<ApprovalVector>(voter.ballot);
    if (static_cast<int>(a.approvals.size()) != m) {
      throw InvalidInput("approval vector length must equal the candidate count");
    }
  }
}

void validate(const Election& e) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < e.candidates.size(); ++i) {
    const auto& c = e.candidates[i];
    if (c.id != static_cast<CandidateId>(i)) throw InvalidInput("candidate ids must be contiguous from 0");
    if (!names.insert(c.name).second) throw InvalidInput("duplicate candidate name '" + c.name + "'");
  }
  for (const auto& v : e.voters) validate_voter(v, e.candidate_count());
}

void require_linear(const Election& e, std::string_view what) {
  if (!e.all_linear()) throw BallotKindMismatch(std::string(what) + " requires linear-order ballots");
}

void require_approval(const Election& e, std::string_view what) {
  if (!e.all_approval()) throw BallotKindMismatch(std::string(what) + " requires approval ballots");
}

void require_unit_weights(const Election& e, std::string_view what) {
  if (!e.unit_weights()) throw InvalidInput(std::string(what) + " requires unit voter weights");
}

void require_candidate(const Election& e, CandidateId c, std::string_view what) {
  if (!e.contains(c)) throw InvalidInput(std::string(what) + ": candidate id " + std::to_string(c) + " is not in the election");
}

ScoringVector::ScoringVector(std::vector<Score> alpha) : alpha_(std::move(alpha)) {
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] < 0) throw InvalidInput("scoring vector entries must be nonnegative");
    if (i > 0 && alpha_[i] > alpha_[i - 1]) throw InvalidInput("scoring vector must be non-increasing");
  }
}

bool ScoringVector::tail_constant() const {
  if (alpha_.size() <= 2) return true;
  return std::all_of(alpha_.begin() + 2, alpha_.end(), [&](Score s) { return s == alpha_[1]; });
}

bool ScoringVector::all_equal() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [&](Score s) { return s == alpha_.front(); });
}

ScoringVector family_vector(RuleFamily family, int m, int k) {
  if (m < 0) throw InvalidInput("candidate count must be nonnegative");
  std::vector<Score> alpha(static_cast<std::size_t>(m), 0);
  switch (family) {
    case RuleFamily::Plurality:
      if (m > 0) alpha[0] = 1;
      break;
    case RuleFamily::Veto:
      for (int i = 0; i + 1 < m; ++i) alpha[static_cast<std::size_t>(i)] = 1;
      break;
    case RuleFamily::Borda:
      for (int i = 0; i < m; ++i) alpha[static_cast<std::size_t>(i)] = m - 1 - i;
      break;
    case RuleFamily::KApproval:
      if (k < 1) throw InvalidInput("k-approval needs k >= 1");
      if (k > m) throw InvalidInput("k-approval needs at least k candidates");
      for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(i)] = 1;
      break;
  }
  return ScoringVector(std::move(alpha));
}

std::vector<Score> ballot_points(const LinearOrder& order, const ScoringVector& alpha) {
  std::vector<Score> pts(order.ranking.size(), 0);
  for (std::size_t pos = 0; pos < order.ranking.size(); ++pos) {
    pts[static_cast<std::size_t>(order.ranking[pos])] = alpha[pos];
  }
  return pts;
}

ScoreTable scores(const Election& e, const ScoringVector& alpha) {
  require_linear(e, "scoring");
  if (alpha.size() != e.candidates.size()) {
    throw DimensionMismatch("scoring vector has " + std::to_string(alpha.size()) + " entries for " +
                            std::to_string(e.candidates.size()) + " candidates");
  }
  ScoreTable table(e.candidates.size(), 0);
  for (const auto& v : e.voters) {
    const auto& r = v.order().ranking;
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      table[static_cast<std::size_t>(r[pos])] += v.weight * alpha[pos];
    }
  }
  return table;
}

WinnerSet argmax(std::span<const Score> table) {
  WinnerSet out;
  if (table.empty()) return out;
  const Score best = *std::max_element(table.begin(), table.end());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == best) out.push_back(static_cast<CandidateId>(i));
  }
  return out;
}

WinnerSet scoring_winners(const Election& e, const ScoringVector& alpha) {
  return argmax(scores(e, alpha));
}

ScoreTable approval_scores(const Election& e) {
  require_approval(e, "approval voting");
  ScoreTable table(e.candidates.size(), 0);
  for (const auto& v : e.voters) {
    const auto& a = v.approval().approvals;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i]) table[i] += v.weight;
    }
  }
  return table;
}

WinnerSet approval_winners(const Election& e) { return argmax(approval_scores(e)); }

PairwiseMatrix pairwise_matrix(const Election& e) {
  require_linear(e, "pairwise comparison");
  const std::size_t m = e.candidates.size();
  PairwiseMatrix n(m, std::vector<Weight>(m, 0));
  for (const auto& v : e.voters) {
    const auto& r = v.order().ranking;
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        n[static_cast<std::size_t>(r[i])][static_cast<std::size_t>(r[j])] += v.weight;
      }
    }
  }
  return n;
}

std::optional<CandidateId> condorcet_winner(const Election& e) {
  const auto n = pairwise_matrix(e);
  const Weight total = e.total_weight();
  const int m = e.candidate_count();
  for (int c = 0; c < m; ++c) {
    bool beats_all = true;
    for (int d = 0; d < m && beats_all; ++d) {
      if (d != c && 2 * n[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] <= total) beats_all = false;
    }
    if (beats_all) return c;
  }
  return std::nullopt;
}

WinnerSet majority_winners(const Election& e) {
  const auto table = scores(e, family_vector(RuleFamily::Plurality, e.candidate_count()));
  const Weight total = e.total_weight();
  WinnerSet out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (2 * table[i] > total) out.push_back(static_cast<CandidateId>(i));
  }
  return out;
}

bool wins(const WinnerSet& winners, CandidateId c, WinnerMode mode) {
  if (mode == WinnerMode::Unique) return winners.size() == 1 && winners.front() == c;
  return std::find(winners.begin(), winners.end(), c) != winners.end();
}

}  // namespace electsys

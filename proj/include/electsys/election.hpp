#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "electsys/common.hpp"
#include "electsys/errors.hpp"

namespace electsys {

struct Candidate {
  CandidateId id = 0;
  std::string name;

  bool operator==(const Candidate&) const = default;
};

// Most-preferred first. Must be a permutation of the election's ids.
struct LinearOrder {
  std::vector<CandidateId> ranking;

  bool operator==(const LinearOrder&) const = default;
};

struct ApprovalVector {
  std::vector<bool> approvals;

  bool operator==(const ApprovalVector&) const = default;
};

using Ballot = std::variant<LinearOrder, ApprovalVector>;

// A weight-w voter is one indivisible object; it is bribed, deleted or moved
// as a unit.
struct Voter {
  Ballot ballot;
  Weight weight = 1;
  Weight price = 1;

  bool is_linear() const { return std::holds_alternative<LinearOrder>(ballot); }
  const LinearOrder& order() const;
  const ApprovalVector& approval() const;

  bool operator==(const Voter&) const = default;
};

Voter linear_voter(std::vector<CandidateId> ranking, Weight weight = 1, Weight price = 1);
Voter approval_voter(std::vector<bool> approvals, Weight weight = 1, Weight price = 1);

// Candidates are addressed by dense index; names are carried for I/O only.
// Voter order is significant: voters are identified by position.
struct Election {
  std::vector<Candidate> candidates;
  std::vector<Voter> voters;

  int candidate_count() const { return static_cast<int>(candidates.size()); }
  std::size_t voter_count() const { return voters.size(); }
  Weight total_weight() const;
  bool all_linear() const;
  bool all_approval() const;
  bool unit_weights() const;
  bool contains(CandidateId c) const { return c >= 0 && c < candidate_count(); }
  std::optional<CandidateId> find(std::string_view name) const;
  const std::string& name(CandidateId c) const;

  bool operator==(const Election&) const = default;
};

// Builds candidates 0..n-1 from the names and validates every ballot.
Election make_election(const std::vector<std::string>& names, std::vector<Voter> voters = {});

// Throws InvalidInput if ids, names, ballots, weights or prices are malformed.
void validate(const Election& election);
void validate_voter(const Voter& voter, int candidate_count);

void require_linear(const Election& election, std::string_view what);
void require_approval(const Election& election, std::string_view what);
void require_unit_weights(const Election& election, std::string_view what);
void require_candidate(const Election& election, CandidateId c, std::string_view what);

// Non-increasing, nonnegative point vector.
class ScoringVector {
 public:
  ScoringVector() = default;
  explicit ScoringVector(std::vector<Score> alpha);

  const std::vector<Score>& alpha() const { return alpha_; }
  std::size_t size() const { return alpha_.size(); }
  Score operator[](std::size_t i) const { return alpha_[i]; }

  // alpha_2 = ... = alpha_m (vacuous for m <= 2).
  bool tail_constant() const;
  // alpha_1 = ... = alpha_m.
  bool all_equal() const;

  bool operator==(const ScoringVector&) const = default;

 private:
  std::vector<Score> alpha_;
};

enum class RuleFamily { Plurality, Veto, Borda, KApproval };

// k is only read for KApproval.
ScoringVector family_vector(RuleFamily family, int m, int k = 0);

using ScoreTable = std::vector<Score>;
using WinnerSet = std::vector<CandidateId>;
// N[d][e] = total weight of voters preferring d to e.
using PairwiseMatrix = std::vector<std::vector<Weight>>;

ScoreTable scores(const Election& election, const ScoringVector& alpha);
WinnerSet scoring_winners(const Election& election, const ScoringVector& alpha);
ScoreTable approval_scores(const Election& election);
WinnerSet approval_winners(const Election& election);
PairwiseMatrix pairwise_matrix(const Election& election);
std::optional<CandidateId> condorcet_winner(const Election& election);
WinnerSet majority_winners(const Election& election);

// Every index attaining the maximum, ascending. Empty table gives empty set.
WinnerSet argmax(std::span<const Score> table);

bool wins(const WinnerSet& winners, CandidateId c, WinnerMode mode);

// Points a single linear ballot hands out, indexed by candidate.
std::vector<Score> ballot_points(const LinearOrder& order, const ScoringVector& alpha);

}  // namespace electsys

#pragma once

#include <vector>

#include "electsys/election.hpp"

namespace electsys {

enum class BallotRule { Scoring, Approval };

// The election holds the nonmanipulators; the coalition is just a list of
// weights. alpha is ignored under BallotRule::Approval.
struct ManipulationInstance {
  Election election;
  std::vector<Weight> manipulator_weights;
  CandidateId target = 0;
  BallotRule rule = BallotRule::Scoring;
  ScoringVector alpha;
  WinnerMode mode = WinnerMode::CoWinner;
};

// On yes, ballots holds one ballot per manipulator, in input order.
struct ManipulationVerdict {
  bool yes = false;
  std::vector<Ballot> ballots;
};

struct ManipulationOptions {
  int max_candidates = 7;
  // Cap on the number of ballot multisets the unweighted enumeration visits.
  std::uint64_t max_profiles = 20'000'000;
  SearchLimits limits;
};

// Polynomial exactly when alpha_2 = ... = alpha_m.
Complexity classify_manipulation(const ScoringVector& alpha);

ManipulationVerdict manipulate_plurality(const ManipulationInstance& instance);
ManipulationVerdict manipulate_scoring_unweighted(const ManipulationInstance& instance,
                                                  const ManipulationOptions& options = {});
ManipulationVerdict manipulate_scoring_weighted(const ManipulationInstance& instance,
                                                const ManipulationOptions& options = {});
ManipulationVerdict manipulate_approval(const ManipulationInstance& instance);

// Picks the engine from the rule, the vector and the weights.
ManipulationVerdict manipulate(const ManipulationInstance& instance, const ManipulationOptions& options = {});

// The election with the manipulators' ballots appended after V.
Election with_manipulators(const ManipulationInstance& instance, const std::vector<Ballot>& ballots);

// Winner set under the instance's rule.
WinnerSet rule_winners(const Election& election, BallotRule rule, const ScoringVector& alpha);

}  // namespace electsys

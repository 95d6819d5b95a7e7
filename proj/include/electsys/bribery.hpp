#pragma once

#include <cstddef>
#include <vector>

#include "electsys/manipulation.hpp"

namespace electsys {

// Plain and Weighted: budget counts bribed voters and prices are ignored.
// Priced and WeightedPriced: budget is money, compared against the sum of
// the bribed voters' prices.
enum class BriberyVariant { Plain, Weighted, Priced, WeightedPriced };

// Selects the engine for WeightedPriced plurality bribery.
enum class BriberyEncoding { Binary, WeightsUnary, PricesUnary };

// An empty alpha means plurality.
struct BriberyInstance {
  Election election;
  CandidateId target = 0;
  Weight budget = 0;
  BriberyVariant variant = BriberyVariant::Plain;
  BriberyEncoding encoding = BriberyEncoding::Binary;
  BallotRule rule = BallotRule::Scoring;
  ScoringVector alpha;
  WinnerMode mode = WinnerMode::CoWinner;
};

// On yes, bribed lists voter positions in ascending order and new_ballots
// the replacement ballot of each, in the same order.
struct BriberyVerdict {
  bool yes = false;
  std::vector<std::size_t> bribed;
  std::vector<Ballot> new_ballots;
  Weight cost = 0;
};

std::string_view to_string(BriberyVariant variant);
std::string_view to_string(BriberyEncoding encoding);

// What one bribe of `voter` costs under the instance's variant.
Weight bribe_cost(const BriberyInstance& instance, const Voter& voter);

BriberyVerdict bribe_plurality(const BriberyInstance& instance);
BriberyVerdict bribe_plurality_weighted(const BriberyInstance& instance, const SearchLimits& limits = {});
BriberyVerdict bribe_plurality_priced(const BriberyInstance& instance);
BriberyVerdict bribe_plurality_weighted_priced(const BriberyInstance& instance, const SearchLimits& limits = {});
BriberyVerdict bribe_approval(const BriberyInstance& instance, const SearchLimits& limits = {});

// Exact search for arbitrary scoring vectors: bribe sets in order of size,
// bribed voters' new ballots found by the weighted manipulation search.
BriberyVerdict bribe_scoring(const BriberyInstance& instance, const ManipulationOptions& options = {});

// Dispatches on rule, vector and variant.
BriberyVerdict bribe(const BriberyInstance& instance, const ManipulationOptions& options = {});

// Weighted+priced: P iff alpha_1 = ... = alpha_m. Weighted: P iff
// alpha_2 = ... = alpha_m. Plain: P. Priced: P for tail-constant vectors;
// other vectors throw InvalidInput.
Complexity classify_bribery(const ScoringVector& alpha, BriberyVariant variant);

// Two candidates b and c. Each w_i becomes a voter b > c with weight and
// price w_i; target c; budget floor(sum / 2); co-winner mode. Yes exactly
// when the multiset splits into two halves of equal sum.
BriberyInstance reduce_partition_to_priced_bribery(const std::vector<Weight>& multiset);

// The election after the verdict's bribes.
Election apply_bribery(const BriberyInstance& instance, const BriberyVerdict& verdict);

}  // namespace electsys

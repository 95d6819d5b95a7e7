#include <doctest.h>

#include <numeric>

#include "electsys/bribery.hpp"
#include "electsys/oracle.hpp"
#include "helpers.hpp"

using namespace electsys;

namespace {
const ExhaustionBound kWide{5, 6, 8, 30};
}  // namespace

namespace {

const char* const kFigure2 =
    "candidates: a b c\n"
    "ballot: 1 1 : b > a > c\n"
    "ballot: 2 1 : b > a > c\n"
    "ballot: 2 1 : b > a > c\n"
    "ballot: 2 1 : b > a > c\n"
    "ballot: 3 1 : a > b > c\n"
    "ballot: 3 1 : a > b > c\n";

BriberyInstance figure2(Weight budget) {
  BriberyInstance in;
  in.election = election_of(kFigure2);
  in.target = 2;
  in.budget = budget;
  in.variant = BriberyVariant::Weighted;
  return in;
}

}  // namespace

TEST_CASE("weighted plurality bribery needs more than the heaviest voters") {
  const auto in = figure2(2);
  const auto v = bribe_plurality_weighted(in);
  REQUIRE(v.yes);
  std::vector<Weight> weights;
  for (auto i : v.bribed) weights.push_back(in.election.voters[i].weight);
  std::sort(weights.begin(), weights.end());
  CHECK(weights == std::vector<Weight>{2, 3});
  CHECK(wins(scoring_winners(apply_bribery(in, v), family_vector(RuleFamily::Plurality, 3)), 2, WinnerMode::CoWinner));

  BriberyVerdict heaviest{true, {4, 5}, {LinearOrder{{2, 0, 1}}, LinearOrder{{2, 0, 1}}}, 2};
  CHECK_FALSE(wins(scoring_winners(apply_bribery(in, heaviest), family_vector(RuleFamily::Plurality, 3)), 2,
                   WinnerMode::CoWinner));
  CHECK_FALSE(bribe_plurality_weighted(figure2(1)).yes);
  CHECK(bf_bribery(in, kWide).yes);
}

TEST_CASE("plain and priced plurality bribery") {
  BriberyInstance in;
  in.election = election_of(
      "candidates: a b c\nballot: 1 5 : a > b > c\nballot: 1 1 : a > b > c\nballot: 1 1 : a > c > b\n"
      "ballot: 1 2 : b > a > c\n");
  in.target = 2;
  in.budget = 2;
  CHECK(bribe_plurality(in).yes);
  in.variant = BriberyVariant::Priced;
  in.budget = 2;
  const auto v = bribe_plurality_priced(in);
  CHECK(v.yes == bf_bribery(in, kWide).yes);
  in.budget = 1;
  CHECK(bribe_plurality_priced(in).yes == bf_bribery(in, kWide).yes);
}

TEST_CASE("weighted priced encodings agree") {
  BriberyInstance in;
  in.election = election_of(
      "candidates: a b c\nballot: 3 2 : a > b > c\nballot: 2 1 : a > c > b\nballot: 4 4 : b > a > c\n"
      "ballot: 1 0 : c > a > b\n");
  in.target = 2;
  in.variant = BriberyVariant::WeightedPriced;
  for (Weight budget = 0; budget <= 7; ++budget) {
    in.budget = budget;
    const bool truth = bf_bribery(in, kWide).yes;
    for (auto enc : {BriberyEncoding::Binary, BriberyEncoding::WeightsUnary, BriberyEncoding::PricesUnary}) {
      in.encoding = enc;
      CAPTURE(budget);
      CAPTURE(to_string(enc));
      CHECK(bribe_plurality_weighted_priced(in).yes == truth);
    }
  }
}

TEST_CASE("partition reduction") {
  const auto yes = reduce_partition_to_priced_bribery({3, 1, 1, 2, 2, 1});
  CHECK(bf_bribery(yes, ExhaustionBound{5, 6, 6, 10}).yes);
  CHECK(bribe(yes).yes);
  const auto no = reduce_partition_to_priced_bribery({2, 4});
  CHECK_FALSE(bf_bribery(no).yes);
  CHECK_FALSE(bribe(no).yes);
}

TEST_CASE("bribery dichotomies") {
  const ScoringVector plurality({1, 0, 0});
  const ScoringVector borda({2, 1, 0});
  const ScoringVector trivial({1, 1, 1});
  CHECK(classify_bribery(plurality, BriberyVariant::Weighted) == Complexity::PolynomialTime);
  CHECK(classify_bribery(borda, BriberyVariant::Weighted) == Complexity::NPComplete);
  CHECK(classify_bribery(plurality, BriberyVariant::WeightedPriced) == Complexity::NPComplete);
  CHECK(classify_bribery(trivial, BriberyVariant::WeightedPriced) == Complexity::PolynomialTime);
  CHECK_THROWS_AS(classify_bribery(borda, BriberyVariant::Priced), InvalidInput);
}

TEST_CASE("approval bribery") {
  BriberyInstance in;
  in.rule = BallotRule::Approval;
  in.election = election_of("candidates: a b\napprove: 1 1 : a\napprove: 1 1 : a\napprove: 1 1 : b\n");
  in.target = 1;
  in.budget = 1;
  const auto v = bribe_approval(in);
  CHECK(v.yes);
  CHECK(v.yes == bf_bribery(in, kWide).yes);
  in.mode = WinnerMode::Unique;
  CHECK(bribe_approval(in).yes == bf_bribery(in, kWide).yes);
}

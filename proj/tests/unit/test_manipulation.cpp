#include <doctest.h>

#include "electsys/manipulation.hpp"
#include "electsys/oracle.hpp"
#include "helpers.hpp"

using namespace electsys;

namespace {

const ExhaustionBound kWide{5, 6, 8, 30};

ManipulationInstance borda_coalition() {
  ManipulationInstance in;
  in.election = election_of("candidates: a b c\nballot: 5 1 : a > b > c\nballot: 1 1 : c > a > b\n");
  in.manipulator_weights = {1, 1, 1, 1, 1};
  in.target = 1;
  in.alpha = family_vector(RuleFamily::Borda, 3);
  in.mode = WinnerMode::Unique;
  return in;
}

}  // namespace

TEST_CASE("five Borda manipulators make b the unique winner") {
  const auto in = borda_coalition();
  const std::vector<Ballot> sincere(5, LinearOrder{{1, 0, 2}});
  CHECK(rule_winners(with_manipulators(in, sincere), in.rule, in.alpha) == WinnerSet{0});
  const std::vector<Ballot> insincere(5, LinearOrder{{1, 2, 0}});
  CHECK(rule_winners(with_manipulators(in, insincere), in.rule, in.alpha) == WinnerSet{1});

  const auto v = manipulate_scoring_unweighted(in);
  REQUIRE(v.yes);
  CHECK(wins(rule_winners(with_manipulators(in, v.ballots), in.rule, in.alpha), 1, WinnerMode::Unique));
  CHECK(manipulate_scoring_weighted(in).yes);
  CHECK(bf_manipulation(in, kWide).yes);
}

TEST_CASE("too small a coalition fails") {
  auto in = borda_coalition();
  in.manipulator_weights = {1, 1};
  CHECK_FALSE(manipulate_scoring_unweighted(in).yes);
  CHECK_FALSE(bf_manipulation(in, kWide).yes);
}

TEST_CASE("weighted veto manipulation") {
  ManipulationInstance in;
  in.election = election_of("candidates: a b c\nballot: 3 1 : a > b > c\nballot: 2 1 : b > a > c\n");
  in.alpha = family_vector(RuleFamily::Veto, 3);
  in.target = 2;
  in.manipulator_weights = {2, 3};
  const auto v = manipulate_scoring_weighted(in);
  CHECK(v.yes == bf_manipulation(in, kWide).yes);
  if (v.yes) CHECK(wins(rule_winners(with_manipulators(in, v.ballots), in.rule, in.alpha), 2, in.mode));
}

TEST_CASE("plurality and approval manipulation") {
  ManipulationInstance in;
  in.election = election_of("candidates: a b c\nballot: 3 1 : a > b > c\nballot: 1 1 : c > a > b\n");
  in.alpha = family_vector(RuleFamily::Plurality, 3);
  in.target = 2;
  in.manipulator_weights = {2};
  CHECK(manipulate_plurality(in).yes);
  in.mode = WinnerMode::Unique;
  CHECK_FALSE(manipulate_plurality(in).yes);

  ManipulationInstance ap;
  ap.rule = BallotRule::Approval;
  ap.election = election_of("candidates: a b\napprove: 2 1 : a\napprove: 1 1 : a b\n");
  ap.target = 1;
  ap.manipulator_weights = {2};
  CHECK(manipulate_approval(ap).yes);
  ap.mode = WinnerMode::Unique;
  CHECK_FALSE(manipulate_approval(ap).yes);
}

TEST_CASE("dichotomy for weighted manipulation") {
  CHECK(classify_manipulation(ScoringVector({1, 0})) == Complexity::PolynomialTime);
  CHECK(classify_manipulation(ScoringVector({1, 0, 0})) == Complexity::PolynomialTime);
  CHECK(classify_manipulation(ScoringVector({3, 1, 1})) == Complexity::PolynomialTime);
  CHECK(classify_manipulation(ScoringVector({1, 1, 0})) == Complexity::NPComplete);
  CHECK(classify_manipulation(ScoringVector({2, 1, 0})) == Complexity::NPComplete);
}

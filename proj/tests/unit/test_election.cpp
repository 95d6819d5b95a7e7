#include <doctest.h>

#include "electsys/election.hpp"
#include "helpers.hpp"

using namespace electsys;

TEST_CASE("Borda scores and winner") {
  const auto e = election_of(kBorda);
  CHECK(scores(e, family_vector(RuleFamily::Borda, 3)) == ScoreTable{16, 15, 2});
  CHECK(scoring_winners(e, family_vector(RuleFamily::Borda, 3)) == WinnerSet{0});
  CHECK(scores(e, family_vector(RuleFamily::Plurality, 3)) == ScoreTable{5, 5, 1});
  CHECK(scores(e, family_vector(RuleFamily::Veto, 3)) == ScoreTable{11, 10, 1});
}

TEST_CASE("family vectors") {
  CHECK(family_vector(RuleFamily::Borda, 4).alpha() == std::vector<Score>{3, 2, 1, 0});
  CHECK(family_vector(RuleFamily::KApproval, 4, 2).alpha() == std::vector<Score>{1, 1, 0, 0});
  CHECK(family_vector(RuleFamily::Veto, 1).alpha() == std::vector<Score>{0});
  CHECK_THROWS_AS(family_vector(RuleFamily::KApproval, 2, 3), InvalidInput);
  CHECK_THROWS_AS(ScoringVector({1, 2}), InvalidInput);
  CHECK(ScoringVector({3, 1, 1}).tail_constant());
  CHECK_FALSE(ScoringVector({2, 1, 0}).tail_constant());
}

TEST_CASE("Condorcet paradox has no Condorcet winner") {
  const auto e = election_of(kQueens);
  CHECK_FALSE(condorcet_winner(e).has_value());
  const auto n = pairwise_matrix(e);
  CHECK(n[0][1] == 2);
  CHECK(n[1][2] == 2);
  CHECK(n[2][0] == 2);
}

TEST_CASE("weighted Condorcet winner needs a strict majority") {
  const auto e = election_of("candidates: a b\nballot: 2 1 : a > b\nballot: 2 1 : b > a\n");
  CHECK_FALSE(condorcet_winner(e).has_value());
  const auto f = election_of("candidates: a b\nballot: 3 1 : a > b\nballot: 2 1 : b > a\n");
  CHECK(condorcet_winner(f) == 0);
}

TEST_CASE("approval tallies count weight") {
  const auto e = election_of("candidates: a b c\napprove: 1 1 : a b\napprove: 2 1 : b\napprove: 1 1 :\n");
  CHECK(approval_scores(e) == ScoreTable{1, 3, 0});
  CHECK(approval_winners(e) == WinnerSet{1});
}

TEST_CASE("zero voters: every candidate ties") {
  const auto e = election_of("candidates: a b\nvoters:\n");
  CHECK(scoring_winners(e, family_vector(RuleFamily::Plurality, 2)) == WinnerSet{0, 1});
  CHECK_FALSE(condorcet_winner(e).has_value());
}

TEST_CASE("winner modes") {
  CHECK(wins({0, 1}, 0, WinnerMode::CoWinner));
  CHECK_FALSE(wins({0, 1}, 0, WinnerMode::Unique));
  CHECK(wins({1}, 1, WinnerMode::Unique));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(make_election({"a", "a"}), InvalidInput);
  CHECK_THROWS_AS(make_election({"a", "b"}, {linear_voter({0})}), InvalidInput);
  CHECK_THROWS_AS(make_election({"a", "b"}, {linear_voter({0, 1}, 0)}), InvalidInput);
  CHECK_THROWS_AS(scores(make_election({"a", "b"}), family_vector(RuleFamily::Plurality, 3)), DimensionMismatch);
  CHECK_THROWS_AS(approval_scores(election_of(kQueens)), BallotKindMismatch);
}

#include <doctest.h>

#include "electsys/kemeny_young.hpp"
#include "electsys/oracle.hpp"
#include "helpers.hpp"

using namespace electsys;

TEST_CASE("Young score counts voter deletions") {
  const auto e = election_of(kQueens);
  for (CandidateId c = 0; c < 3; ++c) CHECK(young_score(e, c) == 2);
  const auto w = election_of("candidates: a b\nballot: a > b\nballot: a > b\nballot: b > a\n");
  CHECK(young_score(w, 0) == 0);
  CHECK(young_score(w, 1) == 2);
  CHECK(young_winners(w) == WinnerSet{0});
}

TEST_CASE("Young score can be undefined") {
  const auto e = election_of("candidates: a b\nvoters:\n");
  CHECK(young_score(e, 0) == std::nullopt);
  CHECK(bf_young(e, 0) == std::nullopt);
}

TEST_CASE("Kemeny distance counts ties as one disagreement") {
  const auto e = election_of("candidates: a b\nballot: a > b\n");
  CHECK(kemeny_distance(WeakOrder{{{0}, {1}}}, e) == 0);
  CHECK(kemeny_distance(WeakOrder{{{0, 1}}}, e) == 1);
  CHECK(kemeny_distance(WeakOrder{{{1}, {0}}}, e) == 2);
}

TEST_CASE("Kemeny consensus of a cycle") {
  const auto e = election_of(kQueens);
  const auto cons = kemeny_consensuses(e);
  CHECK(cons == bf_kemeny(e));
  CHECK(kemeny_winners(e) == WinnerSet{0, 1, 2});
}

TEST_CASE("Kemeny respects a Condorcet ranking") {
  const auto e = election_of("candidates: a b c\nballot: a > b > c\nballot: a > b > c\nballot: b > c > a\n");
  const auto cons = kemeny_consensuses(e);
  REQUIRE(cons.size() == 1);
  CHECK(cons.front() == WeakOrder{{{0}, {1}, {2}}});
  CHECK(kemeny_winners(e) == WinnerSet{0});
}

TEST_CASE("weak orders are enumerated completely") {
  CHECK(all_weak_orders(0).size() == 1);
  CHECK(all_weak_orders(3).size() == 13);
  CHECK(all_weak_orders(4).size() == 75);
  CHECK_THROWS_AS(kemeny_consensuses(election_of("candidates: a b c d e f g\nvoters:\n")), BoundExceeded);
}

#include <doctest.h>

#include "electsys/dodgson.hpp"
#include "electsys/oracle.hpp"
#include "helpers.hpp"

using namespace electsys;

TEST_CASE("Queen's court: every candidate is one switch away") {
  const auto e = election_of(kQueens);
  for (CandidateId c = 0; c < 3; ++c) {
    CHECK(dodgson_score(DodgsonTriple{e, c}) == 1);
    CHECK(bf_dodgson_score(DodgsonTriple{e, c}) == 1);
  }
  CHECK(dodgson_winners(e) == WinnerSet{0, 1, 2});
}

TEST_CASE("Condorcet winner scores zero") {
  const auto e = election_of("candidates: a b c\nballot: a > b > c\nballot: a > c > b\nballot: b > a > c\n");
  CHECK(dodgson_score(DodgsonTriple{e, 0}) == 0);
  CHECK(decide_dodgson_score(DodgsonTriple{e, 0}, 0));
  CHECK(dodgson_winners(e) == WinnerSet{0});
}

TEST_CASE("edge cases") {
  const auto one = election_of("candidates: a\nvoters:\n");
  CHECK(dodgson_score(DodgsonTriple{one, 0}) == 0);
  const auto empty = election_of("candidates: a b\nvoters:\n");
  CHECK_THROWS_AS(dodgson_score(DodgsonTriple{empty, 0}), Unreachable);
  CHECK_THROWS_AS(dodgson_winners(empty), NoWinnerExists);
  CHECK_THROWS_AS(dodgson_score(DodgsonTriple{election_of(kBorda), 0}), InvalidInput);
}

TEST_CASE("score threshold and ranking") {
  const auto e = election_of("candidates: a b c\nballot: c > b > a\nballot: a > c > b\nballot: b > a > c\n");
  const DodgsonTriple t{e, 2};
  CHECK(dodgson_score(t) == 1);
  CHECK(dodgson_score_at_most(t, 0) == std::nullopt);
  CHECK(dodgson_score_at_most(t, 3) == 1);
  CHECK_FALSE(decide_dodgson_score(t, 0));
  CHECK(dodgson_ranking(e, 0, 2));
}

TEST_CASE("merge of the two small triples") {
  const auto ec = election_of("candidates: a b c\nballot: c > b > a\nballot: a > c > b\nballot: b > a > c\n");
  const auto ed = election_of("candidates: d e f\nballot: f > e > d\n");
  const DodgsonTriple tc{ec, 2};
  const DodgsonTriple td{ed, 0};
  CHECK(dodgson_score(tc) == 1);
  CHECK(dodgson_score(td) == 2);
  const auto out = merge(tc, td, 0, 0);
  const auto& m = out.merged_election;
  CHECK(m.voter_count() == 8);
  CHECK(dodgson_score(DodgsonTriple{m, out.c}) == 2);
  CHECK(dodgson_score(DodgsonTriple{m, out.d}) == 3);
  CHECK(verify_merge_properties(out, tc, td));
  CHECK(serialize_election(m) ==
        "candidates: a b c d e f\nvoters:\n"
        "ballot: 1 1 : c > b > a > e > f > d\n"
        "ballot: 1 1 : a > c > b > e > f > d\n"
        "ballot: 1 1 : b > a > c > e > f > d\n"
        "ballot: 1 1 : f > e > d > a > b > c\n"
        "ballot: 1 1 : d > e > f > a > b > c\n"
        "ballot: 1 1 : d > c > e > f > a > b\n"
        "ballot: 1 1 : d > c > e > f > a > b\n"
        "ballot: 1 1 : c > d > e > f > a > b\n");
}

TEST_CASE("merge with separators keeps the score shifts") {
  const auto ec = election_of("candidates: a b c\nballot: c > b > a\nballot: a > c > b\nballot: b > a > c\n");
  const auto ed = election_of("candidates: d e f\nballot: f > e > d\n");
  const auto out = merge(DodgsonTriple{ec, 2}, DodgsonTriple{ed, 0}, 1, 1);
  CHECK(out.separators_s.size() == 1);
  CHECK(out.separators_t.size() == 1);
  CHECK(dodgson_score(DodgsonTriple{out.merged_election, out.c}) == 2);
  CHECK(dodgson_score(DodgsonTriple{out.merged_election, out.d}) == 3);
}

TEST_CASE("merge rejects even voter counts") {
  const auto ec = election_of("candidates: a b\nballot: a > b\nballot: b > a\n");
  const auto ed = election_of("candidates: d e\nballot: d > e\n");
  CHECK_THROWS_AS(merge(DodgsonTriple{ec, 0}, DodgsonTriple{ed, 0}, 0, 0), ParityViolation);
}

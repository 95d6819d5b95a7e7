#include <doctest.h>

#include "electsys/election_file.hpp"
#include "helpers.hpp"

using namespace electsys;

TEST_CASE("Queen's court file") {
  const auto f = parse_election(kQueens);
  CHECK(f.election.candidate_count() == 3);
  CHECK(f.election.voter_count() == 3);
  CHECK(f.election.voters[1].order().ranking == std::vector<CandidateId>{1, 2, 0});
  CHECK(parse_election(serialize_election(f)) == f);
}

TEST_CASE("canonical form is a fixed point") {
  const std::string canonical =
      "candidates: a b c d\nspoilers: d\nvoters:\nballot: 2 0 : a > b > c > d\napprove: 1 3 : a c\n"
      "approve: 1 1 :\nvoterpool:\nballot: 1 1 : d > c > b > a\n";
  const auto f = parse_election(canonical);
  CHECK(serialize_election(f) == canonical);
  CHECK(f.spoilers == std::vector<CandidateId>{3});
  CHECK(f.voter_pool.size() == 1);
  CHECK(f.election.voters[0].weight == 2);
  CHECK(f.election.voters[0].price == 0);
}

TEST_CASE("comments, blank lines and defaults") {
  const auto f = parse_election("# header\n\ncandidates: x y   # two\nvoters:\nballot: y > x\n");
  CHECK(f.election.voters.size() == 1);
  CHECK(f.election.voters[0].weight == 1);
  CHECK(f.election.voters[0].price == 1);
}

TEST_CASE("empty voters section is a legal election") {
  const auto f = parse_election("candidates: a b\nvoters:\n");
  CHECK(f.election.voter_count() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_election(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("candidates: a b c\nballot: 1 1 : c > c > a\n") == 2);
  CHECK(line_of("candidates: a b\n\nballot: a > z\n") == 3);
  CHECK(line_of("candidates: a b\nballot: 0 1 : a > b\n") == 2);
  CHECK(line_of("candidates: a b\nballot: 1 -1 : a > b\n") == 2);
  CHECK(line_of("candidates: a b\nballot: a\n") == 2);
  CHECK(line_of("candidates: a a\n") == 1);
  CHECK(line_of("ballot: a > b\n") == 1);
  CHECK(line_of("candidates: a b\nfrobnicate: 3\n") == 2);
  CHECK_THROWS_AS(parse_election(""), ParseError);
}

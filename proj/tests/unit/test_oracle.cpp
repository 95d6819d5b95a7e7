#include <doctest.h>

#include "electsys/equivalence.hpp"
#include "helpers.hpp"

using namespace electsys;

TEST_CASE("oracles refuse inputs above their bound") {
  const auto big = election_of("candidates: a b c d e f\nvoters:\n");
  CHECK_THROWS_AS(bf_kemeny(big), BoundExceeded);
  const auto e = election_of(kQueens);
  CHECK_THROWS_AS(bf_young(e, 0, ExhaustionBound{5, 2, 4, 6}), BoundExceeded);
}

TEST_CASE("every family agrees on a short run") {
  EquivalenceOptions opts;
  opts.instances = 300;
  for (const auto& family : equivalence_families()) {
    const auto r = check_equivalence(family, opts);
    CAPTURE(family);
    CAPTURE(r.first_mismatch);
    CHECK(r.instances > 0);
    CHECK(r.mismatches == 0);
  }
}

TEST_CASE("unknown family") { CHECK_THROWS_AS(check_equivalence("nope"), InvalidInput); }

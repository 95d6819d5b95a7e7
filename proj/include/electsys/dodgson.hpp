#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "electsys/election.hpp"

namespace electsys {

// An election plus a distinguished candidate. Ballots are linear orders with
// unit weights: switches act on individual ballots.
struct DodgsonTriple {
  Election election;
  CandidateId distinguished = 0;
};

// Minimum number of adjacent switches that makes the distinguished candidate
// a Condorcet winner. Throws Unreachable when no switch sequence does (zero
// voters with two or more candidates).
//
// Only switches that raise the distinguished candidate are considered: lifting
// it j places in one ballot costs j and wins exactly the j candidates passed.
// The resulting covering problem is solved by branch-and-bound over per-ballot
// lift amounts. The restriction is checked against the unrestricted
// breadth-first oracle in the test suite.
std::int64_t dodgson_score(const DodgsonTriple& triple, const SearchLimits& limits = {});

// Score if it is at most `limit`, otherwise nullopt. Cheaper than the full
// score when the limit is small.
std::optional<std::int64_t> dodgson_score_at_most(const DodgsonTriple& triple, std::int64_t limit,
                                                  const SearchLimits& limits = {});

// Throws NoWinnerExists when there are no candidates, or no voters and more
// than one candidate.
WinnerSet dodgson_winners(const Election& election, const SearchLimits& limits = {});

bool decide_dodgson_score(const DodgsonTriple& triple, std::int64_t k, const SearchLimits& limits = {});

// dscore(c) <= dscore(d). An unreachable score counts as +infinity.
bool dodgson_ranking(const Election& election, CandidateId c, CandidateId d, const SearchLimits& limits = {});

struct MergeOutput {
  Election merged_election;
  CandidateId c = 0;
  CandidateId d = 0;
  std::vector<CandidateId> separators_s;
  std::vector<CandidateId> separators_t;
};

// Merges (C, c, V) and (D, d, W) into one election whose candidates are
// C, then D, then the S separators, then the T separators. Voters:
//   each v in V:  v's list > S > D\{d} > T > d
//   each w in W:  w's list > C\{c} > T > c > S
//   normalizing voters that make c trail d by exactly one vote, keep every
//   pairwise contest of c against C\{c} (and of d against D\{d}) at the same
//   deficit as in the source election, and put c above everything else.
// Both |V| and |W| must be odd (ParityViolation otherwise). The output is
// released only after verify_merge_properties succeeds; otherwise
// ConstructionUnverified is thrown.
MergeOutput merge(const DodgsonTriple& triple_c, const DodgsonTriple& triple_d, int s_count, int t_count,
                  const SearchLimits& limits = {});

// Checks, by computing Dodgson scores:
//   dscore_merged(c) = dscore_C(c) + 1
//   dscore_merged(d) = dscore_D(d) + 1
//   every other merged candidate scores strictly above dscore_merged(c)
bool verify_merge_properties(const MergeOutput& out, const DodgsonTriple& triple_c, const DodgsonTriple& triple_d,
                             const SearchLimits& limits = {});

}  // namespace electsys

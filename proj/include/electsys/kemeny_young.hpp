#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "electsys/election.hpp"

namespace electsys {

// Minimum number of voters whose removal leaves c a Condorcet winner, or
// nullopt when no removal set works. Unit weights only.
std::optional<std::int64_t> young_score(const Election& election, CandidateId c);

// Argmin of the defined Young scores; empty when none is defined.
WinnerSet young_winners(const Election& election);

// A ranking with ties: levels[0] is the top level.
struct WeakOrder {
  std::vector<std::vector<CandidateId>> levels;

  bool operator==(const WeakOrder&) const = default;
  auto operator<=>(const WeakOrder&) const = default;
};

// Kemeny-Snell distance summed over voters: per pair, 2 when the order and
// the ballot disagree strictly, 1 when the order ties the pair, 0 otherwise.
// Weighted voters count weight times.
std::int64_t kemeny_distance(const WeakOrder& order, const Election& election);

struct KemenyOptions {
  int max_candidates = 6;
};

// All distance-minimizing weak orders, levels sorted by id, in ascending
// lexicographic order. Throws BoundExceeded above options.max_candidates.
std::vector<WeakOrder> kemeny_consensuses(const Election& election, const KemenyOptions& options = {});

// Union of the top levels of all consensuses.
WinnerSet kemeny_winners(const Election& election, const KemenyOptions& options = {});

// Every weak order over candidates 0..m-1, canonical form, ascending.
std::vector<WeakOrder> all_weak_orders(int m);

}  // namespace electsys

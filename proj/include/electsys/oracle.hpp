#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "electsys/bribery.hpp"
#include "electsys/control.hpp"
#include "electsys/dodgson.hpp"
#include "electsys/kemeny_young.hpp"
#include "electsys/manipulation.hpp"

namespace electsys {

// Brute-force reference implementations. They share nothing with the
// optimized engines beyond the election data types, and refuse inputs above
// their bound with BoundExceeded.
struct ExhaustionBound {
  int max_candidates = 5;  // spoilers included
  int max_voters = 6;      // per voter list: V, the pool, the manipulators
  Weight max_weight = 4;   // voter weights and prices
  Weight max_budget = 6;
};

// Breadth-first search over profiles reachable by adjacent switches.
std::int64_t bf_dodgson_score(const DodgsonTriple& triple, const ExhaustionBound& bound = {});

// Every subset of voters.
std::optional<std::int64_t> bf_young(const Election& election, CandidateId c, const ExhaustionBound& bound = {});

// Every weak order, canonical form, ascending.
std::vector<WeakOrder> bf_kemeny(const Election& election, const ExhaustionBound& bound = {});
WinnerSet bf_kemeny_winners(const Election& election, const ExhaustionBound& bound = {});

// Every assignment of ballots to manipulators. Ballots that hand out the same
// points are interchangeable, so one representative of each is tried.
ManipulationVerdict bf_manipulation(const ManipulationInstance& instance, const ExhaustionBound& bound = {});

// Every affordable bribe set times every replacement ballot (one per point
// allocation for scoring rules, every approval vector for approval).
BriberyVerdict bf_bribery(const BriberyInstance& instance, const ExhaustionBound& bound = {});

// Every action the control type allows.
ControlVerdict bf_control(const ControlSpec& spec, const ControlInstance& instance, const ExhaustionBound& bound = {});

}  // namespace electsys

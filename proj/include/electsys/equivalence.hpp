#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "electsys/oracle.hpp"

namespace electsys {

struct EquivalenceOptions {
  std::uint64_t instances = 10'000;
  std::uint64_t seed = 20070601;
  ExhaustionBound bound;
};

struct EquivalenceReport {
  std::string family;
  std::uint64_t instances = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;  // serialized instance and both answers
  double seconds = 0;

  bool passed() const { return mismatches == 0 && instances > 0; }
};

// Families: dodgson, young, kemeny, manipulation, bribery, control, and
// bribery-encodings (the three weighted-priced plurality engines against each
// other on the plurality part of the bribery sample).
std::vector<std::string> equivalence_families();

// Runs the optimized engine and the oracle on random instances drawn within
// the bound and compares verdicts. Yes-witnesses from the engine are replayed
// and count as mismatches if they do not achieve the goal.
EquivalenceReport check_equivalence(const std::string& family, const EquivalenceOptions& options = {});

}  // namespace electsys

#pragma once

#include <cstdint>
#include <string_view>

namespace electsys {

using CandidateId = int;
using Weight = std::int64_t;
using Score = std::int64_t;

// Co-winner: the target must be in the winner set. Unique: it must be the
// whole winner set.
enum class WinnerMode { CoWinner, Unique };

enum class Complexity { PolynomialTime, NPComplete };

std::string_view to_string(WinnerMode mode);
std::string_view to_string(Complexity c);

// Budget shared by the exact search engines. Exceeding it raises
// SearchBudgetExceeded instead of returning a guess.
struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
};

}  // namespace electsys

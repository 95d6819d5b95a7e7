#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "electsys/election.hpp"

namespace electsys {

// Line-oriented text format, `#` starts a comment:
//
//   candidates: a b c d
//   spoilers: d
//   voters:
//   ballot: 1 1 : a > b > c > d
//   approve: 2 0 : a c
//   voterpool:
//   ballot: 1 1 : d > c > b > a
//
// `candidates:` lists every candidate in id order, spoilers included;
// `spoilers:` marks some of them as the pool for candidate-adding control.
// Ballot lines belong to the most recent `voters:` or `voterpool:` header
// (`voters:` if none). The `W P :` prefix is optional on input (weight 1,
// price 1) and always written on output.
struct ElectionFile {
  Election election;
  std::vector<CandidateId> spoilers;
  std::vector<Voter> voter_pool;

  bool operator==(const ElectionFile&) const = default;
};

// Throws ParseError (an InvalidInput) carrying the 1-based line number.
ElectionFile parse_election(std::string_view text);
ElectionFile read_election_file(const std::filesystem::path& path);

std::string serialize_election(const ElectionFile& file);
std::string serialize_election(const Election& election);

std::string format_ballot(const Election& election, const Ballot& ballot);

}  // namespace electsys

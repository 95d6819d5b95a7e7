#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "electsys/election.hpp"

namespace electsys {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,      // computed; "yes" for decision commands
  kExitNo = 1,      // decision commands answered "no", or oracle-check found a mismatch
  kExitInput = 2,   // usage, parse or input error
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The election on the given candidates (in id order) and voters, with ballots
// restricted to those candidates. Names are kept; ids are renumbered.
Election restrict_election(const Election& election, const std::vector<CandidateId>& candidates,
                           const std::vector<const Voter*>& voters);

}  // namespace electsys

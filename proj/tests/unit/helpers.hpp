#pragma once

#include <string>

#include "electsys/election_file.hpp"

inline electsys::Election election_of(const std::string& text) { return electsys::parse_election(text).election; }

inline const char* const kQueens =
    "candidates: Hatter MarchHare Dormouse\n"
    "ballot: Hatter > MarchHare > Dormouse\n"
    "ballot: MarchHare > Dormouse > Hatter\n"
    "ballot: Dormouse > Hatter > MarchHare\n";

inline const char* const kBorda =
    "candidates: a b c\n"
    "ballot: 5 1 : a > b > c\n"
    "ballot: 5 1 : b > a > c\n"
    "ballot: 1 1 : c > a > b\n";

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "electsys/election.hpp"

namespace electsys {

enum class ControlType {
  AddCandidates,
  DeleteCandidates,
  PartitionCandidates,
  RunoffPartitionCandidates,
  AddVoters,
  DeleteVoters,
  PartitionVoters,
};
enum class ControlMode { Constructive, Destructive };
enum class TieRule { TE, TP };
enum class VotingSystem { Plurality, Condorcet, Approval };
enum class Classification { Immune, Resistant, Vulnerable };

struct ControlSpec {
  ControlType type = ControlType::AddCandidates;
  ControlMode mode = ControlMode::Constructive;
  std::optional<TieRule> tie;  // partition types only
  VotingSystem system = VotingSystem::Plurality;
};

// election.candidates is C plus the spoilers D; every ballot, in V and in the
// pool W, ranges over all of them. Outside adding-candidates the spoilers are
// simply erased from every ballot.
struct ControlInstance {
  Election election;
  std::vector<CandidateId> spoilers;
  std::vector<Voter> voter_pool;
  CandidateId target = 0;
  int limit = 0;
};

// AddCandidates: candidates added from D. DeleteCandidates: candidates
// deleted. Partition(Runoff)Candidates: the first side C1.
// AddVoters: pool positions added. DeleteVoters: positions of V deleted.
// PartitionVoters: the first side V1.
struct ControlAction {
  std::vector<CandidateId> candidates;
  std::vector<std::size_t> voters;

  bool operator==(const ControlAction&) const = default;
};

struct ControlVerdict {
  bool yes = false;
  ControlAction action;
  WinnerSet final_winners;  // of the final round under the action (yes only)
  bool polynomial = false;  // decided by a polynomial-time procedure
};

struct ControlOptions {
  SearchLimits limits;
  // Skip the polynomial procedures and search exhaustively.
  bool exhaustive_only = false;
};

std::string_view to_string(ControlType t);
std::string_view to_string(ControlMode m);
std::string_view to_string(TieRule t);
std::string_view to_string(VotingSystem s);
std::string_view to_string(Classification c);

bool is_partition_type(ControlType t);

// Throws InvalidInput unless the tie rule is present exactly for partition types.
void validate_spec(const ControlSpec& spec);

// Table 1 of the control literature for plurality, Condorcet and approval.
Classification classify_control(const ControlSpec& spec);

// Every well-formed spec: 3 systems x 10 types x 2 modes.
std::vector<ControlSpec> all_control_specs();

// Winner set of the election restricted to `candidates` and the listed
// voters (positions into election.voters). Absent candidates are erased
// from ballots. Condorcet gives the Condorcet winner or nothing.
WinnerSet run_subelection(VotingSystem system, const Election& election, const std::vector<CandidateId>& candidates,
                          const std::vector<std::size_t>& voters);

// Candidates of C, i.e. election ids that are not spoilers, ascending.
std::vector<CandidateId> base_candidates(const ControlInstance& instance);

// The final round of a partition scheme. An empty side (no candidates in a
// candidate partition, no voters in a voter partition) sends nobody forward; TE forwards a side's winner only if unique, TP
// forwards all of them. The final round always uses every voter of V.
struct FinalRound {
  std::vector<CandidateId> candidates;
  std::vector<std::size_t> voters;
};
FinalRound apply_partition(const ControlSpec& spec, const ControlInstance& instance, const ControlAction& partition);

// Winners of the final round after `action`. Validates the action
// (ranges, limits, disjointness) and throws InvalidInput if it is malformed.
WinnerSet control_outcome(const ControlSpec& spec, const ControlInstance& instance, const ControlAction& action);

// Unique-winner goal: constructive wants {target}, destructive anything else.
bool control_goal_met(const ControlSpec& spec, const ControlInstance& instance, const WinnerSet& final_winners);

// Polynomial procedures for vulnerable entries are used with unit weights;
// everything else is searched exhaustively.
ControlVerdict control_decide(const ControlSpec& spec, const ControlInstance& instance,
                              const ControlOptions& options = {});

// nullopt when no polynomial procedure applies to this spec and instance.
std::optional<ControlVerdict> control_decide_polynomial(const ControlSpec& spec, const ControlInstance& instance);

ControlVerdict control_decide_exhaustive(const ControlSpec& spec, const ControlInstance& instance,
                                         const SearchLimits& limits = {});

}  // namespace electsys

#include <doctest.h>

#include "electsys/control.hpp"
#include "electsys/oracle.hpp"
#include "helpers.hpp"

using namespace electsys;

namespace {

ControlInstance instance_of(const std::string& text, const std::string& target, int limit) {
  const auto f = parse_election(text);
  return ControlInstance{f.election, f.spoilers, f.voter_pool, *f.election.find(target), limit};
}

const char* const kPlurality =
    "candidates: a b c d\nspoilers: d\n"
    "ballot: a > b > c > d\nballot: a > c > b > d\nballot: b > c > a > d\nballot: c > b > a > d\n"
    "ballot: d > a > b > c\n"
    "voterpool:\nballot: b > a > c > d\nballot: c > a > b > d\n";

}  // namespace

TEST_CASE("there are sixty control problems") {
  const auto specs = all_control_specs();
  CHECK(specs.size() == 60);
  int immune = 0;
  for (const auto& s : specs) immune += classify_control(s) == Classification::Immune;
  CHECK(immune == 14);
}

TEST_CASE("table entries") {
  CHECK(classify_control({ControlType::AddCandidates, ControlMode::Constructive, {}, VotingSystem::Condorcet}) ==
        Classification::Immune);
  CHECK(classify_control({ControlType::AddVoters, ControlMode::Constructive, {}, VotingSystem::Plurality}) ==
        Classification::Vulnerable);
  CHECK(classify_control({ControlType::PartitionVoters, ControlMode::Constructive, TieRule::TP,
                          VotingSystem::Plurality}) == Classification::Resistant);
  CHECK(classify_control({ControlType::PartitionCandidates, ControlMode::Constructive, TieRule::TE,
                          VotingSystem::Approval}) == Classification::Vulnerable);
  CHECK(classify_control({ControlType::PartitionCandidates, ControlMode::Constructive, TieRule::TP,
                          VotingSystem::Approval}) == Classification::Immune);
  CHECK_THROWS_AS(validate_spec({ControlType::PartitionVoters, ControlMode::Constructive, {}, VotingSystem::Approval}),
                  InvalidInput);
}

TEST_CASE("plurality control of the example election") {
  const ControlSpec av{ControlType::AddVoters, ControlMode::Constructive, {}, VotingSystem::Plurality};
  const ControlSpec dv{ControlType::DeleteVoters, ControlMode::Constructive, {}, VotingSystem::Plurality};
  const ControlSpec dc{ControlType::DeleteCandidates, ControlMode::Constructive, {}, VotingSystem::Plurality};
  const auto in = instance_of(kPlurality, "b", 2);
  CHECK_FALSE(control_decide(av, in).yes);
  CHECK_FALSE(control_decide(dv, in).yes);
  CHECK_FALSE(bf_control(dv, in).yes);
  const auto v = control_decide(dc, in);
  REQUIRE(v.yes);
  CHECK(v.action.candidates == std::vector<CandidateId>{0});
  CHECK(control_outcome(dc, in, v.action) == WinnerSet{1});
  CHECK(control_goal_met(dc, in, control_outcome(dc, in, v.action)));
  CHECK(bf_control(dc, in).yes);
}

TEST_CASE("adding the spoiler splits the vote") {
  const ControlSpec dac{ControlType::AddCandidates, ControlMode::Destructive, {}, VotingSystem::Plurality};
  const auto in = instance_of(
      "candidates: a b c d\nspoilers: d\n"
      "ballot: a > b > c > d\nballot: a > c > b > d\nballot: d > a > b > c\nballot: d > a > c > b\n",
      "a", 0);
  const auto v = control_decide(dac, in);
  REQUIRE(v.yes);
  CHECK(v.action.candidates == std::vector<CandidateId>{3});
  CHECK(bf_control(dac, in).yes);
}

TEST_CASE("partition semantics") {
  const auto in = instance_of("candidates: a b c\nballot: a > b > c\nballot: b > c > a\nballot: c > a > b\n", "a", 0);
  const ControlSpec pc{ControlType::PartitionCandidates, ControlMode::Constructive, TieRule::TE,
                       VotingSystem::Condorcet};
  const ControlAction first{{1, 2}, {}};
  const auto round = apply_partition(pc, in, first);
  CHECK(round.candidates == std::vector<CandidateId>{0, 1});
  CHECK(control_outcome(pc, in, first) == WinnerSet{0});
  CHECK(control_decide(pc, in).yes);
}

TEST_CASE("pools must be present") {
  const ControlSpec ac{ControlType::AddCandidates, ControlMode::Constructive, {}, VotingSystem::Plurality};
  const auto in = instance_of("candidates: a b\nballot: a > b\n", "a", 0);
  CHECK_THROWS_AS(control_decide(ac, in), PoolMissing);
  CHECK_THROWS_AS(bf_control(ac, in), PoolMissing);
}

TEST_CASE("polynomial engines match the exhaustive engine") {
  const auto in = instance_of(kPlurality, "c", 1);
  for (const auto& spec : all_control_specs()) {
    if (spec.system != VotingSystem::Plurality) continue;
    CAPTURE(std::string(to_string(spec.type)));
    CHECK(control_decide(spec, in).yes == control_decide_exhaustive(spec, in).yes);
  }
}

#include "electsys/control.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace electsys {

std::string_view to_string(ControlType t) {
  switch (t) {
    case ControlType::AddCandidates: return "add-candidates";
    case ControlType::DeleteCandidates: return "delete-candidates";
    case ControlType::PartitionCandidates: return "partition-candidates";
    case ControlType::RunoffPartitionCandidates: return "runoff-partition-candidates";
    case ControlType::AddVoters: return "add-voters";
    case ControlType::DeleteVoters: return "delete-voters";
    case ControlType::PartitionVoters: return "partition-voters";
  }
  return "?";
}

std::string_view to_string(ControlMode m) { return m == ControlMode::Constructive ? "constructive" : "destructive"; }

std::string_view to_string(TieRule t) { return t == TieRule::TE ? "TE" : "TP"; }

std::string_view to_string(VotingSystem s) {
  switch (s) {
    case VotingSystem::Plurality: return "plurality";
    case VotingSystem::Condorcet: return "condorcet";
    case VotingSystem::Approval: return "approval";
  }
  return "?";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Immune: return "immune";
    case Classification::Resistant: return "resistant";
    case Classification::Vulnerable: return "vulnerable";
  }
  return "?";
}

bool is_partition_type(ControlType t) {
  return t == ControlType::PartitionCandidates || t == ControlType::RunoffPartitionCandidates ||
         t == ControlType::PartitionVoters;
}

void validate_spec(const ControlSpec& spec) {
  if (is_partition_type(spec.type) != spec.tie.has_value()) {
    throw InvalidInput("a tie rule is required for partition control and forbidden otherwise");
  }
}

Classification classify_control(const ControlSpec& spec) {
  validate_spec(spec);
  using C = Classification;
  const bool con = spec.mode == ControlMode::Constructive;
  const bool te = spec.tie == TieRule::TE;
  switch (spec.system) {
    case VotingSystem::Plurality:
      switch (spec.type) {
        case ControlType::AddCandidates:
        case ControlType::DeleteCandidates:
        case ControlType::PartitionCandidates:
        case ControlType::RunoffPartitionCandidates: return C::Resistant;
        case ControlType::AddVoters:
        case ControlType::DeleteVoters: return C::Vulnerable;
        case ControlType::PartitionVoters: return te ? C::Vulnerable : C::Resistant;
      }
      break;
    case VotingSystem::Condorcet:
      switch (spec.type) {
        case ControlType::AddCandidates: return con ? C::Immune : C::Vulnerable;
        case ControlType::DeleteCandidates:
        case ControlType::PartitionCandidates:
        case ControlType::RunoffPartitionCandidates: return con ? C::Vulnerable : C::Immune;
        case ControlType::AddVoters:
        case ControlType::DeleteVoters:
        case ControlType::PartitionVoters: return con ? C::Resistant : C::Vulnerable;
      }
      break;
    case VotingSystem::Approval:
      switch (spec.type) {
        case ControlType::AddCandidates: return con ? C::Immune : C::Vulnerable;
        case ControlType::DeleteCandidates: return con ? C::Vulnerable : C::Immune;
        case ControlType::PartitionCandidates:
        case ControlType::RunoffPartitionCandidates: return con && te ? C::Vulnerable : C::Immune;
        case ControlType::AddVoters:
        case ControlType::DeleteVoters: return con ? C::Resistant : C::Vulnerable;
        case ControlType::PartitionVoters: return con ? C::Resistant : C::Vulnerable;
      }
      break;
  }
  throw InvalidInput("unknown control specification");
}

std::vector<ControlSpec> all_control_specs() {
  std::vector<ControlSpec> out;
  for (auto system : {VotingSystem::Plurality, VotingSystem::Condorcet, VotingSystem::Approval}) {
    for (auto type : {ControlType::AddCandidates, ControlType::DeleteCandidates, ControlType::PartitionCandidates,
                      ControlType::RunoffPartitionCandidates, ControlType::AddVoters, ControlType::DeleteVoters,
                      ControlType::PartitionVoters}) {
      for (auto mode : {ControlMode::Constructive, ControlMode::Destructive}) {
        if (is_partition_type(type)) {
          for (auto tie : {TieRule::TE, TieRule::TP}) out.push_back(ControlSpec{type, mode, tie, system});
        } else {
          out.push_back(ControlSpec{type, mode, std::nullopt, system});
        }
      }
    }
  }
  return out;
}

namespace {

using VoterRefs = std::vector<const Voter*>;

WinnerSet winners_of(VotingSystem system, const VoterRefs& voters, const std::vector<CandidateId>& cands, int m) {
  if (cands.empty()) return {};
  std::vector<int> slot(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < cands.size(); ++i) slot[static_cast<std::size_t>(cands[i])] = static_cast<int>(i);
  const std::size_t k = cands.size();

  if (system == VotingSystem::Condorcet) {
    std::vector<Weight> n(k * k, 0);
    Weight total = 0;
    std::vector<int> order;
    for (const Voter* v : voters) {
      total += v->weight;
      order.clear();
      for (CandidateId x : v->order().ranking) {
        if (slot[static_cast<std::size_t>(x)] >= 0) order.push_back(slot[static_cast<std::size_t>(x)]);
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          n[static_cast<std::size_t>(order[i]) * k + static_cast<std::size_t>(order[j])] += v->weight;
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      bool beats_all = true;
      for (std::size_t b = 0; b < k && beats_all; ++b) {
        if (a != b && 2 * n[a * k + b] <= total) beats_all = false;
      }
      if (beats_all) return {cands[a]};
    }
    return {};
  }

  std::vector<Score> score(k, 0);
  for (const Voter* v : voters) {
    if (system == VotingSystem::Plurality) {
      for (CandidateId x : v->order().ranking) {
        const int s = slot[static_cast<std::size_t>(x)];
        if (s >= 0) {
          score[static_cast<std::size_t>(s)] += v->weight;
          break;
        }
      }
    } else {
      const auto& a = v->approval().approvals;
      for (std::size_t i = 0; i < k; ++i) {
        if (a[static_cast<std::size_t>(cands[i])]) score[i] += v->weight;
      }
    }
  }
  const Score best = *std::max_element(score.begin(), score.end());
  WinnerSet out;
  for (std::size_t i = 0; i < k; ++i) {
    if (score[i] == best) out.push_back(cands[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WinnerSet survivors(const WinnerSet& w, TieRule tie) {
  if (tie == TieRule::TE && w.size() != 1) return {};
  return w;
}

std::vector<CandidateId> set_union(std::vector<CandidateId> a, const std::vector<CandidateId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<CandidateId> set_minus(const std::vector<CandidateId>& a, const std::vector<CandidateId>& b) {
  std::vector<CandidateId> out;
  for (CandidateId x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  }
  return out;
}

void check_instance(const ControlSpec& spec, const ControlInstance& in) {
  validate_spec(spec);
  validate(in.election);
  const int m = in.election.candidate_count();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (CandidateId d : in.spoilers) {
    if (d < 0 || d >= m) throw InvalidInput("spoiler id out of range");
    if (seen[static_cast<std::size_t>(d)] != 0) throw InvalidInput("spoiler listed twice");
    seen[static_cast<std::size_t>(d)] = 1;
  }
  require_candidate(in.election, in.target, "control target");
  if (seen[static_cast<std::size_t>(in.target)] != 0) throw InvalidInput("the control target cannot be a spoiler");
  for (const auto& v : in.voter_pool) validate_voter(v, m);
  const bool approval = spec.system == VotingSystem::Approval;
  auto check_kind = [&](const Voter& v) {
    if (v.is_linear() == approval) {
      throw BallotKindMismatch(approval ? "approval control needs approval ballots"
                                        : "plurality and Condorcet control need linear ballots");
    }
  };
  for (const auto& v : in.election.voters) check_kind(v);
  for (const auto& v : in.voter_pool) check_kind(v);
  if (in.limit < 0) throw InvalidInput("control limit must be nonnegative");
  if (spec.type == ControlType::AddCandidates && in.spoilers.empty()) {
    throw PoolMissing("adding candidates needs a nonempty spoiler pool");
  }
  if (spec.type == ControlType::AddVoters && in.voter_pool.empty()) {
    throw PoolMissing("adding voters needs a nonempty voter pool");
  }
}

VoterRefs refs_of(const std::vector<Voter>& voters) {
  VoterRefs out;
  for (const auto& v : voters) out.push_back(&v);
  return out;
}

VoterRefs refs_at(const std::vector<Voter>& voters, const std::vector<std::size_t>& idx) {
  VoterRefs out;
  for (std::size_t i : idx) out.push_back(&voters[i]);
  return out;
}

// Evaluation on an already validated instance and action.
WinnerSet evaluate(const ControlSpec& spec, const ControlInstance& in, const std::vector<CandidateId>& base,
                   const ControlAction& a) {
  const int m = in.election.candidate_count();
  const auto& voters = in.election.voters;
  switch (spec.type) {
    case ControlType::AddCandidates:
      return winners_of(spec.system, refs_of(voters), set_union(base, a.candidates), m);
    case ControlType::DeleteCandidates:
      return winners_of(spec.system, refs_of(voters), set_minus(base, a.candidates), m);
    case ControlType::AddVoters: {
      VoterRefs all = refs_of(voters);
      for (std::size_t i : a.voters) all.push_back(&in.voter_pool[i]);
      return winners_of(spec.system, all, base, m);
    }
    case ControlType::DeleteVoters: {
      std::vector<char> gone(voters.size(), 0);
      for (std::size_t i : a.voters) gone[i] = 1;
      VoterRefs kept;
      for (std::size_t i = 0; i < voters.size(); ++i) {
        if (gone[i] == 0) kept.push_back(&voters[i]);
      }
      return winners_of(spec.system, kept, base, m);
    }
    case ControlType::PartitionCandidates:
    case ControlType::RunoffPartitionCandidates: {
      const VoterRefs all = refs_of(voters);
      std::vector<CandidateId> c1 = a.candidates;
      std::sort(c1.begin(), c1.end());
      const auto c2 = set_minus(base, c1);
      const auto s1 = survivors(winners_of(spec.system, all, c1, m), *spec.tie);
      const auto rest = spec.type == ControlType::PartitionCandidates
                            ? c2
                            : survivors(winners_of(spec.system, all, c2, m), *spec.tie);
      return winners_of(spec.system, all, set_union(s1, rest), m);
    }
    case ControlType::PartitionVoters: {
      std::vector<char> side(voters.size(), 0);
      for (std::size_t i : a.voters) side[i] = 1;
      VoterRefs v1;
      VoterRefs v2;
      for (std::size_t i = 0; i < voters.size(); ++i) (side[i] != 0 ? v1 : v2).push_back(&voters[i]);
      const auto s1 = v1.empty() ? WinnerSet{} : survivors(winners_of(spec.system, v1, base, m), *spec.tie);
      const auto s2 = v2.empty() ? WinnerSet{} : survivors(winners_of(spec.system, v2, base, m), *spec.tie);
      return winners_of(spec.system, refs_of(voters), set_union(s1, s2), m);
    }
  }
  return {};
}

template <typename T>
void require_distinct(std::vector<T> xs, const char* what) {
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) throw InvalidInput(std::string(what) + " lists an entry twice");
}

void check_action(const ControlSpec& spec, const ControlInstance& in, const std::vector<CandidateId>& base,
                  const ControlAction& a) {
  const bool candidate_type = spec.type == ControlType::AddCandidates || spec.type == ControlType::DeleteCandidates ||
                              spec.type == ControlType::PartitionCandidates ||
                              spec.type == ControlType::RunoffPartitionCandidates;
  if (candidate_type && !a.voters.empty()) throw InvalidInput("this control type acts on candidates only");
  if (!candidate_type && !a.candidates.empty()) throw InvalidInput("this control type acts on voters only");
  require_distinct(a.candidates, "control action");
  require_distinct(a.voters, "control action");
  const auto in_list = [](const std::vector<CandidateId>& xs, CandidateId x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  const auto limit = static_cast<std::size_t>(in.limit);
  switch (spec.type) {
    case ControlType::AddCandidates:
      for (CandidateId x : a.candidates) {
        if (!in_list(in.spoilers, x)) throw InvalidInput("only spoilers can be added");
      }
      break;
    case ControlType::DeleteCandidates:
      if (a.candidates.size() > limit) throw InvalidInput("more candidates deleted than the limit allows");
      for (CandidateId x : a.candidates) {
        if (!in_list(base, x)) throw InvalidInput("only candidates of C can be deleted");
        if (x == in.target && spec.mode == ControlMode::Destructive) {
          throw InvalidInput("destructive control may not delete the target");
        }
      }
      break;
    case ControlType::PartitionCandidates:
    case ControlType::RunoffPartitionCandidates:
      for (CandidateId x : a.candidates) {
        if (!in_list(base, x)) throw InvalidInput("partition side names a candidate outside C");
      }
      break;
    case ControlType::AddVoters:
      if (a.voters.size() > limit) throw InvalidInput("more voters added than the limit allows");
      for (std::size_t i : a.voters) {
        if (i >= in.voter_pool.size()) throw InvalidInput("pool voter index out of range");
      }
      break;
    case ControlType::DeleteVoters:
      if (a.voters.size() > limit) throw InvalidInput("more voters deleted than the limit allows");
      [[fallthrough]];
    case ControlType::PartitionVoters:
      for (std::size_t i : a.voters) {
        if (i >= in.election.voters.size()) throw InvalidInput("voter index out of range");
      }
      break;
  }
}

bool goal(const ControlSpec& spec, CandidateId c, const WinnerSet& w) {
  const bool unique_c = w.size() == 1 && w.front() == c;
  return spec.mode == ControlMode::Constructive ? unique_c : !unique_c;
}

}  // namespace

std::vector<CandidateId> base_candidates(const ControlInstance& in) {
  std::vector<CandidateId> out;
  for (CandidateId x = 0; x < in.election.candidate_count(); ++x) {
    if (std::find(in.spoilers.begin(), in.spoilers.end(), x) == in.spoilers.end()) out.push_back(x);
  }
  return out;
}

WinnerSet run_subelection(VotingSystem system, const Election& election, const std::vector<CandidateId>& candidates,
                          const std::vector<std::size_t>& voters) {
  validate(election);
  for (CandidateId x : candidates) require_candidate(election, x, "subelection");
  require_distinct(candidates, "subelection candidate list");
  for (std::size_t i : voters) {
    if (i >= election.voters.size()) throw InvalidInput("voter index out of range");
  }
  const auto refs = refs_at(election.voters, voters);
  for (const Voter* v : refs) {
    if (v->is_linear() == (system == VotingSystem::Approval)) {
      throw BallotKindMismatch("ballot kind does not match the voting system");
    }
  }
  return winners_of(system, refs, candidates, election.candidate_count());
}

FinalRound apply_partition(const ControlSpec& spec, const ControlInstance& in, const ControlAction& partition) {
  check_instance(spec, in);
  if (!is_partition_type(spec.type)) throw InvalidInput("apply_partition needs a partition control type");
  const auto base = base_candidates(in);
  check_action(spec, in, base, partition);
  const int m = in.election.candidate_count();
  const auto& voters = in.election.voters;
  FinalRound out;
  for (std::size_t i = 0; i < voters.size(); ++i) out.voters.push_back(i);
  const VoterRefs all = refs_of(voters);
  if (spec.type == ControlType::PartitionVoters) {
    std::vector<char> side(voters.size(), 0);
    for (std::size_t i : partition.voters) side[i] = 1;
    VoterRefs v1;
    VoterRefs v2;
    for (std::size_t i = 0; i < voters.size(); ++i) (side[i] != 0 ? v1 : v2).push_back(&voters[i]);
    const auto s1 = v1.empty() ? WinnerSet{} : survivors(winners_of(spec.system, v1, base, m), *spec.tie);
    const auto s2 = v2.empty() ? WinnerSet{} : survivors(winners_of(spec.system, v2, base, m), *spec.tie);
    out.candidates = set_union(s1, s2);
    return out;
  }
  std::vector<CandidateId> c1 = partition.candidates;
  std::sort(c1.begin(), c1.end());
  const auto c2 = set_minus(base, c1);
  const auto s1 = survivors(winners_of(spec.system, all, c1, m), *spec.tie);
  const auto rest =
      spec.type == ControlType::PartitionCandidates ? c2 : survivors(winners_of(spec.system, all, c2, m), *spec.tie);
  out.candidates = set_union(s1, rest);
  return out;
}

WinnerSet control_outcome(const ControlSpec& spec, const ControlInstance& in, const ControlAction& action) {
  check_instance(spec, in);
  const auto base = base_candidates(in);
  check_action(spec, in, base, action);
  return evaluate(spec, in, base, action);
}

bool control_goal_met(const ControlSpec& spec, const ControlInstance& in, const WinnerSet& final_winners) {
  return goal(spec, in.target, final_winners);
}

namespace {

// Calls f on every r-subset of ground (ascending positions); stops when f
// returns true.
bool for_each_subset(const std::vector<std::size_t>& ground, std::size_t r,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  const std::size_t n = ground.size();
  if (r > n) return false;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  std::vector<std::size_t> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = ground[pick[i]];
    if (f(chosen)) return true;
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

ControlVerdict control_decide_exhaustive(const ControlSpec& spec, const ControlInstance& in,
                                         const SearchLimits& limits) {
  check_instance(spec, in);
  const auto base = base_candidates(in);
  std::uint64_t nodes = 0;
  ControlVerdict verdict;
  auto attempt = [&](const ControlAction& a) {
    if (++nodes > limits.max_nodes) throw SearchBudgetExceeded("control search exceeded its node budget");
    auto w = evaluate(spec, in, base, a);
    if (!goal(spec, in.target, w)) return false;
    verdict.yes = true;
    verdict.action = a;
    verdict.final_winners = std::move(w);
    return true;
  };
  auto on_candidates = [&](const std::vector<std::size_t>& ids) {
    ControlAction a;
    for (std::size_t x : ids) a.candidates.push_back(static_cast<CandidateId>(x));
    return attempt(a);
  };
  auto on_voters = [&](const std::vector<std::size_t>& ids) {
    ControlAction a;
    a.voters = ids;
    return attempt(a);
  };
  const auto limit = static_cast<std::size_t>(in.limit);
  std::vector<std::size_t> ground;

  switch (spec.type) {
    case ControlType::AddCandidates: {
      for (CandidateId d : in.spoilers) ground.push_back(static_cast<std::size_t>(d));
      std::sort(ground.begin(), ground.end());
      for (std::size_t r = 0; r <= ground.size(); ++r) {
        if (for_each_subset(ground, r, on_candidates)) return verdict;
      }
      break;
    }
    case ControlType::DeleteCandidates: {
      // Deleting c never helps the constructive goal and is forbidden for the
      // destructive one.
      for (CandidateId x : base) {
        if (x != in.target) ground.push_back(static_cast<std::size_t>(x));
      }
      for (std::size_t r = 0; r <= std::min(limit, ground.size()); ++r) {
        if (for_each_subset(ground, r, on_candidates)) return verdict;
      }
      break;
    }
    case ControlType::AddVoters: {
      for (std::size_t i = 0; i < in.voter_pool.size(); ++i) ground.push_back(i);
      for (std::size_t r = 0; r <= std::min(limit, ground.size()); ++r) {
        if (for_each_subset(ground, r, on_voters)) return verdict;
      }
      break;
    }
    case ControlType::DeleteVoters: {
      for (std::size_t i = 0; i < in.election.voters.size(); ++i) ground.push_back(i);
      for (std::size_t r = 0; r <= std::min(limit, ground.size()); ++r) {
        if (for_each_subset(ground, r, on_voters)) return verdict;
      }
      break;
    }
    case ControlType::PartitionCandidates:
    case ControlType::RunoffPartitionCandidates: {
      if (base.size() >= 63) throw SearchBudgetExceeded("too many candidates to enumerate partitions");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
        ControlAction a;
        for (std::size_t i = 0; i < base.size(); ++i) {
          if ((mask >> i) & 1U) a.candidates.push_back(base[i]);
        }
        if (attempt(a)) return verdict;
      }
      break;
    }
    case ControlType::PartitionVoters: {
      const std::size_t n = in.election.voters.size();
      if (n >= 63) throw SearchBudgetExceeded("too many voters to enumerate partitions");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ControlAction a;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1U) a.voters.push_back(i);
        }
        if (attempt(a)) return verdict;
      }
      break;
    }
  }
  return ControlVerdict{};
}

namespace {

// Shared view of a unit-weight instance restricted to C.
struct View {
  const ControlInstance& in;
  std::vector<CandidateId> base;
  CandidateId c;
  int m;
  std::size_t n;

  explicit View(const ControlInstance& instance)
      : in(instance), base(base_candidates(instance)), c(instance.target), m(instance.election.candidate_count()),
        n(instance.election.voters.size()) {}

  bool in_base(CandidateId x) const { return std::find(base.begin(), base.end(), x) != base.end(); }

  std::vector<CandidateId> rivals() const {
    std::vector<CandidateId> out;
    for (CandidateId x : base) {
      if (x != c) out.push_back(x);
    }
    return out;
  }

  CandidateId top(const Voter& v) const {
    for (CandidateId x : v.order().ranking) {
      if (in_base(x)) return x;
    }
    return -1;
  }

  static bool prefers(const Voter& v, CandidateId a, CandidateId b) {
    for (CandidateId x : v.order().ranking) {
      if (x == a) return true;
      if (x == b) return false;
    }
    return false;
  }

  static bool approves(const Voter& v, CandidateId a) { return v.approval().approvals[static_cast<std::size_t>(a)]; }

  // Positions of V (or the pool) satisfying pred, ascending.
  static std::vector<std::size_t> where(const std::vector<Voter>& vs, const std::function<bool(const Voter&)>& pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (pred(vs[i])) out.push_back(i);
    }
    return out;
  }

  std::vector<Weight> plurality_tally() const {
    std::vector<Weight> t(static_cast<std::size_t>(m), 0);
    for (const auto& v : in.election.voters) t[static_cast<std::size_t>(top(v))] += 1;
    return t;
  }

  std::vector<Weight> approval_tally() const {
    std::vector<Weight> t(static_cast<std::size_t>(m), 0);
    for (const auto& v : in.election.voters) {
      for (CandidateId x = 0; x < m; ++x) t[static_cast<std::size_t>(x)] += approves(v, x) ? 1 : 0;
    }
    return t;
  }

  // N[a][b] over all voters of V.
  Weight pair(CandidateId a, CandidateId b) const {
    Weight k = 0;
    for (const auto& v : in.election.voters) k += prefers(v, a, b) ? 1 : 0;
    return k;
  }
};

std::vector<std::size_t> first(const std::vector<std::size_t>& xs, std::size_t k) {
  return {xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(std::min(k, xs.size()))};
}

ControlAction voters_action(std::vector<std::size_t> vs) {
  std::sort(vs.begin(), vs.end());
  ControlAction a;
  a.voters = std::move(vs);
  return a;
}

ControlAction candidates_action(std::vector<CandidateId> cs) {
  std::sort(cs.begin(), cs.end());
  ControlAction a;
  a.candidates = std::move(cs);
  return a;
}

// Assign each voter to side 1 or 2 so that both side sums reach the
// threshold. delta1/delta2 hold each voter's contribution on either side.
std::optional<std::vector<char>> split_both_sides(const std::vector<int>& delta1, const std::vector<int>& delta2,
                                                  int threshold) {
  const std::size_t n = delta1.size();
  const int off = static_cast<int>(n);
  const std::size_t width = 2 * n + 1;
  constexpr int kUnset = -1'000'000;
  // best[i][s1] = largest side-2 sum after i voters with side-1 sum s1.
  std::vector<std::vector<int>> best(n + 1, std::vector<int>(width, kUnset));
  std::vector<std::vector<char>> to_one(n + 1, std::vector<char>(width, 0));
  best[0][static_cast<std::size_t>(off)] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < width; ++s) {
      const int cur = best[i][s];
      if (cur == kUnset) continue;
      const auto s1 = static_cast<std::size_t>(static_cast<int>(s) + delta1[i]);
      if (cur > best[i + 1][s1]) {
        best[i + 1][s1] = cur;
        to_one[i + 1][s1] = 1;
      }
      const int v2 = cur + delta2[i];
      if (v2 > best[i + 1][s]) {
        best[i + 1][s] = v2;
        to_one[i + 1][s] = 0;
      }
    }
  }
  for (std::size_t s = static_cast<std::size_t>(off + threshold); s < width; ++s) {
    if (best[n][s] == kUnset || best[n][s] < threshold) continue;
    std::vector<char> side(n, 0);
    std::size_t cur = s;
    for (std::size_t i = n; i > 0; --i) {
      side[i - 1] = to_one[i][cur];
      if (side[i - 1] != 0) cur = static_cast<std::size_t>(static_cast<int>(cur) - delta1[i - 1]);
    }
    return side;
  }
  return std::nullopt;
}

ControlAction side_one(const std::vector<char>& side) {
  ControlAction a;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (side[i] != 0) a.voters.push_back(i);
  }
  return a;
}

using Decision = std::optional<ControlAction>;  // action on yes, nullopt on no

struct Answer {
  bool decided = false;
  Decision action;
};

Answer yes(ControlAction a) { return {true, std::move(a)}; }
Answer no() { return {true, std::nullopt}; }

Answer plurality_engine(const ControlSpec& spec, const View& v) {
  const auto& voters = v.in.election.voters;
  const auto& pool = v.in.voter_pool;
  const auto t = v.plurality_tally();
  const auto c = v.c;
  const auto rivals = v.rivals();
  const auto k = static_cast<std::size_t>(v.in.limit);
  Weight best_rival = -1;
  for (CandidateId d : rivals) best_rival = std::max(best_rival, t[static_cast<std::size_t>(d)]);
  const Weight tc = t[static_cast<std::size_t>(c)];
  const bool unique_now = tc > best_rival;
  const bool con = spec.mode == ControlMode::Constructive;
  const auto tops = [&](const std::vector<Voter>& vs, CandidateId x) {
    return View::where(vs, [&](const Voter& u) { return v.top(u) == x; });
  };

  switch (spec.type) {
    case ControlType::AddVoters:
      if (con) {
        // Only c-top pool voters help.
        const Weight need = std::max<Weight>(0, best_rival - tc + 1);
        const auto cs = tops(pool, c);
        if (static_cast<std::size_t>(need) <= std::min(k, cs.size())) {
          return yes(voters_action(first(cs, static_cast<std::size_t>(need))));
        }
        return no();
      } else {
        if (!unique_now) return yes({});
        for (CandidateId d : rivals) {
          const auto need = static_cast<std::size_t>(tc - t[static_cast<std::size_t>(d)]);
          const auto ds = tops(pool, d);
          if (need <= std::min(k, ds.size())) return yes(voters_action(first(ds, need)));
        }
        return no();
      }
    case ControlType::DeleteVoters:
      if (con) {
        std::vector<std::size_t> gone;
        for (CandidateId d : rivals) {
          const Weight extra = t[static_cast<std::size_t>(d)] - tc + 1;
          if (extra > t[static_cast<std::size_t>(d)]) return no();
          if (extra > 0) {
            const auto ds = first(tops(voters, d), static_cast<std::size_t>(extra));
            gone.insert(gone.end(), ds.begin(), ds.end());
          }
        }
        if (gone.size() <= k) return yes(voters_action(gone));
        return no();
      } else {
        if (!unique_now) return yes({});
        if (rivals.empty()) return no();
        const auto need = static_cast<std::size_t>(tc - best_rival);
        if (need <= k) return yes(voters_action(first(tops(voters, c), need)));
        return no();
      }
    case ControlType::PartitionVoters: {
      if (spec.tie != TieRule::TE) return {};
      std::vector<std::vector<std::size_t>> group(static_cast<std::size_t>(v.m));
      for (std::size_t i = 0; i < voters.size(); ++i) group[static_cast<std::size_t>(v.top(voters[i]))].push_back(i);
      const auto cnt = [&](CandidateId x) { return t[static_cast<std::size_t>(x)]; };
      const auto grp = [&](CandidateId x) -> const std::vector<std::size_t>& { return group[static_cast<std::size_t>(x)]; };

      if (!con) {
        if (voters.empty()) return yes({});
        for (CandidateId d : rivals) {
          if (cnt(d) >= 1 && v.pair(d, c) >= v.pair(c, d)) return yes(voters_action(grp(d)));
        }
        for (CandidateId x : rivals) {
          if (cnt(x) >= tc) {
            std::vector<std::size_t> all(voters.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            return yes(voters_action(all));
          }
        }
        for (std::size_t i = 0; i < rivals.size(); ++i) {
          for (std::size_t j = i + 1; j < rivals.size(); ++j) {
            const CandidateId x = rivals[i];
            const CandidateId y = rivals[j];
            if (cnt(x) + cnt(y) < tc) continue;
            const auto a = static_cast<std::size_t>(std::min(tc, cnt(x)));
            auto side = first(grp(c), a);
            side.insert(side.end(), grp(x).begin(), grp(x).end());
            return yes(voters_action(side));
          }
        }
        return no();
      }

      // Constructive: c wins side 1 outright with a of its voters; side 2
      // must then produce nobody, c, or a rival c beats head to head.
      for (Weight a = 1; a <= tc; ++a) {
        const Weight s2c = tc - a;
        std::vector<Weight> lo(static_cast<std::size_t>(v.m), 0);
        Weight maxlo = 0;
        for (CandidateId x : rivals) {
          lo[static_cast<std::size_t>(x)] = std::max<Weight>(0, cnt(x) - (a - 1));
          maxlo = std::max(maxlo, lo[static_cast<std::size_t>(x)]);
        }
        std::optional<std::vector<Weight>> side2;  // per-candidate counts kept on side 2
        if (s2c > maxlo) side2 = lo;
        if (!side2) {
          const Weight top_level = std::max(maxlo, s2c);
          Weight takers = s2c == top_level ? 1 : 0;
          for (CandidateId x : rivals) takers += cnt(x) >= top_level ? 1 : 0;
          if (top_level == 0 || takers >= 2) {
            auto counts = lo;
            for (CandidateId x : rivals) {
              if (cnt(x) >= top_level) counts[static_cast<std::size_t>(x)] = top_level;
            }
            side2 = counts;
          }
        }
        if (!side2) {
          for (CandidateId e : rivals) {
            if (cnt(e) <= s2c || v.pair(c, e) <= v.pair(e, c)) continue;
            bool tops_all = true;
            for (CandidateId x : rivals) {
              if (x != e && lo[static_cast<std::size_t>(x)] >= cnt(e)) tops_all = false;
            }
            if (!tops_all) continue;
            auto counts = lo;
            counts[static_cast<std::size_t>(e)] = cnt(e);
            side2 = counts;
            break;
          }
        }
        if (!side2) continue;
        auto side1 = first(grp(c), static_cast<std::size_t>(a));
        for (CandidateId x : rivals) {
          const auto keep = static_cast<std::size_t>(cnt(x) - (*side2)[static_cast<std::size_t>(x)]);
          const auto xs = first(grp(x), keep);
          side1.insert(side1.end(), xs.begin(), xs.end());
        }
        return yes(voters_action(side1));
      }
      return no();
    }
    default:
      return {};
  }
}

Answer condorcet_engine(const ControlSpec& spec, const View& v) {
  const auto& voters = v.in.election.voters;
  const auto& pool = v.in.voter_pool;
  const auto c = v.c;
  const auto rivals = v.rivals();
  const auto k = static_cast<std::size_t>(v.in.limit);
  const auto n = static_cast<Weight>(v.n);
  const bool con = spec.mode == ControlMode::Constructive;
  std::vector<CandidateId> lost;  // rivals c does not beat strictly
  for (CandidateId d : rivals) {
    if (2 * v.pair(c, d) <= n) lost.push_back(d);
  }
  const bool unique_now = lost.empty();
  const auto cw_of = [&](const std::vector<CandidateId>& cands) -> std::optional<CandidateId> {
    const auto w = winners_of(VotingSystem::Condorcet, refs_of(voters), cands, v.m);
    if (w.empty()) return std::nullopt;
    return w.front();
  };
  const auto in_lost = [&](CandidateId x) { return std::find(lost.begin(), lost.end(), x) != lost.end(); };

  if (con) {
    switch (spec.type) {
      case ControlType::DeleteCandidates:
        if (lost.size() <= k) return yes(candidates_action(lost));
        return no();
      case ControlType::PartitionCandidates: {
        if (lost.empty()) return yes({});
        const auto w = cw_of(rivals);
        if (!w || !in_lost(*w)) return yes(candidates_action(rivals));
        return no();
      }
      case ControlType::RunoffPartitionCandidates: {
        const auto w = cw_of(rivals);
        if (!w || !in_lost(*w)) return yes(candidates_action({c}));
        return no();
      }
      default:
        return {};
    }
  }

  switch (spec.type) {
    case ControlType::AddCandidates: {
      if (!unique_now) return yes({});
      for (CandidateId d : v.in.spoilers) {
        if (2 * v.pair(c, d) <= n) return yes(candidates_action({d}));
      }
      return no();
    }
    case ControlType::AddVoters: {
      if (!unique_now) return yes({});
      for (CandidateId d : rivals) {
        const auto margin = static_cast<std::size_t>(v.pair(c, d) - v.pair(d, c));
        const auto helpers = View::where(pool, [&](const Voter& u) { return View::prefers(u, d, c); });
        if (margin <= std::min(k, helpers.size())) return yes(voters_action(first(helpers, margin)));
      }
      return no();
    }
    case ControlType::DeleteVoters: {
      if (!unique_now) return yes({});
      for (CandidateId d : rivals) {
        const auto margin = static_cast<std::size_t>(v.pair(c, d) - v.pair(d, c));
        const auto backers = View::where(voters, [&](const Voter& u) { return View::prefers(u, c, d); });
        if (margin <= k) return yes(voters_action(first(backers, margin)));
      }
      return no();
    }
    case ControlType::PartitionVoters: {
      if (!unique_now || voters.empty()) {
        std::vector<std::size_t> all(voters.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return yes(voters_action(all));
      }
      // c must fail to be the Condorcet winner of both sides.
      for (CandidateId d1 : rivals) {
        for (CandidateId d2 : rivals) {
          std::vector<int> a(voters.size());
          std::vector<int> b(voters.size());
          for (std::size_t i = 0; i < voters.size(); ++i) {
            a[i] = View::prefers(voters[i], d1, c) ? 1 : -1;
            b[i] = View::prefers(voters[i], d2, c) ? 1 : -1;
          }
          if (auto side = split_both_sides(a, b, 0)) return yes(side_one(*side));
        }
      }
      return no();
    }
    default:
      return {};
  }
}

Answer approval_engine(const ControlSpec& spec, const View& v) {
  const auto& voters = v.in.election.voters;
  const auto& pool = v.in.voter_pool;
  const auto c = v.c;
  const auto rivals = v.rivals();
  const auto k = static_cast<std::size_t>(v.in.limit);
  const auto a = v.approval_tally();
  const auto score = [&](CandidateId x) { return a[static_cast<std::size_t>(x)]; };
  std::vector<CandidateId> high;  // rivals scoring at least c
  for (CandidateId d : rivals) {
    if (score(d) >= score(c)) high.push_back(d);
  }
  const bool unique_now = high.empty();
  const bool con = spec.mode == ControlMode::Constructive;
  const auto top_tied = [&]() {
    Weight best = -1;
    int at_best = 0;
    for (CandidateId d : high) {
      if (score(d) > best) {
        best = score(d);
        at_best = 1;
      } else if (score(d) == best) {
        ++at_best;
      }
    }
    return at_best >= 2;
  };

  if (con) {
    switch (spec.type) {
      case ControlType::DeleteCandidates:
        if (high.size() <= k) return yes(candidates_action(high));
        return no();
      case ControlType::PartitionCandidates:
      case ControlType::RunoffPartitionCandidates:
        if (spec.tie != TieRule::TE) return {};
        if (high.empty()) {
          return yes(spec.type == ControlType::PartitionCandidates ? ControlAction{} : candidates_action({c}));
        }
        if (top_tied()) return yes(candidates_action(high));
        return no();
      default:
        return {};
    }
  }

  switch (spec.type) {
    case ControlType::AddCandidates: {
      if (!unique_now) return yes({});
      for (CandidateId d : v.in.spoilers) {
        if (score(d) >= score(c)) return yes(candidates_action({d}));
      }
      return no();
    }
    case ControlType::AddVoters: {
      if (!unique_now) return yes({});
      for (CandidateId d : rivals) {
        const auto gap = static_cast<std::size_t>(score(c) - score(d));
        const auto helpers =
            View::where(pool, [&](const Voter& u) { return View::approves(u, d) && !View::approves(u, c); });
        if (gap <= std::min(k, helpers.size())) return yes(voters_action(first(helpers, gap)));
      }
      return no();
    }
    case ControlType::DeleteVoters: {
      if (!unique_now) return yes({});
      for (CandidateId d : rivals) {
        const auto gap = static_cast<std::size_t>(score(c) - score(d));
        const auto backers =
            View::where(voters, [&](const Voter& u) { return View::approves(u, c) && !View::approves(u, d); });
        if (gap <= std::min(k, backers.size())) return yes(voters_action(first(backers, gap)));
      }
      return no();
    }
    case ControlType::PartitionVoters: {
      if (!unique_now || voters.empty()) {
        std::vector<std::size_t> all(voters.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return yes(voters_action(all));
      }
      // c must fail to advance from both sides: under TE some rival ties or
      // beats it there, under TP some rival beats it.
      const int threshold = spec.tie == TieRule::TE ? 0 : 1;
      for (CandidateId d1 : rivals) {
        for (CandidateId d2 : rivals) {
          std::vector<int> x(voters.size());
          std::vector<int> y(voters.size());
          for (std::size_t i = 0; i < voters.size(); ++i) {
            const int cc = View::approves(voters[i], c) ? 1 : 0;
            x[i] = (View::approves(voters[i], d1) ? 1 : 0) - cc;
            y[i] = (View::approves(voters[i], d2) ? 1 : 0) - cc;
          }
          if (auto side = split_both_sides(x, y, threshold)) return yes(side_one(*side));
        }
      }
      return no();
    }
    default:
      return {};
  }
}

}  // namespace

std::optional<ControlVerdict> control_decide_polynomial(const ControlSpec& spec, const ControlInstance& in) {
  check_instance(spec, in);
  if (classify_control(spec) != Classification::Vulnerable) return std::nullopt;
  if (!in.election.unit_weights()) return std::nullopt;
  for (const auto& v : in.voter_pool) {
    if (v.weight != 1) return std::nullopt;
  }
  const View view(in);
  Answer ans;
  switch (spec.system) {
    case VotingSystem::Plurality: ans = plurality_engine(spec, view); break;
    case VotingSystem::Condorcet: ans = condorcet_engine(spec, view); break;
    case VotingSystem::Approval: ans = approval_engine(spec, view); break;
  }
  if (!ans.decided) return std::nullopt;
  ControlVerdict verdict;
  verdict.polynomial = true;
  if (!ans.action) return verdict;
  verdict.yes = true;
  verdict.action = std::move(*ans.action);
  verdict.final_winners = evaluate(spec, in, view.base, verdict.action);
  if (!goal(spec, in.target, verdict.final_winners)) {
    throw std::logic_error("polynomial control procedure produced a witness that does not work");
  }
  return verdict;
}

ControlVerdict control_decide(const ControlSpec& spec, const ControlInstance& in, const ControlOptions& options) {
  if (!options.exhaustive_only) {
    if (auto v = control_decide_polynomial(spec, in)) return *v;
  }
  return control_decide_exhaustive(spec, in, options.limits);
}

}  // namespace electsys

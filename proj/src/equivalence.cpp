#include "electsys/equivalence.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "electsys/election_file.hpp"

namespace electsys {
namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::vector<CandidateId> permutation(int m) {
    std::vector<CandidateId> r(static_cast<std::size_t>(m));
    std::iota(r.begin(), r.end(), 0);
    std::shuffle(r.begin(), r.end(), rng_);
    return r;
  }

  Voter linear(int m, Weight max_weight, Weight max_price) {
    return linear_voter(permutation(m), uniform(1, static_cast<int>(max_weight)),
                        uniform(0, static_cast<int>(max_price)));
  }

  Voter approval(int m, Weight max_weight, Weight max_price) {
    std::vector<bool> a(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) a[static_cast<std::size_t>(x)] = coin(0.5);
    return approval_voter(std::move(a), uniform(1, static_cast<int>(max_weight)),
                          uniform(0, static_cast<int>(max_price)));
  }

  Election election(int m, std::vector<Voter> voters) {
    std::vector<std::string> names;
    for (int x = 0; x < m; ++x) names.emplace_back(1, static_cast<char>('a' + x));
    return make_election(names, std::move(voters));
  }

  Election linear_election(int m, int n, Weight max_weight) {
    std::vector<Voter> vs;
    for (int i = 0; i < n; ++i) vs.push_back(linear(m, max_weight, 1));
    for (auto& v : vs) v.price = 1;
    return election(m, std::move(vs));
  }

  ScoringVector random_alpha(int m) {
    std::vector<Score> a(static_cast<std::size_t>(m));
    for (auto& x : a) x = uniform(0, 3);
    std::sort(a.rbegin(), a.rend());
    return ScoringVector(std::move(a));
  }

 private:
  std::mt19937_64 rng_;
};

std::string alpha_text(const ScoringVector& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(alpha[i]);
  }
  return out.empty() ? "plurality" : out;
}

// Tracks mismatches for one family run.
struct Tally {
  EquivalenceReport& report;

  void mismatch(std::uint64_t index, const std::string& what, const std::string& instance) {
    if (report.mismatches++ == 0) {
      report.first_mismatch = "instance " + std::to_string(index) + ": " + what + "\n" + instance;
    }
  }
};

template <typename F>
std::string guarded(F&& f) {
  try {
    f();
    return {};
  } catch (const std::exception& ex) {
    return ex.what();
  }
}

int cap(int planned, int bound) { return std::max(0, std::min(planned, bound)); }

void dodgson_family(const EquivalenceOptions& o, Tally& t) {
  Gen g(o.seed);
  const auto& b = o.bound;
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    const int m = g.uniform(1, cap(4, b.max_candidates));
    const int n = g.coin(0.03) ? 0 : g.uniform(1, cap(5, b.max_voters));
    DodgsonTriple triple{g.linear_election(m, n, 1), g.uniform(0, m - 1)};
    auto run = [](auto&& f) -> std::int64_t {
      try {
        return f();
      } catch (const Unreachable&) {
        return -1;
      }
    };
    std::int64_t fast = 0;
    std::int64_t slow = 0;
    const auto err = guarded([&] {
      fast = run([&] { return dodgson_score(triple); });
      slow = run([&] { return bf_dodgson_score(triple, b); });
    });
    if (!err.empty() || fast != slow) {
      t.mismatch(i, err.empty() ? "dodgson_score " + std::to_string(fast) + " vs oracle " + std::to_string(slow) : err,
                 "target " + triple.election.name(triple.distinguished) + "\n" + serialize_election(triple.election));
    }
    ++t.report.instances;
  }
}

void young_family(const EquivalenceOptions& o, Tally& t) {
  Gen g(o.seed);
  const auto& b = o.bound;
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    const int m = g.uniform(1, cap(4, b.max_candidates));
    const int n = g.uniform(0, cap(8, b.max_voters));
    const Election e = g.linear_election(m, n, 1);
    const CandidateId c = g.uniform(0, m - 1);
    std::optional<std::int64_t> fast;
    std::optional<std::int64_t> slow;
    const auto err = guarded([&] {
      fast = young_score(e, c);
      slow = bf_young(e, c, b);
    });
    if (!err.empty() || fast != slow) {
      auto show = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
      t.mismatch(i, err.empty() ? "young_score " + show(fast) + " vs oracle " + show(slow) : err,
                 "target " + e.name(c) + "\n" + serialize_election(e));
    }
    ++t.report.instances;
  }
}

void kemeny_family(const EquivalenceOptions& o, Tally& t) {
  Gen g(o.seed);
  const auto& b = o.bound;
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    const int m = g.uniform(1, cap(4, b.max_candidates));
    const int n = g.uniform(0, cap(6, b.max_voters));
    const Weight w = g.coin(0.3) ? std::min<Weight>(3, b.max_weight) : 1;
    const Election e = g.linear_election(m, n, w);
    bool same = false;
    const auto err = guarded([&] {
      same = kemeny_consensuses(e) == bf_kemeny(e, b) && kemeny_winners(e) == bf_kemeny_winners(e, b);
    });
    if (!err.empty() || !same) t.mismatch(i, err.empty() ? "consensus sets differ" : err, serialize_election(e));
    ++t.report.instances;
  }
}

void manipulation_family(const EquivalenceOptions& o, Tally& t) {
  Gen g(o.seed);
  const auto& b = o.bound;
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    const int m = g.uniform(1, cap(4, b.max_candidates));
    const int n = g.uniform(0, cap(5, b.max_voters));
    const int s = g.uniform(0, cap(3, b.max_voters));
    const Weight wmax = g.coin(0.5) ? 1 : std::min<Weight>(3, b.max_weight);
    ManipulationInstance in;
    const int kind = g.uniform(0, 5);
    in.rule = kind == 5 ? BallotRule::Approval : BallotRule::Scoring;
    std::vector<Voter> vs;
    for (int v = 0; v < n; ++v) {
      vs.push_back(in.rule == BallotRule::Approval ? g.approval(m, wmax, 1) : g.linear(m, wmax, 1));
      vs.back().price = 1;
    }
    in.election = g.election(m, std::move(vs));
    for (int k = 0; k < s; ++k) in.manipulator_weights.push_back(g.uniform(1, static_cast<int>(wmax)));
    in.target = g.uniform(0, m - 1);
    in.mode = g.coin(0.5) ? WinnerMode::CoWinner : WinnerMode::Unique;
    switch (kind) {
      case 0: in.alpha = family_vector(RuleFamily::Plurality, m); break;
      case 1: in.alpha = family_vector(RuleFamily::Veto, m); break;
      case 2: in.alpha = family_vector(RuleFamily::Borda, m); break;
      case 3: in.alpha = family_vector(RuleFamily::KApproval, m, g.uniform(1, m)); break;
      case 4: in.alpha = g.random_alpha(m); break;
      default: break;
    }
    const bool unit = std::all_of(in.manipulator_weights.begin(), in.manipulator_weights.end(),
                                  [](Weight w) { return w == 1; });

    std::vector<std::pair<std::string, std::function<ManipulationVerdict()>>> deciders{
        {"manipulate", [&] { return manipulate(in); }}};
    if (in.rule == BallotRule::Approval) {
      deciders.emplace_back("manipulate_approval", [&] { return manipulate_approval(in); });
    } else {
      if (in.alpha == family_vector(RuleFamily::Plurality, m)) {
        deciders.emplace_back("manipulate_plurality", [&] { return manipulate_plurality(in); });
      }
      if (unit) deciders.emplace_back("manipulate_scoring_unweighted", [&] { return manipulate_scoring_unweighted(in); });
      deciders.emplace_back("manipulate_scoring_weighted", [&] { return manipulate_scoring_weighted(in); });
    }

    std::string problem;
    const auto err = guarded([&] {
      const bool truth = bf_manipulation(in, b).yes;
      for (const auto& [name, run] : deciders) {
        const auto v = run();
        if (v.yes != truth) {
          problem = name + " says " + (v.yes ? "yes" : "no") + ", oracle says " + (truth ? "yes" : "no");
          return;
        }
        if (v.yes && !wins(rule_winners(with_manipulators(in, v.ballots), in.rule, in.alpha), in.target, in.mode)) {
          problem = name + " witness does not make the target win";
          return;
        }
      }
    });
    if (!err.empty() || !problem.empty()) {
      std::ostringstream desc;
      desc << "rule " << (in.rule == BallotRule::Approval ? "approval" : alpha_text(in.alpha)) << ", target "
           << in.election.name(in.target) << ", mode " << to_string(in.mode) << ", manipulators";
      for (Weight w : in.manipulator_weights) desc << ' ' << w;
      desc << '\n' << serialize_election(in.election);
      t.mismatch(i, err.empty() ? problem : err, desc.str());
    }
    ++t.report.instances;
  }
}

// The bribery sample; also the population for the encoding comparison.
std::vector<BriberyInstance> bribery_sample(const EquivalenceOptions& o) {
  Gen g(o.seed);
  const auto& b = o.bound;
  std::vector<BriberyInstance> out;
  out.reserve(o.instances);
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    BriberyInstance in;
    in.variant = static_cast<BriberyVariant>(g.uniform(0, 3));
    in.encoding = static_cast<BriberyEncoding>(g.uniform(0, 2));
    const double r = g.uniform(0, 99) / 100.0;
    const bool plurality = r < 0.6;
    in.rule = (r >= 0.6 && r < 0.8) ? BallotRule::Approval : BallotRule::Scoring;
    const bool small = !plurality && in.rule == BallotRule::Scoring;
    const int m = g.uniform(1, cap(small ? 3 : 4, b.max_candidates));
    const int n = g.uniform(0, cap(small ? 5 : 6, b.max_voters));
    const bool weighted = in.variant == BriberyVariant::Weighted || in.variant == BriberyVariant::WeightedPriced;
    const Weight wmax = weighted ? b.max_weight : 1;
    std::vector<Voter> vs;
    for (int v = 0; v < n; ++v) {
      vs.push_back(in.rule == BallotRule::Approval ? g.approval(m, wmax, b.max_weight) : g.linear(m, wmax, b.max_weight));
    }
    in.election = g.election(m, std::move(vs));
    in.target = g.uniform(0, m - 1);
    in.budget = g.uniform(0, static_cast<int>(b.max_budget));
    in.mode = g.coin(0.5) ? WinnerMode::CoWinner : WinnerMode::Unique;
    if (plurality) {
      if (g.coin(0.5)) in.alpha = family_vector(RuleFamily::Plurality, m);
    } else if (small) {
      switch (g.uniform(0, 2)) {
        case 0: in.alpha = family_vector(RuleFamily::Veto, m); break;
        case 1: in.alpha = family_vector(RuleFamily::Borda, m); break;
        default: in.alpha = g.random_alpha(m); break;
      }
    }
    out.push_back(std::move(in));
  }
  return out;
}

std::string describe(const BriberyInstance& in) {
  std::ostringstream desc;
  desc << "variant " << to_string(in.variant) << ", encoding " << to_string(in.encoding) << ", rule "
       << (in.rule == BallotRule::Approval ? "approval" : alpha_text(in.alpha)) << ", target "
       << in.election.name(in.target) << ", budget " << in.budget << ", mode " << to_string(in.mode) << '\n'
       << serialize_election(in.election);
  return desc.str();
}

// Empty when the witness is valid.
std::string check_bribe_witness(const BriberyInstance& in, const BriberyVerdict& v) {
  Weight cost = 0;
  for (std::size_t k = 0; k < v.bribed.size(); ++k) {
    if (k > 0 && v.bribed[k] <= v.bribed[k - 1]) return "bribed voters not strictly ascending";
    if (v.bribed[k] >= in.election.voters.size()) return "bribed voter out of range";
    cost += bribe_cost(in, in.election.voters[v.bribed[k]]);
  }
  if (cost != v.cost) return "reported cost " + std::to_string(v.cost) + " differs from " + std::to_string(cost);
  if (cost > in.budget) return "witness exceeds the budget";
  const Election after = apply_bribery(in, v);
  const ScoringVector alpha =
      in.alpha.size() == 0 ? family_vector(RuleFamily::Plurality, in.election.candidate_count()) : in.alpha;
  if (!wins(rule_winners(after, in.rule, alpha), in.target, in.mode)) return "witness does not make the target win";
  return {};
}

void bribery_family(const EquivalenceOptions& o, Tally& t) {
  const auto sample = bribery_sample(o);
  for (std::uint64_t i = 0; i < sample.size(); ++i) {
    const auto& in = sample[i];
    std::string problem;
    const auto err = guarded([&] {
      const bool truth = bf_bribery(in, o.bound).yes;
      const auto v = bribe(in);
      if (v.yes != truth) {
        problem = std::string("bribe says ") + (v.yes ? "yes" : "no") + ", oracle says " + (truth ? "yes" : "no");
      } else if (v.yes) {
        problem = check_bribe_witness(in, v);
      }
    });
    if (!err.empty() || !problem.empty()) t.mismatch(i, err.empty() ? problem : err, describe(in));
    ++t.report.instances;
  }
}

void encodings_family(const EquivalenceOptions& o, Tally& t) {
  const auto sample = bribery_sample(o);
  for (std::uint64_t i = 0; i < sample.size(); ++i) {
    const auto& a = sample[i].alpha;
    const bool plurality =
        a.size() == 0 || a == family_vector(RuleFamily::Plurality, sample[i].election.candidate_count());
    if (sample[i].rule != BallotRule::Scoring || !plurality) continue;
    BriberyInstance in = sample[i];
    in.variant = BriberyVariant::WeightedPriced;
    std::string problem;
    const auto err = guarded([&] {
      std::vector<bool> answers;
      for (auto enc : {BriberyEncoding::Binary, BriberyEncoding::WeightsUnary, BriberyEncoding::PricesUnary}) {
        in.encoding = enc;
        const auto v = bribe_plurality_weighted_priced(in);
        answers.push_back(v.yes);
        if (v.yes && problem.empty()) {
          problem = check_bribe_witness(in, v);
          if (!problem.empty()) problem = std::string(to_string(enc)) + ": " + problem;
        }
      }
      if (problem.empty() && (answers[0] != answers[1] || answers[0] != answers[2])) {
        problem = std::string("binary ") + (answers[0] ? "yes" : "no") + ", unary-weights " +
                  (answers[1] ? "yes" : "no") + ", unary-prices " + (answers[2] ? "yes" : "no");
      }
    });
    if (!err.empty() || !problem.empty()) t.mismatch(i, err.empty() ? problem : err, describe(in));
    ++t.report.instances;
  }
}

void control_family(const EquivalenceOptions& o, Tally& t) {
  Gen g(o.seed);
  const auto& b = o.bound;
  const auto specs = all_control_specs();
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    const auto& spec = specs[i % specs.size()];
    const int base = g.uniform(1, cap(3, b.max_candidates));
    const int room = std::max(0, std::min(2, b.max_candidates - base));
    const bool adds_candidates = spec.type == ControlType::AddCandidates;
    if (adds_candidates && room == 0) continue;
    const int spoilers = g.uniform(adds_candidates ? 1 : 0, room);
    const int m = base + spoilers;
    const int n = g.uniform(0, cap(4, b.max_voters));
    const int pool = g.uniform(spec.type == ControlType::AddVoters ? 1 : 0, cap(2, b.max_voters));
    const Weight wmax = g.coin(0.2) ? std::min<Weight>(3, b.max_weight) : 1;
    const bool approval = spec.system == VotingSystem::Approval;
    auto voter = [&] {
      Voter v = approval ? g.approval(m, wmax, 1) : g.linear(m, wmax, 1);
      v.price = 1;
      return v;
    };
    ControlInstance in;
    std::vector<Voter> vs;
    for (int k = 0; k < n; ++k) vs.push_back(voter());
    in.election = g.election(m, std::move(vs));
    for (int k = 0; k < pool; ++k) in.voter_pool.push_back(voter());
    const auto ids = g.permutation(m);
    in.spoilers.assign(ids.begin(), ids.begin() + spoilers);
    std::sort(in.spoilers.begin(), in.spoilers.end());
    in.target = ids[static_cast<std::size_t>(g.uniform(spoilers, m - 1))];
    in.limit = g.uniform(0, 3);

    std::string problem;
    const auto err = guarded([&] {
      const bool truth = bf_control(spec, in, b).yes;
      const std::pair<const char*, ControlVerdict> runs[] = {
          {"control_decide", control_decide(spec, in)},
          {"control_decide_exhaustive", control_decide_exhaustive(spec, in)}};
      for (const auto& [name, v] : runs) {
        if (v.yes != truth) {
          problem = std::string(name) + " says " + (v.yes ? "yes" : "no") + ", oracle says " + (truth ? "yes" : "no");
          return;
        }
        if (v.yes && !control_goal_met(spec, in, control_outcome(spec, in, v.action))) {
          problem = std::string(name) + " witness does not meet the goal";
          return;
        }
      }
    });
    if (!err.empty() || !problem.empty()) {
      std::ostringstream desc;
      desc << to_string(spec.system) << ' ' << to_string(spec.type) << ' ' << to_string(spec.mode);
      if (spec.tie) desc << ' ' << to_string(*spec.tie);
      desc << ", target " << in.election.name(in.target) << ", limit " << in.limit << '\n'
           << serialize_election(ElectionFile{in.election, in.spoilers, in.voter_pool});
      t.mismatch(i, err.empty() ? problem : err, desc.str());
    }
    ++t.report.instances;
  }
}

}  // namespace

std::vector<std::string> equivalence_families() {
  return {"dodgson", "young", "kemeny", "manipulation", "bribery", "bribery-encodings", "control"};
}

EquivalenceReport check_equivalence(const std::string& family, const EquivalenceOptions& options) {
  EquivalenceReport report;
  report.family = family;
  Tally t{report};
  const auto start = std::chrono::steady_clock::now();
  if (family == "dodgson") dodgson_family(options, t);
  else if (family == "young") young_family(options, t);
  else if (family == "kemeny") kemeny_family(options, t);
  else if (family == "manipulation") manipulation_family(options, t);
  else if (family == "bribery") bribery_family(options, t);
  else if (family == "bribery-encodings") encodings_family(options, t);
  else if (family == "control") control_family(options, t);
  else throw InvalidInput("unknown equivalence family '" + family + "'");
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace electsys

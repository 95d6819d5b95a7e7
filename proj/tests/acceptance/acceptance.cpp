// Acceptance checks. Prints one PASS/FAIL line per criterion; with
// `--criterion N` runs only that one. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "electsys/bribery.hpp"
#include "electsys/control.hpp"
#include "electsys/dodgson.hpp"
#include "electsys/election_file.hpp"
#include "electsys/equivalence.hpp"
#include "electsys/manipulation.hpp"
#include "electsys/oracle.hpp"

using namespace electsys;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "NOT ") + what;
  }
};

Election election_of(const std::string& text) { return parse_election(text).election; }

std::string str(std::int64_t v) { return std::to_string(v); }

// 1: Queen's court.
Outcome queens_court() {
  Outcome o;
  const auto e = election_of(
      "candidates: Hatter MarchHare Dormouse\n"
      "ballot: Hatter > MarchHare > Dormouse\n"
      "ballot: MarchHare > Dormouse > Hatter\n"
      "ballot: Dormouse > Hatter > MarchHare\n");
  bool all_one = true;
  for (CandidateId c = 0; c < 3; ++c) {
    all_one = all_one && dodgson_score(DodgsonTriple{e, c}) == 1 && bf_dodgson_score(DodgsonTriple{e, c}) == 1;
  }
  o.require(all_one, "dscore = 1 for Hatter, March Hare and Dormouse");
  o.require(!condorcet_winner(e).has_value(), "no Condorcet winner");
  Election switched = e;
  switched.voters[2] = linear_voter({0, 2, 1});
  o.require(condorcet_winner(switched) == 0, "Hatter is the Condorcet winner after Alice's switch");
  return o;
}

// 2: merged election.
Outcome merged_election() {
  Outcome o;
  const auto ec = election_of("candidates: a b c\nballot: c > b > a\nballot: a > c > b\nballot: b > a > c\n");
  const auto ed = election_of("candidates: d e f\nballot: f > e > d\n");
  const DodgsonTriple tc{ec, 2};
  const DodgsonTriple td{ed, 0};
  const auto out = merge(tc, td, 0, 0);
  const auto& m = out.merged_election;
  const auto sc = dodgson_score(DodgsonTriple{m, out.c});
  const auto sd = dodgson_score(DodgsonTriple{m, out.d});
  o.require(sc == 2, "dscore(c) = 2 (got " + str(sc) + ")");
  o.require(sd == 3, "dscore(d) = 3 (got " + str(sd) + ")");
  std::string others;
  bool all_below = true;
  for (CandidateId x = 0; x < m.candidate_count(); ++x) {
    if (x == out.c || x == out.d) continue;
    const auto s = dodgson_score(DodgsonTriple{m, x});
    all_below = all_below && s < 2;
    others += (others.empty() ? "" : " ") + m.name(x) + "=" + str(s);
  }
  o.require(all_below, "dscore(e) < 2 for every other candidate (" + others + ")");
  const std::vector<std::string> expected{
      "c > b > a > e > f > d", "a > c > b > e > f > d", "b > a > c > e > f > d", "f > e > d > a > b > c",
      "d > e > f > a > b > c", "d > c > e > f > a > b", "d > c > e > f > a > b", "c > d > e > f > a > b"};
  bool verbatim = m.voter_count() == expected.size();
  for (std::size_t i = 0; verbatim && i < expected.size(); ++i) {
    verbatim = format_ballot(m, m.voters[i].ballot) == expected[i];
  }
  o.require(verbatim, "merge reproduces the eight ballots");
  o.require(verify_merge_properties(out, tc, td), "verify_merge_properties");
  return o;
}

// 3: Borda manipulation story.
Outcome borda_story() {
  Outcome o;
  std::string text = "candidates: a b c\n";
  for (int i = 0; i < 5; ++i) text += "ballot: a > b > c\n";
  for (int i = 0; i < 5; ++i) text += "ballot: b > a > c\n";
  text += "ballot: c > a > b\n";
  const auto e = election_of(text);
  const auto borda = family_vector(RuleFamily::Borda, 3);
  o.require(scores(e, borda) == ScoreTable{16, 15, 2}, "scores 16/15/2");
  o.require(scoring_winners(e, borda) == WinnerSet{0}, "a is the unique winner");
  Election after = e;
  for (int i = 5; i < 10; ++i) after.voters[static_cast<std::size_t>(i)] = linear_voter({1, 2, 0});
  o.require(scoring_winners(after, borda) == WinnerSet{1}, "b is the unique winner after the switch to b > c > a");

  ManipulationInstance in;
  in.election = e;
  in.election.voters.erase(in.election.voters.begin() + 5, in.election.voters.begin() + 10);
  in.manipulator_weights.assign(5, 1);
  in.target = 1;
  in.alpha = borda;
  in.mode = WinnerMode::Unique;
  const auto v = manipulate_scoring_unweighted(in);
  o.require(v.yes && scoring_winners(with_manipulators(in, v.ballots), borda) == WinnerSet{1},
            "manipulate_scoring_unweighted finds a witness");
  return o;
}

// 4: weighted plurality bribery example.
Outcome figure_two() {
  Outcome o;
  BriberyInstance in;
  in.election = election_of(
      "candidates: a b c\n"
      "ballot: 1 1 : b > a > c\nballot: 2 1 : b > a > c\nballot: 2 1 : b > a > c\nballot: 2 1 : b > a > c\n"
      "ballot: 3 1 : a > b > c\nballot: 3 1 : a > b > c\n");
  in.target = 2;
  in.budget = 2;
  in.variant = BriberyVariant::Weighted;
  const auto plurality = family_vector(RuleFamily::Plurality, 3);
  const auto v = bribe_plurality_weighted(in);
  std::vector<Weight> ws;
  for (auto i : v.bribed) ws.push_back(in.election.voters[i].weight);
  std::sort(ws.begin(), ws.end());
  o.require(v.yes, "yes at k = 2");
  o.require(ws == std::vector<Weight>{2, 3}, "witness bribes one weight-3 and one weight-2 voter");
  o.require(v.yes && wins(scoring_winners(apply_bribery(in, v), plurality), 2, WinnerMode::CoWinner),
            "witness makes c a winner");
  const BriberyVerdict heaviest{true, {4, 5}, {LinearOrder{{2, 0, 1}}, LinearOrder{{2, 0, 1}}}, 2};
  const auto w = scoring_winners(apply_bribery(in, heaviest), plurality);
  o.require(!wins(w, 2, WinnerMode::CoWinner), "bribing both weight-3 voters fails");
  return o;
}

// 5: dichotomies. Expected values come from the tail predicates.
Outcome dichotomies() {
  Outcome o;
  const std::vector<std::vector<Score>> table{{1, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {3, 1, 1}};
  int checked = 0;
  for (const auto& a : table) {
    const bool tail = std::all_of(a.begin() + 1, a.end(), [&](Score s) { return s == a[1]; });
    const bool flat = std::all_of(a.begin(), a.end(), [&](Score s) { return s == a[0]; });
    const auto p = [](bool easy) { return easy ? Complexity::PolynomialTime : Complexity::NPComplete; };
    const ScoringVector alpha(a);
    std::string name;
    for (auto x : a) name += (name.empty() ? "" : ",") + str(x);
    const bool ok = classify_manipulation(alpha) == p(tail) &&
                    classify_bribery(alpha, BriberyVariant::Weighted) == p(tail) &&
                    classify_bribery(alpha, BriberyVariant::WeightedPriced) == p(flat);
    if (!ok) o.require(false, "classification of (" + name + ")");
    ++checked;
  }
  o.require(checked == 6, str(checked) + " vectors classified for manipulation, weighted and weighted-priced bribery");
  return o;
}

// 6: the control table, transcribed row by row.
Outcome control_table() {
  Outcome o;
  // Rows: control type; columns: plurality C/D, Condorcet C/D, approval C/D.
  // Partition cells are "TE/TP".
  const std::vector<std::pair<ControlType, std::vector<std::string>>> rows{
      {ControlType::AddCandidates, {"R", "R", "I", "V", "I", "V"}},
      {ControlType::DeleteCandidates, {"R", "R", "V", "I", "V", "I"}},
      {ControlType::PartitionCandidates, {"R/R", "R/R", "V/V", "I/I", "V/I", "I/I"}},
      {ControlType::RunoffPartitionCandidates, {"R/R", "R/R", "V/V", "I/I", "V/I", "I/I"}},
      {ControlType::AddVoters, {"V", "V", "R", "V", "R", "V"}},
      {ControlType::DeleteVoters, {"V", "V", "R", "V", "R", "V"}},
      {ControlType::PartitionVoters, {"V/R", "V/R", "R/R", "V/V", "R/R", "V/V"}},
  };
  const auto letter = [](Classification c) {
    return c == Classification::Immune ? 'I' : c == Classification::Resistant ? 'R' : 'V';
  };
  const VotingSystem systems[] = {VotingSystem::Plurality, VotingSystem::Condorcet, VotingSystem::Approval};
  int entries = 0;
  int wrong = 0;
  for (const auto& [type, cells] : rows) {
    for (int col = 0; col < 6; ++col) {
      ControlSpec spec{type, col % 2 == 0 ? ControlMode::Constructive : ControlMode::Destructive, {}, systems[col / 2]};
      const auto& cell = cells[static_cast<std::size_t>(col)];
      if (is_partition_type(type)) {
        for (int t = 0; t < 2; ++t) {
          spec.tie = t == 0 ? TieRule::TE : TieRule::TP;
          ++entries;
          if (letter(classify_control(spec)) != cell[t == 0 ? 0 : 2]) ++wrong;
        }
      } else {
        ++entries;
        if (letter(classify_control(spec)) != cell[0]) ++wrong;
      }
    }
  }
  o.require(entries == 60 && all_control_specs().size() == 60, str(entries) + " entries");
  o.require(wrong == 0, "all entries match (" + str(wrong) + " differ)");
  return o;
}

// 7: immunity. Every multiset of ballots over up to 3 base candidates plus up
// to 2 spoilers and up to 4 voters; the target is candidate 0 and spoilers
// take the highest ids, which covers every instance up to relabeling. The
// immune entries are all candidate controls, so the voter pool plays no part.
Outcome immunity() {
  Outcome o;
  std::vector<ControlSpec> immune;
  for (const auto& s : all_control_specs()) {
    if (classify_control(s) == Classification::Immune) immune.push_back(s);
  }
  std::uint64_t instances = 0;
  std::uint64_t counterexamples = 0;
  std::string first;
  for (VotingSystem system : {VotingSystem::Condorcet, VotingSystem::Approval}) {
    std::vector<ControlSpec> specs;
    for (const auto& s : immune) {
      if (s.system == system) specs.push_back(s);
    }
    for (int base = 1; base <= 3; ++base) {
      for (int spoilers = 0; spoilers <= 2; ++spoilers) {
        const int m = base + spoilers;
        std::vector<Ballot> ballots;
        if (system == VotingSystem::Approval) {
          for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<bool> a(static_cast<std::size_t>(m));
            for (int x = 0; x < m; ++x) a[static_cast<std::size_t>(x)] = ((mask >> x) & 1) != 0;
            ballots.emplace_back(ApprovalVector{a});
          }
        } else {
          std::vector<CandidateId> r(static_cast<std::size_t>(m));
          std::iota(r.begin(), r.end(), 0);
          do {
            ballots.emplace_back(LinearOrder{r});
          } while (std::next_permutation(r.begin(), r.end()));
        }
        std::vector<std::string> names;
        for (int x = 0; x < m; ++x) names.emplace_back(1, static_cast<char>('a' + x));
        ControlInstance in;
        in.election = make_election(names);
        for (int k = 0; k < spoilers; ++k) in.spoilers.push_back(base + k);
        in.target = 0;
        in.limit = m;
        std::vector<CandidateId> base_ids(static_cast<std::size_t>(base));
        std::iota(base_ids.begin(), base_ids.end(), 0);
        for (int n = 0; n <= 4; ++n) {
          std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
          while (true) {
            in.election.voters.clear();
            for (auto p : pick) in.election.voters.push_back(Voter{ballots[p], 1, 1});
            std::vector<std::size_t> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            const auto before = run_subelection(system, in.election, base_ids, all);
            const bool unique_before = before.size() == 1 && before.front() == 0;
            for (const auto& spec : specs) {
              if (spec.type == ControlType::AddCandidates && spoilers == 0) continue;
              ++instances;
              const bool met_before = spec.mode == ControlMode::Constructive ? unique_before : !unique_before;
              if (met_before) continue;
              if (bf_control(spec, in).yes) {
                if (counterexamples++ == 0) {
                  first = std::string(to_string(spec.system)) + " " + std::string(to_string(spec.type)) + " " +
                          std::string(to_string(spec.mode)) + "\n" +
                          serialize_election(ElectionFile{in.election, in.spoilers, {}});
                }
              }
            }
            // Next nondecreasing index sequence.
            int i = n - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == ballots.size()) --i;
            if (i < 0) break;
            const auto v = pick[static_cast<std::size_t>(i)] + 1;
            for (int j = i; j < n; ++j) pick[static_cast<std::size_t>(j)] = v;
          }
        }
      }
    }
  }
  o.require(immune.size() == 14, str(immune.size()) + " immune entries");
  o.require(counterexamples == 0, str(counterexamples) + " counterexamples in " + str(instances) + " instances" +
                                      (first.empty() ? "" : ", first: " + first));
  return o;
}

// 8: optimized engines against the oracles.
Outcome oracle_equivalence() {
  Outcome o;
  for (const char* family : {"dodgson", "young", "kemeny", "manipulation", "bribery", "control"}) {
    const auto r = check_equivalence(family);
    std::ostringstream s;
    s << family << " " << r.instances << " instances " << r.mismatches << " mismatches";
    if (r.mismatches > 0) s << " [" << r.first_mismatch << "]";
    o.require(r.instances >= 10'000 && r.mismatches == 0, s.str());
  }
  return o;
}

// 9: partition reduction against brute-force equal split.
Outcome partition_reduction() {
  Outcome o;
  const ExhaustionBound bound{2, 10, 6, 30};
  std::uint64_t instances = 0;
  std::uint64_t wrong = 0;
  std::uint64_t yes = 0;
  std::string first;
  for (int n = 1; n <= 10; ++n) {
    std::vector<Weight> xs(static_cast<std::size_t>(n), 1);
    while (true) {
      const Weight sum = std::accumulate(xs.begin(), xs.end(), Weight{0});
      bool split = false;
      for (std::uint32_t mask = 0; mask < (1U << n) && !split; ++mask) {
        Weight part = 0;
        for (int i = 0; i < n; ++i) {
          if ((mask >> i) & 1U) part += xs[static_cast<std::size_t>(i)];
        }
        split = 2 * part == sum;
      }
      const bool answer = bf_bribery(reduce_partition_to_priced_bribery(xs), bound).yes;
      ++instances;
      yes += split;
      if (answer != split && wrong++ == 0) {
        for (auto x : xs) first += str(x) + " ";
      }
      int i = n - 1;
      while (i >= 0 && xs[static_cast<std::size_t>(i)] == 6) --i;
      if (i < 0) break;
      const Weight v = xs[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < n; ++j) xs[static_cast<std::size_t>(j)] = v;
    }
  }
  o.require(instances == 8007, str(instances) + " multisets (" + str(yes) + " splittable)");
  o.require(wrong == 0, str(wrong) + " disagreements" + (first.empty() ? "" : ", first: " + first));
  return o;
}

// 10: the three weighted-priced plurality engines agree.
Outcome encodings() {
  Outcome o;
  const auto r = check_equivalence("bribery-encodings");
  o.require(r.instances > 0 && r.mismatches == 0,
            str(static_cast<std::int64_t>(r.instances)) + " plurality instances of the bribery sample, " +
                str(static_cast<std::int64_t>(r.mismatches)) + " disagreements" +
                (r.mismatches ? " [" + r.first_mismatch + "]" : ""));
  return o;
}

// 11: parse/serialize round trip on generated files.
Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(11);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int failures = 0;
  std::string first;
  for (int k = 0; k < 1000; ++k) {
    const int m = uni(0, 7);
    std::vector<std::string> names;
    for (int x = 0; x < m; ++x) {
      std::string name;
      const int len = uni(1, 6);
      for (int j = 0; j < len; ++j) name += "abcXYZ09_-.'"[uni(0, 11)];
      name += std::to_string(x);
      names.push_back(name);
    }
    auto voter = [&] {
      const Weight w = uni(1, 1000);
      const Weight p = uni(0, 1000);
      if (m > 0 && uni(0, 1) == 0) {
        std::vector<CandidateId> r(static_cast<std::size_t>(m));
        std::iota(r.begin(), r.end(), 0);
        std::shuffle(r.begin(), r.end(), rng);
        return linear_voter(r, w, p);
      }
      std::vector<bool> a(static_cast<std::size_t>(m));
      for (int x = 0; x < m; ++x) a[static_cast<std::size_t>(x)] = uni(0, 1) == 1;
      return approval_voter(a, w, p);
    };
    ElectionFile f;
    std::vector<Voter> vs;
    for (int i = uni(0, 12); i > 0; --i) vs.push_back(voter());
    f.election = make_election(names, vs);
    for (int x = 0; x < m; ++x) {
      if (uni(0, 3) == 0) f.spoilers.push_back(x);
    }
    std::shuffle(f.spoilers.begin(), f.spoilers.end(), rng);
    for (int i = uni(0, 3) == 0 ? uni(1, 4) : 0; i > 0; --i) f.voter_pool.push_back(voter());
    const auto text = serialize_election(f);
    bool ok = false;
    try {
      const auto back = parse_election(text);
      ok = back == f && serialize_election(back) == text;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok && failures++ == 0) first = text;
  }
  o.require(failures == 0, str(failures) + " of 1000 files fail to round-trip" + (first.empty() ? "" : ": " + first));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double seconds_limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Queen's court Dodgson scores", 1, queens_court},
      {2, "merged election", 5, merged_election},
      {3, "Borda manipulation", 1, borda_story},
      {4, "weighted plurality bribery example", 1, figure_two},
      {5, "scoring-vector dichotomies", 1, dichotomies},
      {6, "control classification table", 1, control_table},
      {7, "immunity suite", 600, immunity},
      {8, "oracle equivalence", 900, oracle_equivalence},
      {9, "partition reduction", 120, partition_reduction},
      {10, "unary and binary weighted-priced engines", 900, encodings},
      {11, "file round trip", 10, round_trip},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.seconds_limit) {
      out.pass = false;
      out.detail += "; took longer than " + str(static_cast<std::int64_t>(c.seconds_limit)) + " s";
    }
    all = all && out.pass;
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (out.pass ? "PASS" : "FAIL") << " [" << std::fixed
              << std::setprecision(2) << secs << " s] " << out.detail << std::endl;
  }
  return all ? 0 : 1;
}

#include "electsys/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "electsys/bribery.hpp"
#include "electsys/control.hpp"
#include "electsys/dodgson.hpp"
#include "electsys/election_file.hpp"
#include "electsys/equivalence.hpp"
#include "electsys/kemeny_young.hpp"
#include "electsys/manipulation.hpp"

namespace electsys {
namespace {

struct Args {
  std::string file;
  std::string file2;
  std::string rule = "plurality";
  std::string alpha;
  int k = 1;
  std::string target;
  std::string mode;
  std::string tie;
  std::string variant = "plain";
  std::string encoding = "binary";
  std::string goal = "constructive";
  std::string type;
  std::string system = "plurality";
  std::string problem;
  std::string manipulators;
  std::string module = "all";
  std::string bound = "default";
  std::string write_result;
  std::string c_name;
  std::string d_name;
  std::int64_t budget = 0;
  std::int64_t at_most = -1;
  int limit = 0;
  int s_count = 0;
  int t_count = 0;
  std::uint64_t instances = 0;
  std::uint64_t seed = EquivalenceOptions{}.seed;
};

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput(std::string(what) + ": '" + tok + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

CandidateId candidate(const Election& e, const std::string& name) {
  if (name.empty()) throw InvalidInput("--target is required");
  if (auto id = e.find(name)) return *id;
  throw InvalidInput("unknown candidate '" + name + "'");
}

std::string names(const Election& e, const std::vector<CandidateId>& ids) {
  if (ids.empty()) return "none";
  std::string out;
  for (CandidateId c : ids) {
    if (!out.empty()) out += ' ';
    out += e.name(c);
  }
  return out;
}

void kv(std::ostream& out, std::string_view key, const std::string& value) { out << key << ": " << value << '\n'; }

WinnerMode parse_mode(const std::string& s, WinnerMode fallback) {
  if (s.empty()) return fallback;
  if (s == "cowinner") return WinnerMode::CoWinner;
  if (s == "unique") return WinnerMode::Unique;
  throw InvalidInput("--mode must be cowinner or unique");
}

struct RuleChoice {
  BallotRule rule = BallotRule::Scoring;
  ScoringVector alpha;
  std::string name;
};

RuleChoice resolve_rule(const Args& a, int m) {
  RuleChoice r;
  if (!a.alpha.empty()) {
    r.alpha = ScoringVector(parse_ints(a.alpha, "--alpha"));
    if (static_cast<int>(r.alpha.size()) != m) {
      throw DimensionMismatch("--alpha has " + std::to_string(r.alpha.size()) + " entries for " + std::to_string(m) +
                              " candidates");
    }
    r.name = "scoring " + a.alpha;
    return r;
  }
  r.name = a.rule;
  if (a.rule == "plurality") r.alpha = family_vector(RuleFamily::Plurality, m);
  else if (a.rule == "veto") r.alpha = family_vector(RuleFamily::Veto, m);
  else if (a.rule == "borda") r.alpha = family_vector(RuleFamily::Borda, m);
  else if (a.rule == "k-approval") r.alpha = family_vector(RuleFamily::KApproval, m, a.k);
  else if (a.rule == "approval") r.rule = BallotRule::Approval;
  else throw InvalidInput("unknown rule '" + a.rule + "'");
  return r;
}

ElectionFile load(const std::string& path) {
  if (path.empty()) throw InvalidInput("an election file is required");
  return read_election_file(path);
}

void write_result(const Args& a, const ElectionFile& f) {
  if (a.write_result.empty()) return;
  std::ofstream out(a.write_result, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + a.write_result + "'");
  out << serialize_election(f);
}

void score_lines(std::ostream& out, const Election& e, const std::vector<Score>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) kv(out, "score " + e.name(static_cast<CandidateId>(i)), std::to_string(table[i]));
}

std::string weak_order_text(const Election& e, const WeakOrder& w) {
  std::string out;
  for (std::size_t l = 0; l < w.levels.size(); ++l) {
    if (l > 0) out += " > ";
    for (std::size_t i = 0; i < w.levels[l].size(); ++i) {
      if (i > 0) out += " = ";
      out += e.name(w.levels[l][i]);
    }
  }
  return out;
}

std::string optional_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "none"; }

int cmd_winners(const Args& a, std::ostream& out) {
  const Election e = load(a.file).election;
  kv(out, "command", "winners");
  kv(out, "candidates", std::to_string(e.candidate_count()));
  kv(out, "voters", std::to_string(e.voter_count()));
  WinnerSet winners;
  if (a.rule == "condorcet" && a.alpha.empty()) {
    kv(out, "rule", "condorcet");
    if (auto c = condorcet_winner(e)) winners = {*c};
  } else if (a.rule == "dodgson" && a.alpha.empty()) {
    kv(out, "rule", "dodgson");
    for (CandidateId c = 0; c < e.candidate_count(); ++c) {
      std::string s;
      try {
        s = std::to_string(dodgson_score(DodgsonTriple{e, c}));
      } catch (const Unreachable&) {
        s = "unreachable";
      }
      kv(out, "score " + e.name(c), s);
    }
    winners = dodgson_winners(e);
  } else if (a.rule == "young" && a.alpha.empty()) {
    kv(out, "rule", "young");
    for (CandidateId c = 0; c < e.candidate_count(); ++c) kv(out, "score " + e.name(c), optional_text(young_score(e, c)));
    winners = young_winners(e);
  } else if (a.rule == "kemeny" && a.alpha.empty()) {
    kv(out, "rule", "kemeny");
    for (const auto& w : kemeny_consensuses(e)) kv(out, "consensus", weak_order_text(e, w));
    winners = kemeny_winners(e);
  } else {
    const auto r = resolve_rule(a, e.candidate_count());
    kv(out, "rule", r.name);
    const auto table = r.rule == BallotRule::Approval ? approval_scores(e) : scores(e, r.alpha);
    score_lines(out, e, table);
    winners = argmax(table);
  }
  kv(out, "winners", names(e, winners));
  kv(out, "unique", winners.size() == 1 ? "yes" : "no");
  return kExitOk;
}

int cmd_score(const Args& a, std::ostream& out) {
  const Election e = load(a.file).election;
  const CandidateId c = candidate(e, a.target);
  kv(out, "command", "score");
  kv(out, "target", e.name(c));
  if (a.rule == "dodgson" && a.alpha.empty()) {
    kv(out, "rule", "dodgson");
    try {
      kv(out, "score", std::to_string(dodgson_score(DodgsonTriple{e, c})));
    } catch (const Unreachable&) {
      kv(out, "score", "unreachable");
    }
  } else if (a.rule == "young" && a.alpha.empty()) {
    kv(out, "rule", "young");
    kv(out, "score", optional_text(young_score(e, c)));
  } else {
    const auto r = resolve_rule(a, e.candidate_count());
    kv(out, "rule", r.name);
    const auto table = r.rule == BallotRule::Approval ? approval_scores(e) : scores(e, r.alpha);
    kv(out, "score", std::to_string(table[static_cast<std::size_t>(c)]));
  }
  return kExitOk;
}

int cmd_dodgson(const Args& a, std::ostream& out) {
  const Election e = load(a.file).election;
  kv(out, "command", "dodgson");
  if (a.target.empty()) {
    for (CandidateId c = 0; c < e.candidate_count(); ++c) {
      std::string s;
      try {
        s = std::to_string(dodgson_score(DodgsonTriple{e, c}));
      } catch (const Unreachable&) {
        s = "unreachable";
      }
      kv(out, "score " + e.name(c), s);
    }
    kv(out, "winners", names(e, dodgson_winners(e)));
    return kExitOk;
  }
  const DodgsonTriple t{e, candidate(e, a.target)};
  kv(out, "target", a.target);
  if (a.at_most >= 0) {
    const bool yes = decide_dodgson_score(t, a.at_most);
    kv(out, "k", std::to_string(a.at_most));
    kv(out, "verdict", yes ? "yes" : "no");
    return yes ? kExitOk : kExitNo;
  }
  try {
    kv(out, "score", std::to_string(dodgson_score(t)));
  } catch (const Unreachable&) {
    kv(out, "score", "unreachable");
  }
  return kExitOk;
}

int cmd_young(const Args& a, std::ostream& out) {
  const Election e = load(a.file).election;
  kv(out, "command", "young");
  if (!a.target.empty()) {
    kv(out, "target", a.target);
    kv(out, "score", optional_text(young_score(e, candidate(e, a.target))));
    return kExitOk;
  }
  for (CandidateId c = 0; c < e.candidate_count(); ++c) kv(out, "score " + e.name(c), optional_text(young_score(e, c)));
  kv(out, "winners", names(e, young_winners(e)));
  return kExitOk;
}

int cmd_kemeny(const Args& a, std::ostream& out) {
  const Election e = load(a.file).election;
  kv(out, "command", "kemeny");
  const auto cons = kemeny_consensuses(e);
  if (!cons.empty()) kv(out, "distance", std::to_string(kemeny_distance(cons.front(), e)));
  for (const auto& w : cons) kv(out, "consensus", weak_order_text(e, w));
  kv(out, "winners", names(e, kemeny_winners(e)));
  return kExitOk;
}

int cmd_manipulate(const Args& a, std::ostream& out) {
  ManipulationInstance in;
  in.election = load(a.file).election;
  in.target = candidate(in.election, a.target);
  const auto r = resolve_rule(a, in.election.candidate_count());
  in.rule = r.rule;
  in.alpha = r.alpha;
  in.mode = parse_mode(a.mode, WinnerMode::CoWinner);
  if (!a.manipulators.empty()) in.manipulator_weights = parse_ints(a.manipulators, "--manipulators");
  kv(out, "command", "manipulate");
  kv(out, "rule", r.name);
  kv(out, "target", a.target);
  kv(out, "mode", std::string(to_string(in.mode)));
  kv(out, "manipulators", std::to_string(in.manipulator_weights.size()));
  if (in.rule == BallotRule::Scoring) kv(out, "complexity", std::string(to_string(classify_manipulation(in.alpha))));
  const auto v = manipulate(in);
  kv(out, "verdict", v.yes ? "yes" : "no");
  if (!v.yes) return kExitNo;
  out << "witness:\n";
  for (std::size_t i = 0; i < v.ballots.size(); ++i) {
    out << "  manipulator " << i << " (weight " << in.manipulator_weights[i]
        << "): " << format_ballot(in.election, v.ballots[i]) << '\n';
  }
  const Election after = with_manipulators(in, v.ballots);
  kv(out, "winners", names(after, rule_winners(after, in.rule, in.alpha)));
  write_result(a, ElectionFile{after, {}, {}});
  return kExitOk;
}

BriberyVariant parse_variant(const std::string& s) {
  for (auto v : {BriberyVariant::Plain, BriberyVariant::Weighted, BriberyVariant::Priced, BriberyVariant::WeightedPriced}) {
    if (s == to_string(v)) return v;
  }
  throw InvalidInput("--variant must be plain, weighted, priced or weighted_priced");
}

BriberyEncoding parse_encoding(const std::string& s) {
  for (auto e : {BriberyEncoding::Binary, BriberyEncoding::WeightsUnary, BriberyEncoding::PricesUnary}) {
    if (s == to_string(e)) return e;
  }
  throw InvalidInput("--encoding must be binary, unary-weights or unary-prices");
}

int cmd_bribe(const Args& a, std::ostream& out) {
  BriberyInstance in;
  in.election = load(a.file).election;
  in.target = candidate(in.election, a.target);
  const auto r = resolve_rule(a, in.election.candidate_count());
  in.rule = r.rule;
  in.alpha = r.alpha;
  in.budget = a.budget;
  in.variant = parse_variant(a.variant);
  in.encoding = parse_encoding(a.encoding);
  in.mode = parse_mode(a.mode, WinnerMode::CoWinner);
  kv(out, "command", "bribe");
  kv(out, "rule", r.name);
  kv(out, "target", a.target);
  kv(out, "mode", std::string(to_string(in.mode)));
  kv(out, "variant", std::string(to_string(in.variant)));
  kv(out, "encoding", std::string(to_string(in.encoding)));
  kv(out, "budget", std::to_string(in.budget));
  const auto v = bribe(in);
  kv(out, "verdict", v.yes ? "yes" : "no");
  if (!v.yes) return kExitNo;
  kv(out, "cost", std::to_string(v.cost));
  out << "witness:\n";
  for (std::size_t i = 0; i < v.bribed.size(); ++i) {
    const auto& voter = in.election.voters[v.bribed[i]];
    out << "  voter " << v.bribed[i] << " (weight " << voter.weight << ", price " << voter.price
        << "): " << format_ballot(in.election, v.new_ballots[i]) << '\n';
  }
  const Election after = apply_bribery(in, v);
  kv(out, "winners", names(after, rule_winners(after, in.rule, in.alpha)));
  write_result(a, ElectionFile{after, {}, {}});
  return kExitOk;
}

ControlSpec parse_spec(const Args& a) {
  ControlSpec spec;
  bool found = false;
  for (auto t : {ControlType::AddCandidates, ControlType::DeleteCandidates, ControlType::PartitionCandidates,
                 ControlType::RunoffPartitionCandidates, ControlType::AddVoters, ControlType::DeleteVoters,
                 ControlType::PartitionVoters}) {
    if (a.type == to_string(t)) {
      spec.type = t;
      found = true;
    }
  }
  if (!found) throw InvalidInput("--type must name a control type, e.g. add-candidates or partition-voters");
  if (a.goal == "constructive") spec.mode = ControlMode::Constructive;
  else if (a.goal == "destructive") spec.mode = ControlMode::Destructive;
  else throw InvalidInput("--goal must be constructive or destructive");
  if (a.system == "plurality") spec.system = VotingSystem::Plurality;
  else if (a.system == "condorcet") spec.system = VotingSystem::Condorcet;
  else if (a.system == "approval") spec.system = VotingSystem::Approval;
  else throw InvalidInput("--system must be plurality, condorcet or approval");
  if (a.tie == "TE") spec.tie = TieRule::TE;
  else if (a.tie == "TP") spec.tie = TieRule::TP;
  else if (!a.tie.empty()) throw InvalidInput("--tie must be TE or TP");
  validate_spec(spec);
  return spec;
}

std::string spec_text(const ControlSpec& spec) {
  std::string s = std::string(to_string(spec.system)) + " " + std::string(to_string(spec.type)) + " " +
                  std::string(to_string(spec.mode));
  if (spec.tie) s += " " + std::string(to_string(*spec.tie));
  return s;
}

std::string index_list(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (std::size_t x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

int cmd_control(const Args& a, std::ostream& out) {
  const ControlSpec spec = parse_spec(a);
  const ElectionFile f = load(a.file);
  ControlInstance in{f.election, f.spoilers, f.voter_pool, candidate(f.election, a.target), a.limit};
  kv(out, "command", "control");
  kv(out, "problem", spec_text(spec));
  kv(out, "classification", std::string(to_string(classify_control(spec))));
  kv(out, "target", a.target);
  kv(out, "limit", std::to_string(in.limit));
  const auto v = control_decide(spec, in);
  kv(out, "engine", v.polynomial ? "polynomial" : "exhaustive");
  kv(out, "verdict", v.yes ? "yes" : "no");
  if (!v.yes) return kExitNo;
  const Election& e = in.election;
  const auto base = base_candidates(in);
  out << "witness:\n";
  std::vector<CandidateId> final_candidates = base;
  std::vector<const Voter*> final_voters;
  for (const auto& voter : e.voters) final_voters.push_back(&voter);
  switch (spec.type) {
    case ControlType::AddCandidates:
      out << "  add candidates: " << names(e, v.action.candidates) << '\n';
      final_candidates.insert(final_candidates.end(), v.action.candidates.begin(), v.action.candidates.end());
      std::sort(final_candidates.begin(), final_candidates.end());
      break;
    case ControlType::DeleteCandidates:
      out << "  delete candidates: " << names(e, v.action.candidates) << '\n';
      std::erase_if(final_candidates, [&](CandidateId c) {
        return std::find(v.action.candidates.begin(), v.action.candidates.end(), c) != v.action.candidates.end();
      });
      break;
    case ControlType::AddVoters:
      out << "  add pool voters: " << index_list(v.action.voters) << '\n';
      for (std::size_t i : v.action.voters) final_voters.push_back(&in.voter_pool[i]);
      break;
    case ControlType::DeleteVoters: {
      out << "  delete voters: " << index_list(v.action.voters) << '\n';
      final_voters.clear();
      for (std::size_t i = 0; i < e.voters.size(); ++i) {
        if (std::find(v.action.voters.begin(), v.action.voters.end(), i) == v.action.voters.end()) {
          final_voters.push_back(&e.voters[i]);
        }
      }
      break;
    }
    case ControlType::PartitionCandidates:
    case ControlType::RunoffPartitionCandidates:
    case ControlType::PartitionVoters: {
      if (spec.type == ControlType::PartitionVoters) {
        out << "  first voter group: " << index_list(v.action.voters) << '\n';
      } else {
        out << "  first candidate group: " << names(e, v.action.candidates) << '\n';
      }
      final_candidates = apply_partition(spec, in, v.action).candidates;
      out << "  final round: " << names(e, final_candidates) << '\n';
      break;
    }
  }
  kv(out, "final winners", names(e, v.final_winners));
  write_result(a, ElectionFile{restrict_election(e, final_candidates, final_voters), {}, {}});
  return kExitOk;
}

int cmd_classify(const Args& a, std::ostream& out) {
  kv(out, "command", "classify");
  kv(out, "problem", a.problem);
  if (a.problem == "control") {
    const auto spec = parse_spec(a);
    kv(out, "control", spec_text(spec));
    kv(out, "classification", std::string(to_string(classify_control(spec))));
    return kExitOk;
  }
  if (a.alpha.empty()) throw InvalidInput("--alpha is required");
  const ScoringVector alpha(parse_ints(a.alpha, "--alpha"));
  kv(out, "alpha", a.alpha);
  if (a.problem == "manipulation") {
    kv(out, "complexity", std::string(to_string(classify_manipulation(alpha))));
  } else if (a.problem == "bribery") {
    const auto variant = parse_variant(a.variant);
    kv(out, "variant", std::string(to_string(variant)));
    kv(out, "complexity", std::string(to_string(classify_bribery(alpha, variant))));
  } else {
    throw InvalidInput("--problem must be manipulation, bribery or control");
  }
  return kExitOk;
}

int cmd_oracle_check(const Args& a, std::ostream& out) {
  EquivalenceOptions opts;
  opts.seed = a.seed;
  if (a.bound == "small") {
    opts.bound = ExhaustionBound{4, 4, 3, 4};
    opts.instances = 500;
  } else if (a.bound != "default") {
    throw InvalidInput("--bound must be small or default");
  }
  if (a.instances > 0) opts.instances = a.instances;
  std::vector<std::string> families;
  if (a.module == "all") {
    families = equivalence_families();
  } else {
    const auto known = equivalence_families();
    if (std::find(known.begin(), known.end(), a.module) == known.end()) {
      throw InvalidInput("unknown module '" + a.module + "'");
    }
    families = {a.module};
  }
  kv(out, "command", "oracle-check");
  kv(out, "bound", a.bound);
  kv(out, "seed", std::to_string(opts.seed));
  bool ok = true;
  for (const auto& fam : families) {
    const auto r = check_equivalence(fam, opts);
    std::ostringstream line;
    line << (r.passed() ? "PASS" : "FAIL") << " instances=" << r.instances << " mismatches=" << r.mismatches
         << " seconds=" << std::fixed << std::setprecision(2) << r.seconds;
    kv(out, fam, line.str());
    if (!r.passed()) {
      ok = false;
      std::istringstream lines(r.first_mismatch);
      std::string l;
      out << "first mismatch:\n";
      while (std::getline(lines, l)) out << "  " << l << '\n';
    }
  }
  kv(out, "result", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitNo;
}

int cmd_merge(const Args& a, std::ostream& out) {
  const Election ec = load(a.file).election;
  const Election ed = load(a.file2).election;
  const DodgsonTriple tc{ec, candidate(ec, a.c_name)};
  const DodgsonTriple td{ed, candidate(ed, a.d_name)};
  const auto m = merge(tc, td, a.s_count, a.t_count);
  kv(out, "command", "merge");
  kv(out, "c", m.merged_election.name(m.c));
  kv(out, "d", m.merged_election.name(m.d));
  kv(out, "candidates", std::to_string(m.merged_election.candidate_count()));
  kv(out, "voters", std::to_string(m.merged_election.voter_count()));
  kv(out, "verified", "yes");
  const ElectionFile f{m.merged_election, {}, {}};
  if (!a.write_result.empty()) {
    write_result(a, f);
    return kExitOk;
  }
  out << "election:\n";
  std::istringstream lines(serialize_election(f));
  std::string l;
  while (std::getline(lines, l)) out << "  " << l << '\n';
  return kExitOk;
}

void rule_options(CLI::App* sub, Args& a) {
  sub->add_option("--rule", a.rule, "plurality, veto, borda, k-approval or approval");
  sub->add_option("--alpha", a.alpha, "explicit scoring vector, e.g. 2,1,0");
  sub->add_option("--k", a.k, "k for k-approval");
}

}  // namespace

Election restrict_election(const Election& e, const std::vector<CandidateId>& candidates,
                           const std::vector<const Voter*>& voters) {
  std::vector<CandidateId> keep = candidates;
  std::sort(keep.begin(), keep.end());
  std::vector<CandidateId> new_id(e.candidates.size(), -1);
  Election out;
  for (CandidateId c : keep) {
    new_id[static_cast<std::size_t>(c)] = out.candidate_count();
    out.candidates.push_back(Candidate{out.candidate_count(), e.name(c)});
  }
  for (const Voter* v : voters) {
    Voter nv = *v;
    if (v->is_linear()) {
      std::vector<CandidateId> r;
      for (CandidateId c : v->order().ranking) {
        if (new_id[static_cast<std::size_t>(c)] >= 0) r.push_back(new_id[static_cast<std::size_t>(c)]);
      }
      nv.ballot = LinearOrder{std::move(r)};
    } else {
      std::vector<bool> ap;
      for (CandidateId c : keep) ap.push_back(v->approval().approvals[static_cast<std::size_t>(c)]);
      nv.ballot = ApprovalVector{std::move(ap)};
    }
    out.voters.push_back(std::move(nv));
  }
  validate(out);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Winner determination, manipulation, bribery and control for elections", "electsys"};
  app.require_subcommand(1);
  Args a;

  auto* winners = app.add_subcommand("winners", "winners and scores under a rule");
  winners->add_option("file", a.file, "election file")->required();
  winners->add_option("--rule", a.rule, "plurality, veto, borda, k-approval, approval, condorcet, dodgson, young or kemeny");
  winners->add_option("--alpha", a.alpha, "explicit scoring vector, e.g. 2,1,0");
  winners->add_option("--k", a.k, "k for k-approval");

  auto* score = app.add_subcommand("score", "score of one candidate");
  score->add_option("file", a.file)->required();
  score->add_option("--rule", a.rule, "scoring rule, approval, dodgson or young");
  score->add_option("--alpha", a.alpha);
  score->add_option("--k", a.k);
  score->add_option("--target", a.target)->required();

  auto* dodgson = app.add_subcommand("dodgson", "Dodgson scores and winners");
  dodgson->add_option("file", a.file)->required();
  dodgson->add_option("--target", a.target);
  dodgson->add_option("--at-most", a.at_most, "decide whether the target's score is at most this value");

  auto* young = app.add_subcommand("young", "Young scores and winners");
  young->add_option("file", a.file)->required();
  young->add_option("--target", a.target);

  auto* kemeny = app.add_subcommand("kemeny", "Kemeny consensus rankings and winners");
  kemeny->add_option("file", a.file)->required();

  auto* manip = app.add_subcommand("manipulate", "coalitional manipulation");
  manip->add_option("file", a.file)->required();
  rule_options(manip, a);
  manip->add_option("--target", a.target)->required();
  manip->add_option("--manipulators", a.manipulators, "manipulator weights, e.g. 1,1,3");
  manip->add_option("--mode", a.mode, "cowinner (default) or unique");
  manip->add_option("--write-result", a.write_result, "write the election with the witness applied");

  auto* bribe_cmd = app.add_subcommand("bribe", "bribery");
  bribe_cmd->add_option("file", a.file)->required();
  rule_options(bribe_cmd, a);
  bribe_cmd->add_option("--target", a.target)->required();
  bribe_cmd->add_option("--budget", a.budget, "number of voters, or money for priced variants")->required();
  bribe_cmd->add_option("--variant", a.variant, "plain, weighted, priced or weighted_priced");
  bribe_cmd->add_option("--encoding", a.encoding, "binary, unary-weights or unary-prices");
  bribe_cmd->add_option("--mode", a.mode, "cowinner (default) or unique");
  bribe_cmd->add_option("--write-result", a.write_result, "write the election with the witness applied");

  auto* control = app.add_subcommand("control", "electoral control by the chair");
  control->add_option("file", a.file)->required();
  control->add_option("--system", a.system, "plurality, condorcet or approval");
  control->add_option("--type", a.type, "add-candidates, delete-candidates, partition-candidates, "
                                         "runoff-partition-candidates, add-voters, delete-voters or partition-voters")
      ->required();
  control->add_option("--goal", a.goal, "constructive or destructive");
  control->add_option("--tie", a.tie, "TE or TP (partition types)");
  control->add_option("--target", a.target)->required();
  control->add_option("--limit", a.limit, "most candidates or voters to delete or add");
  control->add_option("--write-result", a.write_result, "write the final-round election");

  auto* classify = app.add_subcommand("classify", "complexity classification");
  classify->add_option("--problem", a.problem, "manipulation, bribery or control")->required();
  classify->add_option("--alpha", a.alpha);
  classify->add_option("--variant", a.variant);
  classify->add_option("--system", a.system);
  classify->add_option("--type", a.type);
  classify->add_option("--goal", a.goal);
  classify->add_option("--tie", a.tie);

  auto* oracle = app.add_subcommand("oracle-check", "compare the engines against brute force");
  oracle->add_option("--module", a.module, "all, dodgson, young, kemeny, manipulation, bribery, bribery-encodings, control");
  oracle->add_option("--bound", a.bound, "small or default");
  oracle->add_option("--instances", a.instances, "instances per family");
  oracle->add_option("--seed", a.seed);

  auto* merge_cmd = app.add_subcommand("merge", "merge two Dodgson triples into one election");
  merge_cmd->add_option("file_c", a.file)->required();
  merge_cmd->add_option("file_d", a.file2)->required();
  merge_cmd->add_option("--c", a.c_name, "distinguished candidate of the first election")->required();
  merge_cmd->add_option("--d", a.d_name, "distinguished candidate of the second election")->required();
  merge_cmd->add_option("--s", a.s_count, "extra separator candidates after the first election");
  merge_cmd->add_option("--t", a.t_count, "extra separator candidates after the second election");
  merge_cmd->add_option("--write-result", a.write_result, "write the merged election");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "winners") return cmd_winners(a, out);
    if (name == "score") return cmd_score(a, out);
    if (name == "dodgson") return cmd_dodgson(a, out);
    if (name == "young") return cmd_young(a, out);
    if (name == "kemeny") return cmd_kemeny(a, out);
    if (name == "manipulate") return cmd_manipulate(a, out);
    if (name == "bribe") return cmd_bribe(a, out);
    if (name == "control") return cmd_control(a, out);
    if (name == "classify") return cmd_classify(a, out);
    if (name == "oracle-check") return cmd_oracle_check(a, out);
    if (name == "merge") return cmd_merge(a, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace electsys

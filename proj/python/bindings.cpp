#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "electsys/bribery.hpp"
#include "electsys/cli.hpp"
#include "electsys/control.hpp"
#include "electsys/dodgson.hpp"
#include "electsys/election_file.hpp"
#include "electsys/equivalence.hpp"
#include "electsys/kemeny_young.hpp"
#include "electsys/manipulation.hpp"

namespace py = pybind11;
using namespace electsys;

namespace {

Election from_rankings(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& rankings,
                       std::optional<std::vector<Weight>> weights) {
  Election e = make_election(names, {});
  if (weights && weights->size() != rankings.size()) throw DimensionMismatch("one weight per ballot is required");
  for (std::size_t i = 0; i < rankings.size(); ++i) {
    std::vector<CandidateId> r;
    for (const auto& n : rankings[i]) {
      auto id = e.find(n);
      if (!id) throw InvalidInput("unknown candidate '" + n + "'");
      r.push_back(*id);
    }
    e.voters.push_back(linear_voter(std::move(r), weights ? (*weights)[i] : 1));
  }
  validate(e);
  return e;
}

CandidateId id_of(const Election& e, const std::string& name) {
  if (auto id = e.find(name)) return *id;
  throw InvalidInput("unknown candidate '" + name + "'");
}

std::vector<std::string> names_of(const Election& e, const WinnerSet& ws) {
  std::vector<std::string> out;
  for (CandidateId c : ws) out.push_back(e.name(c));
  return out;
}

std::vector<std::string> ballot_names(const Election& e, const Ballot& b) {
  std::vector<std::string> out;
  if (const auto* o = std::get_if<LinearOrder>(&b)) {
    for (CandidateId c : o->ranking) out.push_back(e.name(c));
  } else {
    const auto& a = std::get<ApprovalVector>(b).approvals;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i]) out.push_back(e.name(static_cast<CandidateId>(i)));
    }
  }
  return out;
}

BallotRule rule_of(const std::optional<std::vector<Score>>& alpha) {
  return alpha ? BallotRule::Scoring : BallotRule::Approval;
}

WinnerMode mode_of(const std::string& s) {
  if (s == "cowinner") return WinnerMode::CoWinner;
  if (s == "unique") return WinnerMode::Unique;
  throw InvalidInput("mode must be 'cowinner' or 'unique'");
}

template <typename E>
E parse_enum(const std::string& s, std::initializer_list<E> values, const char* what) {
  for (E v : values) {
    if (s == to_string(v)) return v;
  }
  throw InvalidInput(std::string("unknown ") + what + " '" + s + "'");
}

ControlSpec spec_of(const std::string& system, const std::string& type, const std::string& goal,
                    const std::optional<std::string>& tie) {
  ControlSpec spec;
  spec.system = parse_enum(system, {VotingSystem::Plurality, VotingSystem::Condorcet, VotingSystem::Approval}, "system");
  spec.type = parse_enum(type,
                         {ControlType::AddCandidates, ControlType::DeleteCandidates, ControlType::PartitionCandidates,
                          ControlType::RunoffPartitionCandidates, ControlType::AddVoters, ControlType::DeleteVoters,
                          ControlType::PartitionVoters},
                         "control type");
  spec.mode = parse_enum(goal, {ControlMode::Constructive, ControlMode::Destructive}, "goal");
  if (tie) spec.tie = parse_enum(*tie, {TieRule::TE, TieRule::TP}, "tie rule");
  validate_spec(spec);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_electsys, m) {
  m.doc() = "Elections, Dodgson/Young/Kemeny scores, manipulation, bribery and control";

  // Translators are tried newest first, so the base class goes in first.
  const auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", py::make_tuple(base, py::handle(PyExc_ValueError)));
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base);
  py::register_exception<Unreachable>(m, "Unreachable", base);

  py::class_<Election>(m, "Election")
      .def(py::init(&from_rankings), py::arg("candidates"), py::arg("rankings"), py::arg("weights") = py::none())
      .def_property_readonly("candidates",
                             [](const Election& e) {
                               std::vector<std::string> out;
                               for (const auto& c : e.candidates) out.push_back(c.name);
                               return out;
                             })
      .def_property_readonly("voter_count", &Election::voter_count)
      .def("ballots",
           [](const Election& e) {
             std::vector<std::vector<std::string>> out;
             for (const auto& v : e.voters) out.push_back(ballot_names(e, v.ballot));
             return out;
           })
      .def("weights",
           [](const Election& e) {
             std::vector<Weight> out;
             for (const auto& v : e.voters) out.push_back(v.weight);
             return out;
           })
      .def("__eq__", [](const Election& a, const Election& b) { return a == b; })
      .def("__repr__", [](const Election& e) {
        return "<Election " + std::to_string(e.candidate_count()) + " candidates, " + std::to_string(e.voter_count()) +
               " voters>";
      });

  py::class_<ElectionFile>(m, "ElectionFile")
      .def_readonly("election", &ElectionFile::election)
      .def_property_readonly("spoilers", [](const ElectionFile& f) { return names_of(f.election, f.spoilers); })
      .def_property_readonly("pool_size", [](const ElectionFile& f) { return f.voter_pool.size(); });

  m.def("parse_election", &parse_election, py::arg("text"));
  m.def("serialize_election", py::overload_cast<const ElectionFile&>(&serialize_election), py::arg("file"));
  m.def("serialize_election", py::overload_cast<const Election&>(&serialize_election), py::arg("election"));

  m.def(
      "scores",
      [](const Election& e, std::vector<Score> alpha) { return scores(e, ScoringVector(std::move(alpha))); },
      py::arg("election"), py::arg("alpha"));
  m.def("approval_scores", &approval_scores, py::arg("election"));
  m.def(
      "condorcet_winner",
      [](const Election& e) -> std::optional<std::string> {
        if (auto c = condorcet_winner(e)) return e.name(*c);
        return std::nullopt;
      },
      py::arg("election"));
  m.def(
      "dodgson_score",
      [](const Election& e, const std::string& c) { return dodgson_score(DodgsonTriple{e, id_of(e, c)}); },
      py::arg("election"), py::arg("candidate"));
  m.def(
      "dodgson_winners", [](const Election& e) { return names_of(e, dodgson_winners(e)); }, py::arg("election"));
  m.def(
      "young_score", [](const Election& e, const std::string& c) { return young_score(e, id_of(e, c)); },
      py::arg("election"), py::arg("candidate"));
  m.def(
      "kemeny_winners", [](const Election& e) { return names_of(e, kemeny_winners(e)); }, py::arg("election"));

  m.def(
      "classify_manipulation",
      [](std::vector<Score> alpha) { return std::string(to_string(classify_manipulation(ScoringVector(std::move(alpha))))); },
      py::arg("alpha"));
  m.def(
      "classify_bribery",
      [](std::vector<Score> alpha, const std::string& variant) {
        const auto v = parse_enum(variant,
                                  {BriberyVariant::Plain, BriberyVariant::Weighted, BriberyVariant::Priced,
                                   BriberyVariant::WeightedPriced},
                                  "variant");
        return std::string(to_string(classify_bribery(ScoringVector(std::move(alpha)), v)));
      },
      py::arg("alpha"), py::arg("variant"));
  m.def(
      "classify_control",
      [](const std::string& system, const std::string& type, const std::string& goal,
         const std::optional<std::string>& tie) {
        return std::string(to_string(classify_control(spec_of(system, type, goal, tie))));
      },
      py::arg("system"), py::arg("type"), py::arg("goal"), py::arg("tie") = py::none());

  m.def(
      "manipulate",
      [](const Election& e, const std::string& target, std::vector<Weight> weights,
         std::optional<std::vector<Score>> alpha, const std::string& mode) {
        ManipulationInstance in;
        in.election = e;
        in.target = id_of(e, target);
        in.manipulator_weights = std::move(weights);
        in.rule = rule_of(alpha);
        if (alpha) in.alpha = ScoringVector(*alpha);
        in.mode = mode_of(mode);
        const auto v = manipulate(in);
        py::dict out;
        out["yes"] = v.yes;
        std::vector<std::vector<std::string>> ballots;
        for (const auto& b : v.ballots) ballots.push_back(ballot_names(e, b));
        out["ballots"] = ballots;
        return out;
      },
      py::arg("election"), py::arg("target"), py::arg("manipulator_weights"), py::arg("alpha"),
      py::arg("mode") = "cowinner");

  m.def(
      "bribe",
      [](const Election& e, const std::string& target, Weight budget, const std::string& variant,
         std::optional<std::vector<Score>> alpha, const std::string& mode, const std::string& encoding) {
        BriberyInstance in;
        in.election = e;
        in.target = id_of(e, target);
        in.budget = budget;
        in.variant = parse_enum(variant,
                                {BriberyVariant::Plain, BriberyVariant::Weighted, BriberyVariant::Priced,
                                 BriberyVariant::WeightedPriced},
                                "variant");
        in.encoding = parse_enum(
            encoding, {BriberyEncoding::Binary, BriberyEncoding::WeightsUnary, BriberyEncoding::PricesUnary}, "encoding");
        in.rule = BallotRule::Scoring;
        if (alpha) in.alpha = ScoringVector(*alpha);
        in.mode = mode_of(mode);
        const auto v = bribe(in);
        py::dict out;
        out["yes"] = v.yes;
        out["bribed"] = v.bribed;
        out["cost"] = v.cost;
        return out;
      },
      py::arg("election"), py::arg("target"), py::arg("budget"), py::arg("variant") = "plain",
      py::arg("alpha") = py::none(), py::arg("mode") = "cowinner", py::arg("encoding") = "binary");

  m.def(
      "control",
      [](const ElectionFile& f, const std::string& target, const std::string& system, const std::string& type,
         const std::string& goal, const std::optional<std::string>& tie, int limit) {
        const auto spec = spec_of(system, type, goal, tie);
        ControlInstance in{f.election, f.spoilers, f.voter_pool, id_of(f.election, target), limit};
        const auto v = control_decide(spec, in);
        py::dict out;
        out["yes"] = v.yes;
        out["candidates"] = names_of(f.election, v.action.candidates);
        out["voters"] = v.action.voters;
        out["final_winners"] = names_of(f.election, v.final_winners);
        out["polynomial"] = v.polynomial;
        return out;
      },
      py::arg("file"), py::arg("target"), py::arg("system"), py::arg("type"), py::arg("goal") = "constructive",
      py::arg("tie") = py::none(), py::arg("limit") = 0);

  m.def("equivalence_families", &equivalence_families);
  m.def(
      "check_equivalence",
      [](const std::string& family, std::uint64_t instances, std::uint64_t seed) {
        EquivalenceOptions opts;
        opts.instances = instances;
        opts.seed = seed;
        const auto r = check_equivalence(family, opts);
        py::dict out;
        out["family"] = r.family;
        out["instances"] = r.instances;
        out["mismatches"] = r.mismatches;
        out["first_mismatch"] = r.first_mismatch;
        out["seconds"] = r.seconds;
        return out;
      },
      py::arg("family"), py::arg("instances") = 200, py::arg("seed") = EquivalenceOptions{}.seed);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

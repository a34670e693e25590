// Command-line front end. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 violation or invalid run, 2 input error, 3 guard refusal.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "matchvote/axioms.hpp"
#include "matchvote/classify.hpp"
#include "matchvote/enumerate.hpp"
#include "matchvote/errors.hpp"
#include "matchvote/exact_thiele.hpp"
#include "matchvote/fixtures.hpp"
#include "matchvote/gallai_edmonds.hpp"
#include "matchvote/generator.hpp"
#include "matchvote/io.hpp"
#include "matchvote/scoring.hpp"
#include "matchvote/sequential_rules.hpp"
#include "matchvote/verify_run.hpp"

namespace {

using namespace matchvote;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kGuard = 3;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    buffer << in.rdbuf();
    return buffer.str();
}

WeightSequence parse_weight_option(const std::string& text) {
    if (text == "pav") return WeightSequence::pav();
    if (text == "av") return WeightSequence::av();
    if (text == "cc") return WeightSequence::cc();
    if (text.rfind("custom:", 0) == 0) return WeightSequence::custom(parse_weights(read_input(text.substr(7))));
    throw ValidationError("weights: expected pav, av, cc or custom:FILE, got '" + text + "'");
}

struct Options {
    std::string election = "-";
    std::string rule;
    std::string weights = "pav";
    std::string completion = "none";
    int k = 0;
    std::string axiom;
    std::string committee;
    std::string sequence;
    int edge_guard = kDefaultEdgeGuard;
    std::string shape = "general";
    int n = 6;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string fixture;
    std::string part = "election";
};

MatchingElection load(const Options& o) {
    auto e = parse_election(read_input(o.election));
    if (o.k > 0) e = e.with_k(o.k);
    return e;
}

int solve(const Options& o) {
    const auto e = load(o);
    const auto w = parse_weight_option(o.weights);
    const RuleTag rule = parse_rule(o.rule);
    RuleOutcome outcome;
    switch (rule) {
        case RuleTag::SeqThiele:
            outcome = seq_thiele(e, w, e.k());
            break;
        case RuleTag::SeqPhragmen:
            outcome = seq_phragmen(e, e.k());
            break;
        case RuleTag::RuleX:
            if (o.completion != "none" && o.completion != "fill")
                throw ValidationError("completion: expected none or fill, got '" + o.completion + "'");
            outcome = rule_x(e, e.k(), o.completion == "fill" ? Completion::Fill : Completion::None);
            break;
        case RuleTag::LsPav:
            outcome = ls_pav(e, e.k());
            break;
        case RuleTag::ExactThiele:
            outcome.rule = rule;
            outcome.committee = exact_thiele(e, w, e.k());
            break;
    }
    const bool thiele_family = rule == RuleTag::SeqThiele || rule == RuleTag::LsPav || rule == RuleTag::ExactThiele;
    const auto& scoring = rule == RuleTag::LsPav ? WeightSequence::pav() : w;
    std::optional<Rational> score;
    if (thiele_family) score = thiele_score(e, scoring, outcome.committee).total;
    std::cout << outcome_to_json(e, outcome, score);
    return kOk;
}

int check(const Options& o) {
    const auto e = load(o);
    const auto w = parse_committee(e, read_input(o.committee));
    AxiomVerdict verdict;
    switch (parse_axiom(o.axiom)) {
        case Axiom::Ejr:
            verdict = check_ejr(e, w);
            break;
        case Axiom::Pjr:
            verdict = check_pjr(e, w);
            break;
        case Axiom::Core:
            verdict = check_core(e, w);
            break;
    }
    std::cout << verdict_to_json(e, verdict);
    return verdict.satisfied ? kOk : kViolation;
}

int analyze(const Options& o) {
    const auto e = load(o);
    const auto cls = classify(e);
    std::optional<GallaiEdmondsDecomposition> ge;
    if (cls.symmetric) ge = gallai_edmonds(e.n(), approval_graph(e).undirected);
    std::cout << analysis_to_json(e, cls, ge);
    return kOk;
}

int enumerate(const Options& o) {
    const auto e = load(o);
    std::cout << candidates_to_json(e, enumerate_candidates(e, o.edge_guard));
    return kOk;
}

int verify(const Options& o) {
    const auto e = load(o);
    const auto sequence = parse_sequence(e, read_input(o.sequence));
    const RuleTag rule = parse_rule(o.rule);
    std::optional<WeightSequence> w;
    if (rule == RuleTag::SeqThiele) w = parse_weight_option(o.weights);
    const auto cert = verify_run(e, rule, sequence, w);
    std::cout << certificate_to_json(e, cert);
    return cert.valid ? kOk : kViolation;
}

int gen(const Options& o) {
    GeneratorParams params{parse_shape(o.shape), o.n, o.p, o.k > 0 ? o.k : 3, o.seed};
    std::cout << election_to_json(generate(params));
    return kOk;
}

int fixtures(const Options& o) {
    if (o.fixture.empty()) {
        for (const auto& name : fixture_names()) std::cout << name << "\n";
        return kOk;
    }
    const auto f = make_fixture(o.fixture);
    const auto colon = o.part.find(':');
    const std::string kind = o.part.substr(0, colon);
    const std::string label = colon == std::string::npos ? "" : o.part.substr(colon + 1);
    auto missing = [&]() { return ValidationError("part: fixture '" + f.name + "' has no '" + o.part + "'"); };
    if (kind == "election") {
        std::cout << election_to_json(f.election);
    } else if (kind == "committee") {
        const auto it = f.committees.find(label);
        if (it == f.committees.end()) throw missing();
        std::cout << committee_to_json(f.election, it->second);
    } else if (kind == "sequence") {
        const auto it = f.sequences.find(label);
        if (it == f.sequences.end()) throw missing();
        std::cout << sequence_to_json(f.election, it->second);
    } else if (kind == "group") {
        const auto it = f.groups.find(label);
        if (it == f.groups.end()) throw missing();
        std::cout << "{\"group\": [";
        for (std::size_t i = 0; i < it->second.size(); ++i)
            std::cout << (i ? ", " : "") << '"' << f.election.name(it->second[i]) << '"';
        std::cout << "]}\n";
    } else if (kind == "parts") {
        for (const auto& [name, _] : f.committees) std::cout << "committee:" << name << "\n";
        for (const auto& [name, _] : f.sequences) std::cout << "sequence:" << name << "\n";
        for (const auto& [name, _] : f.groups) std::cout << "group:" << name << "\n";
    } else {
        throw missing();
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Committees of matchings for approval-based matching elections"};
    app.require_subcommand(1);
    Options o;

    auto* solve_cmd = app.add_subcommand("solve", "Run a committee rule");
    solve_cmd->add_option("election", o.election, "Election JSON file, or - for stdin");
    solve_cmd->add_option("--rule", o.rule, "seq-thiele, seq-phragmen, rule-x, ls-pav or exact-thiele")->required();
    solve_cmd->add_option("--weights", o.weights, "pav, av, cc or custom:FILE");
    solve_cmd->add_option("--completion", o.completion, "Rule X completion: none or fill");
    solve_cmd->add_option("-k", o.k, "Override the committee size");

    auto* check_cmd = app.add_subcommand("check", "Audit a committee against an axiom");
    check_cmd->add_option("election", o.election, "Election JSON file, or - for stdin");
    check_cmd->add_option("--axiom", o.axiom, "ejr, pjr or core")->required();
    check_cmd->add_option("--committee", o.committee, "Committee JSON file")->required();
    check_cmd->add_option("-k", o.k, "Override the committee size");

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify an election");
    analyze_cmd->add_option("election", o.election, "Election JSON file, or - for stdin");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every candidate matching");
    enumerate_cmd->add_option("election", o.election, "Election JSON file, or - for stdin");
    enumerate_cmd->add_option("--edge-guard", o.edge_guard, "Refuse above this many approval-graph edges");

    auto* verify_cmd = app.add_subcommand("verify-run", "Certify a purchase sequence against a rule");
    verify_cmd->add_option("election", o.election, "Election JSON file, or - for stdin");
    verify_cmd->add_option("--rule", o.rule, "seq-thiele, seq-phragmen or rule-x")->required();
    verify_cmd->add_option("--sequence", o.sequence, "Sequence JSON file")->required();
    verify_cmd->add_option("--weights", o.weights, "pav, av, cc or custom:FILE (seq-thiele only)");
    verify_cmd->add_option("-k", o.k, "Override the committee size");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random election");
    gen_cmd->add_option("--class", o.shape, "general, bipartite or symmetric");
    gen_cmd->add_option("-n", o.n, "Number of agents");
    gen_cmd->add_option("-p", o.p, "Approval probability in (0, 1]");
    gen_cmd->add_option("-k", o.k, "Committee size");
    gen_cmd->add_option("--seed", o.seed, "Random seed");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Export built-in instances");
    fixtures_cmd->add_option("--name", o.fixture, "Fixture name; omit to list them");
    fixtures_cmd->add_option("--part", o.part, "election, parts, committee:L, sequence:L or group:L");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return solve(o);
        if (*check_cmd) return check(o);
        if (*analyze_cmd) return analyze(o);
        if (*enumerate_cmd) return enumerate(o);
        if (*verify_cmd) return verify(o);
        if (*gen_cmd) return gen(o);
        if (*fixtures_cmd) return fixtures(o);
    } catch (const GuardError& err) {
        std::cerr << "matchvote: " << err.what() << "\n";
        return kGuard;
    } catch (const ParseError& err) {
        std::cerr << "matchvote: " << err.what() << "\n";
        return kInputError;
    } catch (const ValidationError& err) {
        std::cerr << "matchvote: " << err.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

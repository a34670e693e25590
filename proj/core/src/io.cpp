#include "matchvote/io.hpp"

#include <nlohmann/json.hpp>

#include "matchvote/approval_winner.hpp"
#include "matchvote/errors.hpp"

namespace matchvote {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("malformed JSON: ") + err.what());
    }
}

const json& field(const json& object, const char* key, const char* where) {
    if (!object.is_object() || !object.contains(key))
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    return object.at(key);
}

std::string as_string(const json& value, const char* where) {
    if (!value.is_string()) throw ParseError(std::string(where) + ": expected a string");
    return value.get<std::string>();
}

Matching parse_matching(const MatchingElection& e, const json& pairs) {
    if (!pairs.is_array()) throw ParseError("pairs: expected an array");
    std::vector<Pair> out;
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) throw ParseError("pairs: each pair must be a two-element array");
        out.emplace_back(e.index_of(as_string(p[0], "pairs")), e.index_of(as_string(p[1], "pairs")));
    }
    try {
        return Matching(std::move(out));
    } catch (const std::invalid_argument& err) {
        throw ValidationError(std::string("pairs: ") + err.what());
    }
}

std::vector<std::pair<Matching, int>> parse_entries(const MatchingElection& e, const json& list, const char* where) {
    if (!list.is_array()) throw ParseError(std::string(where) + ": expected an array");
    std::vector<std::pair<Matching, int>> out;
    for (const auto& entry : list) {
        const Matching m = parse_matching(e, field(entry, "pairs", where));
        int count = 1;
        if (entry.contains("count")) {
            if (!entry.at("count").is_number_integer()) throw ParseError(std::string(where) + ": count must be an integer");
            count = entry.at("count").get<int>();
            if (count <= 0) throw ValidationError(std::string(where) + ": count must be positive");
        }
        out.emplace_back(m, count);
    }
    return out;
}

json pairs_json(const MatchingElection& e, const Matching& m) {
    json out = json::array();
    for (const auto& [a, b] : m.pairs()) out.push_back({e.name(a), e.name(b)});
    return out;
}

json names_json(const MatchingElection& e, const std::vector<AgentId>& agents) {
    json out = json::array();
    for (AgentId a : agents) out.push_back(e.name(a));
    return out;
}

json committee_value(const MatchingElection& e, const Committee& c) {
    json list = json::array();
    for (const auto& [m, count] : c.counts()) list.push_back({{"pairs", pairs_json(e, m)}, {"count", count}});
    return {{"matchings", list}};
}

json rationals_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace

MatchingElection parse_election(std::string_view text) {
    const json doc = parse_json(text);
    const json& agents = field(doc, "agents", "election");
    const json& approvals = field(doc, "approvals", "election");
    const json& k = field(doc, "k", "election");
    if (!agents.is_array()) throw ParseError("agents: expected an array of names");
    if (!approvals.is_object()) throw ParseError("approvals: expected an object keyed by agent name");
    if (!k.is_number_integer()) throw ParseError("k: expected an integer");
    std::vector<std::string> names;
    for (const auto& a : agents) names.push_back(as_string(a, "agents"));
    std::vector<std::vector<AgentId>> sets(names.size());
    auto lookup = [&](const std::string& name) {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ValidationError("approvals: unknown agent '" + name + "'");
        return static_cast<AgentId>(it - names.begin());
    };
    for (const auto& [voter, approved] : approvals.items()) {
        if (!approved.is_array()) throw ParseError("approvals: each approval set must be an array");
        auto& set = sets[static_cast<std::size_t>(lookup(voter))];
        for (const auto& b : approved) set.push_back(lookup(as_string(b, "approvals")));
    }
    const auto kv = k.get<long long>();
    if (kv <= 0 || kv > 1'000'000) throw ValidationError("k: committee size must be a positive integer");
    return MatchingElection(std::move(names), std::move(sets), static_cast<int>(kv));
}

Committee parse_committee(const MatchingElection& e, std::string_view text) {
    const json doc = parse_json(text);
    return Committee::from_counts(parse_entries(e, field(doc, "matchings", "committee"), "committee"));
}

std::vector<Matching> parse_sequence(const MatchingElection& e, std::string_view text) {
    const json doc = parse_json(text);
    std::vector<Matching> out;
    for (const auto& [m, count] : parse_entries(e, field(doc, "sequence", "sequence"), "sequence"))
        out.insert(out.end(), static_cast<std::size_t>(count), m);
    return out;
}

std::vector<Rational> parse_weights(std::string_view text) {
    const json doc = parse_json(text);
    const json& list = doc.is_object() ? field(doc, "weights", "weights") : doc;
    if (!list.is_array()) throw ParseError("weights: expected an array");
    std::vector<Rational> out;
    for (const auto& v : list) {
        try {
            if (v.is_number_integer())
                out.emplace_back(v.get<std::int64_t>());
            else
                out.push_back(Rational::parse(as_string(v, "weights")));
        } catch (const std::invalid_argument& err) {
            throw ParseError(std::string("weights: ") + err.what());
        }
    }
    return out;
}

std::string election_to_json(const MatchingElection& e) {
    json approvals = json::object();
    for (AgentId a = 0; a < e.n(); ++a) approvals[e.name(a)] = names_json(e, e.approvals(a));
    return dump({{"agents", e.names()}, {"approvals", approvals}, {"k", e.k()}});
}

std::string committee_to_json(const MatchingElection& e, const Committee& c) { return dump(committee_value(e, c)); }

std::string sequence_to_json(const MatchingElection& e, const std::vector<Matching>& sequence) {
    json list = json::array();
    for (std::size_t i = 0; i < sequence.size();) {
        std::size_t j = i;
        while (j < sequence.size() && sequence[j] == sequence[i]) ++j;
        list.push_back({{"pairs", pairs_json(e, sequence[i])}, {"count", j - i}});
        i = j;
    }
    return dump({{"sequence", list}});
}

std::string outcome_to_json(const MatchingElection& e, const RuleOutcome& outcome, const std::optional<Rational>& score) {
    json doc = {{"rule", to_string(outcome.rule)}, {"size", outcome.committee.size()}};
    doc["committee"] = committee_value(e, outcome.committee);
    if (score) doc["score"] = score->to_string();
    const char* optimum_key = "marginal";
    if (outcome.rule == RuleTag::SeqPhragmen) optimum_key = "t";
    if (outcome.rule == RuleTag::RuleX) optimum_key = "q";
    json rounds = json::array();
    for (const auto& r : outcome.rounds) {
        json round = {{"chosen", pairs_json(e, r.chosen)}, {optimum_key, r.optimum.to_string()}};
        if (!r.budgets.empty()) round["budgets"] = rationals_json(r.budgets);
        if (!r.payments.empty()) round["payments"] = rationals_json(r.payments);
        if (r.filled) round["filled"] = true;
        rounds.push_back(round);
    }
    doc["rounds"] = rounds;
    if (outcome.rule == RuleTag::SeqPhragmen) doc["elapsed"] = outcome.elapsed.to_string();
    if (outcome.rule == RuleTag::LsPav) doc["swaps"] = outcome.swaps;
    return dump(doc);
}

std::string verdict_to_json(const MatchingElection& e, const AxiomVerdict& verdict) {
    json doc = {{"axiom", to_string(verdict.axiom)}, {"satisfied", verdict.satisfied}};
    if (!verdict.satisfied) {
        json witness = {{"ell", verdict.ell}, {"group", names_json(e, verdict.group)}, {"threshold", verdict.threshold.to_string()}};
        if (verdict.candidate) witness["candidate"] = pairs_json(e, *verdict.candidate);
        if (verdict.deviation) witness["deviation"] = committee_value(e, *verdict.deviation);
        doc["witness"] = witness;
    }
    return dump(doc);
}

std::string certificate_to_json(const MatchingElection&, const RunCertificate& cert) {
    json doc = {{"rule", to_string(cert.rule)}, {"valid", cert.valid}, {"optima", rationals_json(cert.optima)},
                {"attained", rationals_json(cert.attained)}};
    if (!cert.valid) {
        doc["first_invalid_round"] = cert.first_invalid + 1;
        doc["reason"] = cert.reason;
    }
    return dump(doc);
}

std::string candidates_to_json(const MatchingElection& e, const std::vector<Matching>& candidates) {
    json list = json::array();
    for (const auto& c : candidates)
        list.push_back({{"pairs", pairs_json(e, c)}, {"approvers", names_json(e, approvers(e, c))}});
    return dump({{"candidates", list}, {"count", candidates.size()}});
}

std::string analysis_to_json(const MatchingElection& e, const ElectionClass& cls,
                             const std::optional<GallaiEdmondsDecomposition>& ge) {
    json doc = {{"n", e.n()}, {"k", e.k()}, {"class", cls.tag()}, {"symmetric", cls.symmetric}, {"bipartite", cls.bipartite}};
    const auto graph = approval_graph(e);
    doc["mutual_edges"] = graph.undirected.size();
    doc["one_sided_edges"] = graph.directed.size();
    if (cls.bipartite) {
        std::vector<AgentId> one;
        std::vector<AgentId> two;
        for (AgentId a = 0; a < e.n(); ++a) (cls.side[static_cast<std::size_t>(a)] == 0 ? one : two).push_back(a);
        doc["partition"] = {names_json(e, one), names_json(e, two)};
    }
    if (ge) {
        json components = json::array();
        for (const auto& c : ge->components) components.push_back(names_json(e, c));
        doc["gallai_edmonds"] = {{"Y", names_json(e, ge->y)}, {"X", names_json(e, ge->x)}, {"W", names_json(e, ge->w)},
                                 {"components", components}, {"maximum_matching_size", ge->nu}};
    }
    return dump(doc);
}

}  // namespace matchvote

#include "matchvote/fixtures.hpp"

#include <algorithm>

#include "matchvote/errors.hpp"

namespace matchvote {

namespace {

struct Builder {
    std::vector<std::string> names;
    std::vector<std::vector<AgentId>> approvals;

    explicit Builder(std::vector<std::string> agent_names)
        : names(std::move(agent_names)), approvals(names.size()) {}

    [[nodiscard]] AgentId id(std::string_view name) const {
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::logic_error("fixture refers to unknown agent " + std::string(name));
        return static_cast<AgentId>(it - names.begin());
    }
    void approve(std::string_view a, std::string_view b) { approvals[static_cast<std::size_t>(id(a))].push_back(id(b)); }
    void mutual(std::string_view a, std::string_view b) {
        approve(a, b);
        approve(b, a);
    }
    [[nodiscard]] Matching matching(const std::vector<std::pair<std::string, std::string>>& pairs) const {
        std::vector<Pair> out;
        for (const auto& [a, b] : pairs) out.emplace_back(id(a), id(b));
        return Matching(std::move(out));
    }
    [[nodiscard]] std::vector<AgentId> group(const std::vector<std::string>& agents) const {
        std::vector<AgentId> out;
        for (const auto& a : agents) out.push_back(id(a));
        std::sort(out.begin(), out.end());
        return out;
    }
    [[nodiscard]] MatchingElection build(int k) const { return MatchingElection(names, approvals, k); }
};

std::vector<std::string> numbered(const std::string& prefix, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

Committee of(const std::vector<Matching>& members) {
    Committee c;
    for (const auto& m : members) c.add(m);
    return c;
}

Fixture fig1() {
    Builder b(numbered("a", 6));
    b.approve("a1", "a2");
    b.approve("a2", "a3");
    b.approve("a3", "a4");
    b.approve("a4", "a3");
    b.approve("a5", "a3");
    b.approve("a6", "a4");
    const Matching c1 = b.matching({{"a1", "a2"}, {"a3", "a4"}});
    const Matching c2 = b.matching({{"a1", "a2"}, {"a3", "a5"}, {"a4", "a6"}});
    const Matching c3 = b.matching({{"a2", "a3"}, {"a4", "a6"}});
    Fixture f{"fig1", b.build(3), {}, {}, {}, {}};
    f.matchings = {{"c1", c1}, {"c2", c2}, {"c3", c3}};
    f.committees = {{"c1-c2-c3", of({c1, c2, c3})}, {"c1-c1-c2", of({c1, c1, c2})}, {"c1-c2-c2", of({c1, c2, c2})}};
    // Both seq-Phragmén tie branches: c1 first, or c2 first.
    f.sequences = {{"seq-pav", {c1, c2, c3}}, {"phragmen-c1-first", {c1, c2, c1}}, {"phragmen-c2-first", {c2, c1, c3}}};
    return f;
}

Fixture footnote4() {
    Builder b(numbered("a", 4));
    b.approve("a1", "a2");
    b.approve("a2", "a3");
    b.approve("a3", "a4");
    b.approve("a4", "a3");
    const Matching c = b.matching({{"a1", "a2"}, {"a3", "a4"}});
    const Matching c_prime = b.matching({{"a2", "a3"}});
    Fixture f{"footnote4", b.build(4), {}, {}, {}, {}};
    f.matchings = {{"c", c}, {"c'", c_prime}};
    f.committees = {{"c-c-c'-c'", of({c, c, c_prime, c_prime})}, {"c-c-c-c'", of({c, c, c, c_prime})}};
    f.groups = {{"pjr-violators", b.group({"a1", "a3", "a4"})}};
    return f;
}

Fixture prop_phragmen_ejr() {
    Builder b(numbered("a", 3));
    b.mutual("a1", "a2");
    b.mutual("a1", "a3");
    b.mutual("a2", "a3");
    const Matching left = b.matching({{"a1", "a2"}});
    const Matching right = b.matching({{"a2", "a3"}});
    Fixture f{"prop-phragmen-ejr", b.build(6), {}, {}, {}, {}};
    f.matchings = {{"a1a2", left}, {"a2a3", right}, {"a1a3", b.matching({{"a1", "a3"}})}};
    // a2 sits in every purchase, so the two pairs alternate in reaching one dollar.
    const std::vector<Matching> run{left, right, left, right, left, right};
    f.sequences = {{"run", run}};
    f.committees = {{"run", of(run)}};
    f.groups = {{"ejr-violators", b.group({"a1", "a3"})}};
    return f;
}

Fixture prop_rulex_core() {
    Builder b({"w", "x", "y", "z", "a1", "a2", "a3", "b1", "b2", "c1", "c2", "d1", "d2"});
    for (const char* a : {"a1", "a2", "a3", "b1"}) b.mutual("w", a);
    for (const char* a : {"b1", "b2"}) b.mutual("x", a);
    for (const char* a : {"c1", "c2"}) b.mutual("y", a);
    for (const char* a : {"d1", "d2"}) b.mutual("z", a);
    const Matching eighth = b.matching({{"w", "b1"}, {"x", "b2"}, {"y", "c1"}, {"z", "d1"}});
    const Matching third = b.matching({{"w", "a1"}, {"x", "b2"}, {"y", "c2"}, {"z", "d2"}});
    const Matching last_a2 = b.matching({{"w", "a2"}, {"x", "b2"}, {"y", "c1"}, {"z", "d1"}});
    const Matching last_a3 = b.matching({{"w", "a3"}, {"x", "b2"}, {"y", "c1"}, {"z", "d1"}});
    std::vector<Matching> run(8, eighth);
    run.insert(run.end(), 3, third);
    run.push_back(last_a2);
    run.push_back(last_a3);
    const Matching dev_a2 = b.matching({{"w", "a2"}, {"x", "b1"}, {"y", "c2"}, {"z", "d2"}});
    const Matching dev_a3 = b.matching({{"w", "a3"}, {"x", "b1"}, {"y", "c2"}, {"z", "d2"}});
    Fixture f{"prop-rulex-core", b.build(13), {}, {}, {}, {}};
    f.matchings = {{"eighth", eighth}, {"third", third}, {"last-a2", last_a2}, {"last-a3", last_a3},
                   {"deviation-a2", dev_a2}, {"deviation-a3", dev_a3}};
    f.sequences = {{"run", run}};
    f.committees = {{"run", of(run)}, {"deviation", of({dev_a2, dev_a2, dev_a3, dev_a3})}};
    f.groups = {{"blocking", b.group({"a2", "a3", "c2", "d2"})}};
    return f;
}

Fixture prop_seq_core() {
    std::vector<std::string> names{"x", "y", "z"};
    const auto as = numbered("a", 27);
    const auto bs = numbered("b", 27);
    const auto cs = numbered("c", 41);
    names.insert(names.end(), as.begin(), as.end());
    names.insert(names.end(), bs.begin(), bs.end());
    names.insert(names.end(), cs.begin(), cs.end());
    Builder b(names);
    for (const auto& a : as) b.mutual("x", a);
    for (const auto& a : bs) b.mutual("y", a);
    for (const auto& group : {as, bs, cs})
        for (const auto& a : group) b.mutual("z", a);

    std::vector<Matching> run;
    std::vector<int> ha(27, 0);
    std::vector<int> hb(27, 0);
    std::vector<int> hc(41, 0);
    auto name = [](const char* prefix, int index) { return std::string(prefix) + std::to_string(index + 1); };
    // Rounds 1-9: z competes for A.
    for (int i = 0; i < 9; ++i) {
        run.push_back(b.matching({{"x", name("a", 2 * i)}, {"z", name("a", 2 * i + 1)}, {"y", name("b", i)}}));
        ++ha[static_cast<std::size_t>(2 * i)];
        ++ha[static_cast<std::size_t>(2 * i + 1)];
        ++hb[static_cast<std::size_t>(i)];
    }
    // Rounds 10-18: z competes for B.
    for (int i = 0; i < 9; ++i) {
        run.push_back(b.matching({{"x", name("a", 18 + i)}, {"y", name("b", 9 + 2 * i)}, {"z", name("b", 10 + 2 * i)}}));
        ++ha[static_cast<std::size_t>(18 + i)];
        ++hb[static_cast<std::size_t>(9 + 2 * i)];
        ++hb[static_cast<std::size_t>(10 + 2 * i)];
    }
    // Remaining rounds: each centre serves the least happy agent of its own group.
    auto least = [](const std::vector<int>& h) {
        return static_cast<int>(std::min_element(h.begin(), h.end()) - h.begin());
    };
    while (run.size() < 98) {
        const int a = least(ha);
        const int bb = least(hb);
        const int c = least(hc);
        run.push_back(b.matching({{"x", name("a", a)}, {"y", name("b", bb)}, {"z", name("c", c)}}));
        ++ha[static_cast<std::size_t>(a)];
        ++hb[static_cast<std::size_t>(bb)];
        ++hc[static_cast<std::size_t>(c)];
    }
    // Blocking group: the last agents left behind in each group.
    const int a = static_cast<int>(std::find(ha.begin(), ha.end(), 3) - ha.begin());
    const int bb = static_cast<int>(std::find(hb.begin(), hb.end(), 3) - hb.begin());
    std::vector<int> low_c;
    for (int i = 0; i < 41; ++i)
        if (hc[static_cast<std::size_t>(i)] == 1) low_c.push_back(i);
    if (a == 27 || bb == 27 || low_c.size() != 2) throw std::logic_error("prop-seq-core fixture construction drifted");
    const Matching dev_c = b.matching({{"x", name("a", a)}, {"y", name("b", bb)}, {"z", name("c", low_c[0])}});
    const Matching dev_c_prime = b.matching({{"x", name("a", a)}, {"y", name("b", bb)}, {"z", name("c", low_c[1])}});

    Fixture f{"prop-seq-core", b.build(98), {}, {}, {}, {}};
    f.matchings = {{"deviation-c", dev_c}, {"deviation-c'", dev_c_prime}};
    f.sequences = {{"run", run}};
    f.committees = {{"run", of(run)}, {"deviation", of({dev_c, dev_c, dev_c_prime, dev_c_prime})}};
    f.groups = {{"blocking", b.group({name("a", a), name("b", bb), name("c", low_c[0]), name("c", low_c[1])})}};
    return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"fig1", "footnote4", "prop-seq-core", "prop-rulex-core", "prop-phragmen-ejr"};
}

Fixture make_fixture(std::string_view name) {
    if (name == "fig1") return fig1();
    if (name == "footnote4") return footnote4();
    if (name == "prop-seq-core") return prop_seq_core();
    if (name == "prop-rulex-core") return prop_rulex_core();
    if (name == "prop-phragmen-ejr") return prop_phragmen_ejr();
    throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace matchvote

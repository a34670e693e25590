#include <benchmark/benchmark.h>

#include <random>

#include "matchvote/approval_winner.hpp"
#include "matchvote/exact_thiele.hpp"
#include "matchvote/fixtures.hpp"
#include "matchvote/generator.hpp"
#include "matchvote/sequential_rules.hpp"
#include "matchvote/weighted_graph.hpp"

using namespace matchvote;

namespace {

MatchingElection sample(ElectionShape shape, int n, int k) {
    return generate({shape, n, 0.3, k, 42});
}

void BM_MaxWeightMatching(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> w(1, 50);
    WeightedGraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 4 == 0) g.add_edge(a, b, Rational(w(rng), 1 + w(rng) % 7));
    for (auto _ : state) benchmark::DoNotOptimize(max_weight_matching(g));
}
BENCHMARK(BM_MaxWeightMatching)->Arg(16)->Arg(64)->Arg(128);

void BM_WeightedApprovalWinner(benchmark::State& state) {
    const auto e = sample(ElectionShape::General, static_cast<int>(state.range(0)), 4);
    AgentWeighting omega;
    for (int a = 0; a < e.n(); ++a) omega.emplace_back(1, 1 + a % 5);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_approval_winner(e, omega));
}
BENCHMARK(BM_WeightedApprovalWinner)->Arg(16)->Arg(64);

void BM_SeqPavLargeFixture(benchmark::State& state) {
    const auto f = make_fixture("prop-seq-core");
    for (auto _ : state) benchmark::DoNotOptimize(seq_thiele(f.election, WeightSequence::pav(), f.election.k()));
}
BENCHMARK(BM_SeqPavLargeFixture)->Unit(benchmark::kMillisecond);

void BM_RuleX(benchmark::State& state) {
    const auto e = sample(ElectionShape::General, static_cast<int>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(rule_x(e, e.k()));
}
BENCHMARK(BM_RuleX)->Arg(16)->Arg(48);

void BM_BipartiteThiele(benchmark::State& state) {
    const auto e = sample(ElectionShape::Bipartite, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(bipartite_thiele(e, WeightSequence::pav(), e.k()));
}
BENCHMARK(BM_BipartiteThiele)->Arg(12)->Arg(32);

void BM_SymmetricThiele(benchmark::State& state) {
    const auto e = sample(ElectionShape::Symmetric, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(exact_thiele(e, WeightSequence::pav(), e.k()));
}
BENCHMARK(BM_SymmetricThiele)->Arg(12)->Arg(32);

}  // namespace

BENCHMARK_MAIN();

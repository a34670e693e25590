#include "matchvote/generator.hpp"

#include <random>

#include "matchvote/errors.hpp"

namespace matchvote {

std::string to_string(ElectionShape shape) {
    switch (shape) {
        case ElectionShape::General: return "general";
        case ElectionShape::Bipartite: return "bipartite";
        case ElectionShape::Symmetric: return "symmetric";
    }
    return "unknown";
}

ElectionShape parse_shape(std::string_view text) {
    for (auto s : {ElectionShape::General, ElectionShape::Bipartite, ElectionShape::Symmetric})
        if (to_string(s) == text) return s;
    throw ValidationError("unknown election class '" + std::string(text) + "'");
}

MatchingElection generate(const GeneratorParams& params) {
    if (params.n < 2) throw ValidationError("n: at least two agents are required");
    if (params.k < 1) throw ValidationError("k: committee size must be positive");
    if (!(params.p > 0.0 && params.p <= 1.0)) throw ValidationError("p: approval probability must lie in (0, 1]");
    std::mt19937_64 rng(params.seed);
    std::bernoulli_distribution coin(params.p);
    const int n = params.n;
    const int split = (n + 1) / 2;
    while (true) {
        std::vector<std::vector<AgentId>> approvals(static_cast<std::size_t>(n));
        for (AgentId a = 0; a < n; ++a) {
            for (AgentId b = 0; b < n; ++b) {
                if (a == b) continue;
                switch (params.shape) {
                    case ElectionShape::General:
                        if (coin(rng)) approvals[static_cast<std::size_t>(a)].push_back(b);
                        break;
                    case ElectionShape::Symmetric:
                        if (a < b && coin(rng)) {
                            approvals[static_cast<std::size_t>(a)].push_back(b);
                            approvals[static_cast<std::size_t>(b)].push_back(a);
                        }
                        break;
                    case ElectionShape::Bipartite:
                        if ((a < split) != (b < split) && coin(rng)) approvals[static_cast<std::size_t>(a)].push_back(b);
                        break;
                }
            }
        }
        bool any = false;
        for (const auto& set : approvals) any = any || !set.empty();
        if (any) return MatchingElection(std::move(approvals), params.k);
    }
}

}  // namespace matchvote

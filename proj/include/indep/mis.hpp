#pragma once

#include <indep/graph.hpp>

#include <optional>

namespace indep
{
    /// Exact maximum independent set by branch-and-bound: branch on a
    /// maximum-degree vertex (lowest index on ties), include-first, pruned by a
    /// greedy clique-cover bound. The witness is deterministic.
    auto max_independent_set(const Graph & g) -> VertexSet;

    auto independence_number(const Graph & g) -> int;

    struct GraphStats
    {
        int n = 0;
        std::optional<int> d;
        int alpha = 0;
        std::size_t edge_count = 0;

        friend auto operator==(const GraphStats &, const GraphStats &) -> bool = default;
    };

    auto graph_stats(const Graph & g) -> GraphStats;
}

#include <cstdint>

namespace indep
{
    /// Greedy maximal independent set over a seeded random vertex order.
    auto random_maximal_independent_set(const Graph & g, std::uint64_t seed) -> VertexSet;
}

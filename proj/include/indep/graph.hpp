#pragma once

#include <indep/bits.hpp>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace indep
{
    using Edge = std::pair<int, int>;

    /// A set of vertices of one particular graph.
    struct VertexSet
    {
        VertexMask bits = 0;

        static auto from_members(std::span<const int> vertices) -> VertexSet;

        auto size() const -> int { return popcount(bits); }
        auto empty() const -> bool { return bits == 0; }
        auto contains(int v) const -> bool { return (bits & bit(v)) != 0; }
        auto members() const -> std::vector<int>;

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;
    };

    /// Simple undirected graph on at most mask_capacity vertices, stored as
    /// one neighbour mask per vertex. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;

        /// The edgeless graph on n vertices.
        explicit Graph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        auto order() const -> int { return n_; }
        auto vertices() const -> VertexMask { return first_n(n_); }
        auto neighbors(int v) const -> VertexMask { return adj_[v]; }
        auto degree(int v) const -> int { return popcount(adj_[v]); }
        auto adjacent(int u, int v) const -> bool { return (adj_[u] & bit(v)) != 0; }

        auto edge_count() const -> std::size_t;
        auto edges() const -> std::vector<Edge>;
        auto max_degree() const -> int;

        /// The common degree if every vertex has the same degree. The graph on
        /// zero vertices has no degree.
        auto regular_degree() const -> std::optional<int>;

        auto is_independent(VertexMask s) const -> bool;

        /// N(S): every vertex adjacent to some member of s.
        auto neighborhood(VertexMask s) const -> VertexMask;

        /// Connected components of the subgraph induced by `within`, in order of
        /// their lowest vertex.
        auto components(VertexMask within) const -> std::vector<VertexMask>;
        auto components() const -> std::vector<VertexMask> { return components(vertices()); }

        /// Induced subgraph on `keep`, relabelled in increasing vertex order.
        auto induced(VertexMask keep) const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        int n_ = 0;
        std::vector<VertexMask> adj_;
    };

    /// Validating constructor: endpoints in range, no loops; duplicates collapse.
    auto build_graph(int n, std::span<const Edge> edges) -> Graph;

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    /// True when every component is a complete graph and all components have
    /// the same order (the empty graph qualifies vacuously).
    auto is_equal_clique_union(const Graph & g) -> bool;
}

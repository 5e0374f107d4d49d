#include <indep/graph.hpp>
#include <indep/error.hpp>

#include <algorithm>
#include <string>

namespace indep
{
    auto VertexSet::from_members(std::span<const int> vertices) -> VertexSet
    {
        VertexSet s;
        for (int v : vertices) {
            if (v < 0 || v >= mask_capacity)
                throw DomainError("vertex " + std::to_string(v) + " outside mask capacity");
            s.bits |= bit(v);
        }
        return s;
    }

    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(size());
        for_each_bit(bits, [&](int v) { out.push_back(v); });
        return out;
    }

    Graph::Graph(int n) :
        n_(n)
    {
        if (n < 0 || n > mask_capacity)
            throw DomainError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(mask_capacity) + "]");
        adj_.assign(n, 0);
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside [0, " + std::to_string(n) + ")");
            if (u == v)
                throw DomainError("loop at vertex " + std::to_string(u));
            g.adj_[u] |= bit(v);
            g.adj_[v] |= bit(u);
        }
        return g;
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto m : adj_)
            twice += popcount(m);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (int v = 0; v < n_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto Graph::regular_degree() const -> std::optional<int>
    {
        if (n_ == 0)
            return std::nullopt;
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d)
                return std::nullopt;
        return d;
    }

    auto Graph::is_independent(VertexMask s) const -> bool
    {
        if (s & ~vertices())
            return false;
        bool ok = true;
        for_each_bit(s, [&](int v) { ok = ok && (adj_[v] & s) == 0; });
        return ok;
    }

    auto Graph::neighborhood(VertexMask s) const -> VertexMask
    {
        VertexMask out = 0;
        for_each_bit(s, [&](int v) { out |= adj_[v]; });
        return out;
    }

    auto Graph::components(VertexMask within) const -> std::vector<VertexMask>
    {
        std::vector<VertexMask> out;
        VertexMask left = within & vertices();
        while (left) {
            VertexMask comp = bit(lowest(left)), frontier = comp;
            while (frontier) {
                VertexMask next = neighborhood(frontier) & left & ~comp;
                comp |= next;
                frontier = next;
            }
            out.push_back(comp);
            left &= ~comp;
        }
        return out;
    }

    auto Graph::induced(VertexMask keep) const -> Graph
    {
        keep &= vertices();
        std::vector<int> relabel(n_, -1);
        int next = 0;
        for_each_bit(keep, [&](int v) { relabel[v] = next++; });
        Graph h(next);
        for_each_bit(keep, [&](int v) {
            for_each_bit(adj_[v] & keep, [&](int w) { h.adj_[relabel[v]] |= bit(relabel[w]); });
        });
        return h;
    }

    auto build_graph(int n, std::span<const Edge> edges) -> Graph
    {
        return Graph::from_edges(n, edges);
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int n = g.order() + h.order();
        if (n > mask_capacity)
            throw DomainError("disjoint union has " + std::to_string(n) + " vertices, capacity is " + std::to_string(mask_capacity));
        auto edges = g.edges();
        for (auto [u, v] : h.edges())
            edges.emplace_back(u + g.order(), v + g.order());
        return Graph::from_edges(n, edges);
    }

    auto is_equal_clique_union(const Graph & g) -> bool
    {
        std::optional<int> size;
        for (auto comp : g.components()) {
            int k = popcount(comp);
            if (size && *size != k)
                return false;
            size = k;
            bool clique = true;
            for_each_bit(comp, [&](int v) { clique = clique && (g.neighbors(v) | bit(v)) == comp; });
            if (! clique)
                return false;
        }
        return true;
    }
}

#include <indep/generators.hpp>
#include <indep/error.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace indep
{
    auto gen_complete_bipartite(int d) -> Graph
    {
        if (d < 1 || 2 * d > mask_capacity)
            throw DomainError("K_{d,d} needs 1 <= d <= " + std::to_string(mask_capacity / 2) + ", got " + std::to_string(d));
        std::vector<Edge> edges;
        for (int u = 0; u < d; ++u)
            for (int v = d; v < 2 * d; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(2 * d, edges);
    }

    auto gen_kdd_union(int m, int d) -> Graph
    {
        if (m < 1)
            throw DomainError("union of K_{d,d} copies needs m >= 1");
        Graph g = gen_complete_bipartite(d);
        Graph out = g;
        for (int i = 1; i < m; ++i)
            out = disjoint_union(out, g);
        return out;
    }

    auto gen_cycle(int n) -> Graph
    {
        if (n < 3 || n > mask_capacity)
            throw DomainError("cycle needs 3 <= n <= " + std::to_string(mask_capacity) + ", got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::from_edges(n, edges);
    }

    auto gen_complete(int n) -> Graph
    {
        if (n < 1 || n > mask_capacity)
            throw DomainError("complete graph needs 1 <= n <= " + std::to_string(mask_capacity) + ", got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    auto gen_petersen() -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        return Graph::from_edges(10, edges);
    }

    auto gen_path(int n) -> Graph
    {
        if (n < 1 || n > mask_capacity)
            throw DomainError("path needs 1 <= n <= " + std::to_string(mask_capacity) + ", got " + std::to_string(n));
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }

    auto gen_random_regular(int n, int d, std::uint64_t seed) -> Graph
    {
        if (n < 0 || n > mask_capacity)
            throw DomainError("random regular graph order " + std::to_string(n) + " outside capacity");
        if (d < 0 || (d >= n && ! (n == 0 && d == 0)))
            throw DomainError("random regular graph needs 0 <= d < n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
        if ((n * d) % 2 != 0)
            throw DomainError("n*d must be even, got n=" + std::to_string(n) + " d=" + std::to_string(d));

        std::mt19937_64 rng(seed);
        std::vector<int> points(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            std::fill_n(points.begin() + static_cast<std::ptrdiff_t>(v) * d, d, v);

        std::vector<VertexMask> adj(n);
        for (int attempt = 0; attempt < random_regular_retry_cap; ++attempt) {
            std::shuffle(points.begin(), points.end(), rng);
            std::fill(adj.begin(), adj.end(), VertexMask{0});
            bool simple = true;
            for (std::size_t i = 0; simple && i < points.size(); i += 2) {
                int u = points[i], v = points[i + 1];
                if (u == v || (adj[u] & bit(v)))
                    simple = false;
                else {
                    adj[u] |= bit(v);
                    adj[v] |= bit(u);
                }
            }
            if (! simple)
                continue;

            std::vector<Edge> edges;
            for (std::size_t i = 0; i < points.size(); i += 2)
                edges.emplace_back(points[i], points[i + 1]);
            return Graph::from_edges(n, edges);
        }
        throw DomainError("pairing model rejected " + std::to_string(random_regular_retry_cap) + " times for n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
}

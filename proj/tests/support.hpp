#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// library's counting or bound code, so comparisons against it are independent.

#include <indep/graph.hpp>
#include <indep/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace indep::testing
{
    inline auto gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    inline auto random_permutation(int n, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        return order;
    }

    /// Pairwise non-adjacency over an explicit member list.
    inline auto independent_by_pairs(const Graph & g, std::uint64_t subset) -> bool
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if ((subset >> u & 1) && (subset >> v & 1) && g.adjacent(u, v))
                    return false;
        return true;
    }

    /// counts[t] = number of independent sets of size t, by pairwise checks.
    inline auto enumerate_counts(const Graph & g) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> counts(g.order() + 1, 0);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
            if (independent_by_pairs(g, s))
                ++counts[std::popcount(s)];
        while (counts.size() > 1 && counts.back() == 0)
            counts.pop_back();
        return counts;
    }

    inline auto brute_alpha(const Graph & g) -> int
    {
        return static_cast<int>(enumerate_counts(g).size()) - 1;
    }

    /// Shortest cycle length by BFS from every vertex; 0 if acyclic.
    inline auto girth(const Graph & g) -> int
    {
        int best = 0;
        for (int s = 0; s < g.order(); ++s) {
            std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v = 0; v < g.order(); ++v) {
                    if (! g.adjacent(u, v))
                        continue;
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    else if (parent[u] != v) {
                        int len = dist[u] + dist[v] + 1;
                        if (best == 0 || len < best)
                            best = len;
                    }
                }
            }
        }
        return best;
    }

    /// i_t(C_n) = n/(n-t) * C(n-t, t), the closed form for cycles.
    inline auto cycle_coefficients(int n) -> std::vector<BigInt>
    {
        std::vector<BigInt> out;
        for (int t = 0; 2 * t <= n; ++t) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), n - t, t);
            out.push_back(t == 0 ? BigInt(1) : BigInt(binom * n / (n - t)));
        }
        return out;
    }

    inline auto convolve(const std::vector<BigInt> & a, const std::vector<BigInt> & b) -> std::vector<BigInt>
    {
        std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    }
}

#include <indep/mis.hpp>

namespace indep
{
    namespace
    {
        // Greedy clique cover of g[p]: every independent set meets each clique
        // at most once, so the number of cliques bounds alpha(g[p]).
        auto clique_cover_bound(const Graph & g, VertexMask p) -> int
        {
            int cliques = 0;
            while (p) {
                ++cliques;
                VertexMask q = p;
                while (q) {
                    int v = lowest(q);
                    p &= ~bit(v);
                    q &= g.neighbors(v);
                }
            }
            return cliques;
        }

        struct Search
        {
            const Graph & g;
            VertexMask best = 0;
            int best_size = 0;

            void expand(VertexMask p, VertexMask chosen, int size)
            {
                if (! p) {
                    if (size > best_size) {
                        best = chosen;
                        best_size = size;
                    }
                    return;
                }
                if (size + clique_cover_bound(g, p) <= best_size)
                    return;

                int pivot = -1, pivot_degree = -1;
                for_each_bit(p, [&](int v) {
                    int deg = popcount(g.neighbors(v) & p);
                    if (deg > pivot_degree) {
                        pivot = v;
                        pivot_degree = deg;
                    }
                });

                if (pivot_degree == 0) {
                    expand(0, chosen | p, size + popcount(p));
                    return;
                }
                expand(p & ~bit(pivot) & ~g.neighbors(pivot), chosen | bit(pivot), size + 1);
                expand(p & ~bit(pivot), chosen, size);
            }
        };
    }

    auto max_independent_set(const Graph & g) -> VertexSet
    {
        Search search{g};
        search.expand(g.vertices(), 0, 0);
        return VertexSet{search.best};
    }

    auto independence_number(const Graph & g) -> int
    {
        return max_independent_set(g).size();
    }

    auto graph_stats(const Graph & g) -> GraphStats
    {
        return GraphStats{g.order(), g.regular_degree(), independence_number(g), g.edge_count()};
    }
}

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace indep
{
    auto random_maximal_independent_set(const Graph & g, std::uint64_t seed) -> VertexSet
    {
        std::vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        VertexMask chosen = 0, blocked = 0;
        for (int v : order)
            if (! (blocked & bit(v))) {
                chosen |= bit(v);
                blocked |= bit(v) | g.neighbors(v);
            }
        return VertexSet{chosen};
    }
}

#pragma once

#include <indep/graph.hpp>

#include <cstdint>

namespace indep
{
    /// K_{d,d} with sides {0..d-1} and {d..2d-1}.
    auto gen_complete_bipartite(int d) -> Graph;

    /// m disjoint copies of K_{d,d}.
    auto gen_kdd_union(int m, int d) -> Graph;

    auto gen_cycle(int n) -> Graph;
    auto gen_complete(int n) -> Graph;

    /// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    auto gen_petersen() -> Graph;

    auto gen_path(int n) -> Graph;

    /// Rejection attempts before gen_random_regular gives up.
    inline constexpr int random_regular_retry_cap = 10'000;

    /// Uniform simple d-regular graph on n vertices via the pairing model,
    /// rejecting pairings with loops or parallel edges. Deterministic in seed.
    auto gen_random_regular(int n, int d, std::uint64_t seed) -> Graph;
}

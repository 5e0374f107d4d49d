#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace indep
{
#ifdef INDEP_WIDE_MASKS
    using VertexMask = unsigned __int128;
#else
    using VertexMask = std::uint64_t;
#endif

    /// Maximum number of vertices a Graph can hold: one bit per vertex.
    inline constexpr int mask_capacity = static_cast<int>(sizeof(VertexMask) * 8);

    constexpr auto bit(int v) -> VertexMask
    {
        return VertexMask{1} << v;
    }

    /// Mask with bits 0..n-1 set.
    constexpr auto first_n(int n) -> VertexMask
    {
        return n >= mask_capacity ? ~VertexMask{0} : bit(n) - 1;
    }

    constexpr auto popcount(VertexMask m) -> int
    {
#ifdef INDEP_WIDE_MASKS
        return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
#else
        return std::popcount(m);
#endif
    }

    /// Index of the lowest set bit; m must be nonzero.
    constexpr auto lowest(VertexMask m) -> int
    {
#ifdef INDEP_WIDE_MASKS
        auto lo = static_cast<std::uint64_t>(m);
        return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
#else
        return std::countr_zero(m);
#endif
    }

    template <typename F>
    constexpr void for_each_bit(VertexMask m, F && f)
    {
        while (m) {
            int v = lowest(m);
            m &= m - 1;
            f(v);
        }
    }

    struct MaskHash
    {
        auto operator()(VertexMask m) const noexcept -> std::size_t
        {
#ifdef INDEP_WIDE_MASKS
            auto lo = static_cast<std::uint64_t>(m), hi = static_cast<std::uint64_t>(m >> 64);
            return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
#else
            // splitmix64 finaliser; std::hash on integers is the identity
            std::uint64_t z = m + 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return static_cast<std::size_t>(z ^ (z >> 31));
#endif
        }
    };
}

#pragma once

#include <indep/bounds.hpp>
#include <indep/graph.hpp>
#include <indep/rational.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace indep
{
    /// floor(sqrt(d log2 d)) clamped to [1, d-1]; d >= 2.
    auto phi_default(int d) -> int;

    /// The T/D pair for one independent set I. T is grown greedily from I
    /// (lowest eligible vertex first) while some u in I still has at least phi
    /// neighbours outside N(T); D = {v not in N(T) : |N(v) \ N(T)| < phi}.
    struct CoverCertificate
    {
        VertexSet T;
        VertexSet D;
        int phi = 0;
        VertexSet source_independent_set;
        std::vector<int> trace;  ///< u_1, u_2, ... in the order chosen
    };

    auto build_cover(const Graph & g, VertexSet independent, int phi) -> CoverCertificate;

    /// D as a function of T alone.
    auto derive_cover_set(const Graph & g, VertexSet T, int phi) -> VertexSet;

    enum class CoverFault
    {
        none,
        bad_input,           ///< graph not regular, phi out of range, I not independent
        trace_mismatch,      ///< trace is not T, or a step was not eligible when taken
        t_not_in_i,          ///< T must be a subset of I
        t_too_large,         ///< |T| * phi > N
        stopped_early,       ///< some u in I still has >= phi neighbours outside N(T)
        d_mismatch,          ///< D differs from the set re-derived from T
        d_meets_neighborhood,///< D intersects N(T)
        i_not_in_d,          ///< I must be a subset of D
        d_too_large          ///< |D| (2d - phi) > N d
    };

    auto to_string(CoverFault fault) -> std::string;

    struct CoverVerdict
    {
        CoverFault fault = CoverFault::none;
        std::string detail;

        auto ok() const -> bool { return fault == CoverFault::none; }
    };

    /// Re-checks every certificate invariant from scratch using only g and the
    /// certificate's own fields.
    auto verify_cover(const Graph & g, const CoverCertificate & cert) -> CoverVerdict;

    struct CoverCountBound
    {
        /// sum_{t <= n/phi} C(n, t) (1 + lambda n d / ((2d - phi) alpha))^alpha, exact.
        BoundReport exact;
        /// The same bound after the (1 + lambda n / 2 alpha)^alpha (2d/(2d - phi))^n
        /// and 2^(3 n log2(e phi) / phi) relaxations; log2 only.
        BoundReport relaxed;
    };

    auto cover_count_bound(int n, int d, int alpha, const Rational & lambda, int phi) -> CoverCountBound;

    /// (1 + lambda n / 2 alpha)^alpha * 2^(c n sqrt(log2 d / d)), log2 only.
    auto lemma3_bound(int n, int d, int alpha, const Rational & lambda, double c) -> BoundReport;

    auto to_json(const CoverCertificate & cert) -> nlohmann::json;
}

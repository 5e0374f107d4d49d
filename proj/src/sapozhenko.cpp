#include <indep/sapozhenko.hpp>
#include <indep/error.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace indep
{
    namespace
    {
        /// Degree of a regular graph suitable for the cover construction, or an
        /// explanation of why it is not.
        auto check_cover_input(const Graph & g, VertexSet independent, int phi) -> std::string
        {
            if (! g.is_independent(independent.bits))
                return "vertex set is not independent";
            auto d = g.regular_degree();
            if (! d || *d < 2)
                return "graph is not d-regular with d >= 2";
            if (phi <= 0 || phi >= *d)
                return "phi = " + std::to_string(phi) + " outside (0, " + std::to_string(*d) + ")";
            return {};
        }

        auto outside(const Graph & g, int u, VertexMask covered) -> int
        {
            return popcount(g.neighbors(u) & ~covered);
        }
    }

    auto phi_default(int d) -> int
    {
        if (d < 2)
            throw DomainError("phi_default needs d >= 2, got " + std::to_string(d));
        double x = d * std::log2(static_cast<double>(d));
        int r = static_cast<int>(std::sqrt(x));
        while (static_cast<double>(r + 1) * (r + 1) <= x)
            ++r;
        while (r > 0 && static_cast<double>(r) * r > x)
            --r;
        return std::clamp(r, 1, d - 1);
    }

    auto derive_cover_set(const Graph & g, VertexSet T, int phi) -> VertexSet
    {
        VertexMask covered = g.neighborhood(T.bits);
        VertexMask d = 0;
        for_each_bit(g.vertices() & ~covered, [&](int v) {
            if (outside(g, v, covered) < phi)
                d |= bit(v);
        });
        return VertexSet{d};
    }

    auto build_cover(const Graph & g, VertexSet independent, int phi) -> CoverCertificate
    {
        if (auto why = check_cover_input(g, independent, phi); ! why.empty())
            throw DomainError("build_cover: " + why);

        CoverCertificate cert;
        cert.phi = phi;
        cert.source_independent_set = independent;

        VertexMask covered = 0;
        for (;;) {
            int next = -1;
            for_each_bit(independent.bits & ~cert.T.bits, [&](int u) {
                if (next < 0 && outside(g, u, covered) >= phi)
                    next = u;
            });
            if (next < 0)
                break;
            cert.trace.push_back(next);
            cert.T.bits |= bit(next);
            covered |= g.neighbors(next);
        }
        cert.D = derive_cover_set(g, cert.T, phi);
        return cert;
    }

    auto to_string(CoverFault fault) -> std::string
    {
        switch (fault) {
            case CoverFault::none: return "ok";
            case CoverFault::bad_input: return "bad_input";
            case CoverFault::trace_mismatch: return "trace_mismatch";
            case CoverFault::t_not_in_i: return "t_not_in_i";
            case CoverFault::t_too_large: return "t_too_large";
            case CoverFault::stopped_early: return "stopped_early";
            case CoverFault::d_mismatch: return "d_mismatch";
            case CoverFault::d_meets_neighborhood: return "d_meets_neighborhood";
            case CoverFault::i_not_in_d: return "i_not_in_d";
            case CoverFault::d_too_large: return "d_too_large";
        }
        return "unknown";
    }

    auto verify_cover(const Graph & g, const CoverCertificate & cert) -> CoverVerdict
    {
        const auto & I = cert.source_independent_set;
        if (auto why = check_cover_input(g, I, cert.phi); ! why.empty())
            return {CoverFault::bad_input, why};
        if ((cert.T.bits | cert.D.bits) & ~g.vertices())
            return {CoverFault::bad_input, "certificate mentions vertices outside the graph"};

        const long n = g.order(), d = *g.regular_degree(), phi = cert.phi;

        if (cert.T.bits & ~I.bits)
            return {CoverFault::t_not_in_i, "T contains a vertex outside I"};

        VertexMask replay = 0, covered = 0;
        for (int u : cert.trace) {
            if (u < 0 || u >= n || (replay & bit(u)))
                return {CoverFault::trace_mismatch, "trace repeats or leaves the graph at vertex " + std::to_string(u)};
            if (outside(g, u, covered) < phi)
                return {CoverFault::trace_mismatch, "vertex " + std::to_string(u) + " was not eligible when added"};
            replay |= bit(u);
            covered |= g.neighbors(u);
        }
        if (replay != cert.T.bits)
            return {CoverFault::trace_mismatch, "trace does not list exactly the vertices of T"};

        if (cert.T.size() * phi > n)
            return {CoverFault::t_too_large, "|T| * phi = " + std::to_string(cert.T.size() * phi) + " > N = " + std::to_string(n)};

        int eligible = -1;
        for_each_bit(I.bits, [&](int u) {
            if (eligible < 0 && outside(g, u, covered) >= phi)
                eligible = u;
        });
        if (eligible >= 0)
            return {CoverFault::stopped_early, "vertex " + std::to_string(eligible) + " of I still has >= phi neighbours outside N(T)"};

        if (cert.D.bits & covered)
            return {CoverFault::d_meets_neighborhood, "D intersects N(T)"};
        if (derive_cover_set(g, cert.T, cert.phi) != cert.D)
            return {CoverFault::d_mismatch, "D differs from the set derived from T"};
        if (I.bits & ~cert.D.bits)
            return {CoverFault::i_not_in_d, "I is not contained in D"};
        if (cert.D.size() * (2 * d - phi) > n * d)
            return {CoverFault::d_too_large, "|D| (2d - phi) exceeds N d"};
        return {};
    }

    auto cover_count_bound(int n, int d, int alpha, const Rational & lambda, int phi) -> CoverCountBound
    {
        if (! (0 < phi && phi < d && d <= n))
            throw DomainError("cover_count_bound needs 0 < phi < d <= n");
        if (alpha < 1 || alpha > n)
            throw DomainError("cover_count_bound needs 1 <= alpha <= n");
        if (lambda <= 0)
            throw DomainError("activity lambda must be positive");

        BigInt seeds = 0;
        for (int t = 0; t <= n / phi; ++t) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, t);
            seeds += binom;
        }
        Rational inner = Rational(1) + lambda * n * d / (Rational(2 * d - phi) * alpha);
        PowerProduct pp;
        pp.times(Rational(seeds), 1).times(inner, alpha);

        CoverCountBound out;
        out.exact.name = "cover_count_exact";
        out.exact.exact = pp.resolve();
        out.exact.log2_value = pp.log2();
        out.exact.constants["phi"] = phi;

        double lam = lambda.get_d();
        out.relaxed.name = "cover_count_relaxed";
        out.relaxed.log2_value = alpha * std::log2(1.0 + lam * n / (2.0 * alpha))
            + n * std::log2(2.0 * d / (2.0 * d - phi))
            + 3.0 * n * std::log2(std::numbers::e * phi) / phi;
        out.relaxed.constants["phi"] = phi;
        return out;
    }

    auto lemma3_bound(int n, int d, int alpha, const Rational & lambda, double c) -> BoundReport
    {
        if (d < 2 || alpha < 1 || alpha > n)
            throw DomainError("lemma3_bound needs d >= 2 and 1 <= alpha <= n");
        if (lambda <= 0 || c <= 0)
            throw DomainError("lemma3_bound needs positive lambda and c");
        BoundReport r;
        r.name = "lemma3";
        r.log2_value = alpha * log2_of(Rational(1) + lambda * n / (2 * alpha)) + c * n * sqrt_log_ratio(d);
        r.constants["c"] = c;
        return r;
    }

    auto to_json(const CoverCertificate & cert) -> nlohmann::json
    {
        return {
            {"phi", cert.phi},
            {"I", cert.source_independent_set.members()},
            {"T", cert.T.members()},
            {"D", cert.D.members()},
            {"trace", cert.trace},
        };
    }
}

#include <indep/bounds.hpp>
#include <indep/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace indep
{
    namespace
    {
        void require(bool ok, const std::string & what)
        {
            if (! ok)
                throw DomainError(what);
        }

        void require_positive(const Rational & lambda)
        {
            require(lambda > 0, "activity lambda must be positive, got " + to_string(lambda));
        }

        void require_degree(int n, int d, int min_d = 1)
        {
            require(n >= 0, "vertex count must be nonnegative, got " + std::to_string(n));
            require(d >= min_d, "degree must be at least " + std::to_string(min_d) + ", got " + std::to_string(d));
        }

        auto make(std::string name, double log2_value) -> BoundReport
        {
            BoundReport r;
            r.name = std::move(name);
            r.log2_value = log2_value;
            return r;
        }

        auto make_exact(std::string name, const PowerProduct & pp, double log2_value) -> BoundReport
        {
            BoundReport r = make(std::move(name), log2_value);
            r.exact = pp.resolve();
            return r;
        }
    }

    auto BoundReport::exact_value() const -> std::optional<Rational>
    {
        if (exact && exact->exponent == 1)
            return exact->value;
        return std::nullopt;
    }

    auto compare(BoundReport report, const Rational & actual) -> BoundReport
    {
        if (report.exact) {
            Rational lhs = pow(actual, report.exact->exponent);
            report.holds_exact = lhs <= report.exact->value;
            report.equality = lhs == report.exact->value;
        }
        report.margin_log2 = report.log2_value - log2_of(actual);
        return report;
    }

    auto to_json(const BoundReport & r) -> nlohmann::json
    {
        nlohmann::json j;
        j["name"] = r.name;
        j["log2_value"] = r.log2_value;
        if (auto v = r.exact_value())
            j["exact_value"] = to_string(*v);
        else if (r.exact)
            j["exact_power"] = {{"exponent", r.exact->exponent}, {"value", to_string(r.exact->value)}};
        if (r.holds_exact)
            j["holds_exact"] = *r.holds_exact;
        if (r.equality)
            j["equality"] = *r.equality;
        if (r.margin_log2)
            j["margin_log2"] = *r.margin_log2;
        j["constants"] = nlohmann::json::object();
        for (const auto & [k, v] : r.constants)
            j["constants"][k] = v;
        return j;
    }

    auto PowerProduct::times(const Rational & base, long num, long den) -> PowerProduct &
    {
        if (num < 0 || den <= 0)
            throw DomainError("PowerProduct exponents must be nonnegative fractions");
        if (num == 0 || base == 1)
            return *this;
        auto same = std::find_if(factors_.begin(), factors_.end(), [&](const Factor & f) { return f.base == base; });
        if (same != factors_.end()) {
            num = same->num * den + num * same->den;
            den *= same->den;
            factors_.erase(same);
        }
        long g = std::gcd(num, den);
        factors_.push_back({base, num / g, den / g});
        return *this;
    }

    auto PowerProduct::resolve() const -> ExactPower
    {
        unsigned long k = 1;
        for (const auto & f : factors_)
            k = std::lcm(k, static_cast<unsigned long>(f.den));
        Rational value = 1;
        for (const auto & f : factors_)
            value *= pow(f.base, static_cast<unsigned long>(f.num) * (k / static_cast<unsigned long>(f.den)));
        value.canonicalize();
        return {k, value};
    }

    auto PowerProduct::log2() const -> double
    {
        double sum = 0.0;
        for (const auto & f : factors_)
            sum += static_cast<double>(f.num) / static_cast<double>(f.den) * log2_of(f.base);
        return sum;
    }

    auto sqrt_log_ratio(int d) -> double
    {
        return std::sqrt(std::log2(static_cast<double>(d)) / d);
    }

    auto alekseev_bound(int n, int alpha) -> BoundReport
    {
        auto r = alekseev_weighted_bound(n, alpha, Rational(1));
        r.name = "alekseev";
        return r;
    }

    auto alekseev_weighted_bound(int n, int alpha, const Rational & lambda) -> BoundReport
    {
        require_positive(lambda);
        require(n >= 0 && alpha >= 0 && alpha <= n, "need 0 <= alpha <= n, got n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
        require(alpha > 0 || n == 0, "alpha = 0 is undefined for a nonempty graph");
        PowerProduct pp;
        if (alpha > 0)
            pp.times(Rational(1) + lambda * n / alpha, alpha);
        return make_exact("alekseev_weighted", pp, pp.log2());
    }

    auto alon_bound(int n, int d, double C) -> BoundReport
    {
        require_degree(n, d);
        require(C > 0, "constant C must be positive");
        auto r = make("alon", n / 2.0 * (1.0 + C / std::pow(static_cast<double>(d), 0.1)));
        r.constants["C"] = C;
        return r;
    }

    auto sapozhenko_simple_bound(int n, int d, double C) -> BoundReport
    {
        require_degree(n, d);
        require(C > 0, "constant C must be positive");
        auto r = make("sapozhenko_simple", n / 2.0 * (1.0 + C * sqrt_log_ratio(d)));
        r.constants["C"] = C;
        return r;
    }

    auto kahn_bound(int n, int d) -> BoundReport
    {
        require_degree(n, d);
        PowerProduct pp;
        pp.times(Rational(2), static_cast<long>(n) * (d + 2), 2L * d);
        return make_exact("kahn", pp, n / 2.0 * (1.0 + 2.0 / d));
    }

    auto weighted_kahn_bound(int n, int d, const Rational & lambda) -> BoundReport
    {
        require_degree(n, d);
        require_positive(lambda);
        PowerProduct pp;
        pp.times(Rational(1) + lambda, n, 2).times(Rational(2), n, d);
        return make_exact("weighted_kahn", pp, n / 2.0 * log2_of(Rational(1) + lambda) + static_cast<double>(n) / d);
    }

    auto conjecture_bound(int n, int d) -> BoundReport
    {
        require_degree(n, d);
        BigInt base = pow(BigInt(2), d + 1) - 1;
        PowerProduct pp;
        pp.times(Rational(base), n, 2L * d);
        return make_exact("conjecture1", pp, n / (2.0 * d) * log2_of(base));
    }

    auto conjecture1_holds_exact(const BigInt & i, int n, int d) -> bool
    {
        require_degree(n, d);
        require(i >= 1, "independent set count must be at least 1");
        return pow(i, 2UL * d) <= pow(BigInt(pow(BigInt(2), d + 1) - 1), n);
    }

    auto kdd_weighted_bound(int n, int d, const Rational & lambda) -> BoundReport
    {
        require_degree(n, d);
        require_positive(lambda);
        Rational base = 2 * pow(Rational(1) + lambda, d) - 1;
        PowerProduct pp;
        pp.times(base, n, 2L * d);
        return make_exact("weighted_conjecture", pp, n / (2.0 * d) * log2_of(base));
    }

    auto weighted_conjecture_holds_exact(const Rational & p, int n, int d, const Rational & lambda) -> bool
    {
        require_degree(n, d);
        require_positive(lambda);
        Rational base = 2 * pow(Rational(1) + lambda, d) - 1;
        return pow(p, 2UL * d) <= pow(base, n);
    }

    // Both theorem evaluators share the form n/2 * log2(1+lambda) + n/(2d) * (1 + K s)
    // so that lambda = 1 reproduces theorem2_bound bit for bit.
    auto theorem2_bound(int n, int d, double C) -> BoundReport
    {
        require_degree(n, d, 2);
        require(C > 0, "constant C must be positive");
        auto r = make("theorem2", n / 2.0 + n / (2.0 * d) * (1.0 + C * sqrt_log_ratio(d)));
        r.constants["C"] = C;
        return r;
    }

    auto theorem4_bound(int n, int d, const Rational & lambda, double C_lambda) -> BoundReport
    {
        require_degree(n, d, 2);
        require_positive(lambda);
        require(C_lambda > 0, "constant C_lambda must be positive");
        auto r = make("theorem4", n / 2.0 * log2_of(Rational(1) + lambda) + n / (2.0 * d) * (1.0 + C_lambda * sqrt_log_ratio(d)));
        r.constants["C_lambda"] = C_lambda;
        return r;
    }

    auto c_lambda_from_c(double lambda, double c) -> double
    {
        require(lambda > 0 && std::isfinite(lambda), "lambda must be positive and finite");
        require(c > 0, "constant c must be positive");
        double gap = std::log1p(lambda) - lambda / (1.0 + lambda);
        return 2.0 * c * std::log(2.0) / gap;
    }

    auto order_bound(const Graph & g, std::span<const int> order, const Rational & lambda) -> OrderBound
    {
        require_positive(lambda);
        auto d = g.regular_degree();
        require(d && *d >= 1, "order bound needs a d-regular graph with d >= 1");
        require(static_cast<int>(order.size()) == g.order(), "order must list every vertex exactly once");
        VertexMask seen = 0;
        for (int v : order) {
            require(v >= 0 && v < g.order() && ! (seen & bit(v)), "order is not a permutation of the vertices");
            seen |= bit(v);
        }

        OrderBound out;
        out.predecessors.assign(g.order(), 0);
        Rational product = 1;
        double log2_sum = 0.0;
        VertexMask earlier = 0;
        std::size_t total = 0;
        Rational one_plus = Rational(1) + lambda;
        for (int v : order) {
            int p = popcount(g.neighbors(v) & earlier);
            out.predecessors[v] = p;
            total += p;
            Rational factor = 2 * pow(one_plus, p) - 1;
            product *= factor;
            log2_sum += log2_of(factor);
            earlier |= bit(v);
        }
        if (total != g.edge_count())
            throw std::logic_error("predecessor counts do not sum to the edge count");

        // kept at exponent d so the witness is the product itself
        out.report = make("lemma1_order", log2_sum / *d);
        out.report.exact = ExactPower{static_cast<unsigned long>(*d), product};
        return out;
    }

    auto independent_first_order(const Graph & g, VertexSet first) -> std::vector<int>
    {
        std::vector<int> order = first.members();
        for_each_bit(g.vertices() & ~first.bits, [&](int v) { order.push_back(v); });
        return order;
    }

    auto independent_first_bound(int n, int d, int alpha, const Rational & lambda) -> BoundReport
    {
        require_degree(n, d);
        require_positive(lambda);
        require(alpha >= 0 && 2 * alpha <= n, "independent-first bound needs 0 <= alpha <= n/2, got alpha=" + std::to_string(alpha) + " n=" + std::to_string(n));
        PowerProduct pp;
        pp.times(Rational(1) + lambda, n, 2).times(Rational(2), n - alpha, d);
        return make_exact("independent_first", pp, n / 2.0 * log2_of(Rational(1) + lambda) + static_cast<double>(n - alpha) / d);
    }

    auto binary_entropy(double x) -> double
    {
        require(x >= 0.0 && x <= 1.0, "binary entropy argument must lie in [0, 1]");
        auto term = [](double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); };
        return term(x) + term(1.0 - x);
    }

    namespace
    {
        auto fixed_size_common(const char * name, int n, int d, int t, double extra) -> BoundReport
        {
            require_degree(n, d);
            require(n >= 1, "fixed-size bounds need n >= 1");
            require(t >= 0 && t <= n, "need 0 <= t <= n, got t=" + std::to_string(t) + " n=" + std::to_string(n));
            if (2 * t > n) {
                // density beyond 1: a d-regular graph (d >= 1) has alpha <= n/2
                auto r = make(name, -std::numeric_limits<double>::infinity());
                r.exact = ExactPower{1, Rational(0)};
                return r;
            }
            double density = 2.0 * t / n;
            return make(name, n / 2.0 * (binary_entropy(density) + extra));
        }
    }

    auto fixed_size_bound(int n, int d, int t, bool bipartite) -> BoundReport
    {
        require_degree(n, d);
        return fixed_size_common(bipartite ? "fixed_size_bipartite" : "fixed_size_general", n, d, t, (bipartite ? 1.0 : 2.0) / d);
    }

    auto improved_fixed_size_bound(int n, int d, int t, double c_alpha) -> BoundReport
    {
        require_degree(n, d);
        require(c_alpha > 0, "constant c_alpha must be positive");
        auto r = fixed_size_common("fixed_size_improved", n, d, t, 1.0 / d + c_alpha / d * sqrt_log_ratio(d));
        r.constants["c_alpha"] = c_alpha;
        return r;
    }

    auto kdd_union_fixed_size(int m, int d) -> IndependencePolynomial
    {
        require(m >= 1 && d >= 1, "need m >= 1 and d >= 1");
        std::vector<BigInt> base(d + 1);
        base[0] = 1;
        for (int k = 1; k <= d; ++k) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), d, k);
            base[k] = 2 * binom;
        }
        IndependencePolynomial one(std::move(base));
        IndependencePolynomial out;
        for (int i = 0; i < m; ++i)
            out = poly_product(out, one);
        return out;
    }

    auto fixed_size_conjecture_violation(const IndependencePolynomial & p, int n, int d) -> std::optional<int>
    {
        require_degree(n, d);
        require(n > 0 && n % (2 * d) == 0, "fixed-size comparison needs 2d | n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
        auto target = kdd_union_fixed_size(n / (2 * d), d);
        for (int t = 0; t <= p.degree(); ++t)
            if (p.coefficient(t) > target.coefficient(t))
                return t;
        return std::nullopt;
    }

    auto kdd_exponent_expansion(int d) -> ExponentExpansion
    {
        require(d >= 1, "degree must be at least 1");
        double exact = log2_of(BigInt(pow(BigInt(2), d + 1) - 1)) / d;
        double expansion = 1.0 + 1.0 / d - 1.0 / (2.0 * std::log(2.0) * d * std::ldexp(1.0, d));
        return {exact, expansion};
    }
}

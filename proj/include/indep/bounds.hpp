#pragma once

#include <indep/graph.hpp>
#include <indep/polynomial.hpp>
#include <indep/rational.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indep
{
    /// bound^exponent == value, exactly. Bounds with fractional exponents
    /// (N/2d, N/d, 1/d, ...) are certified by comparing actual^exponent to value.
    struct ExactPower
    {
        unsigned long exponent = 1;
        Rational value;
    };

    /// A named upper bound. log2_value is always set; `exact` is present when
    /// some integer power of the bound is rational. holds_exact, equality and
    /// margin_log2 are filled in by compare().
    struct BoundReport
    {
        std::string name;
        double log2_value = 0.0;
        std::optional<ExactPower> exact;
        std::optional<bool> holds_exact;
        std::optional<bool> equality;
        std::optional<double> margin_log2;
        std::map<std::string, double> constants;

        /// The bound itself, when it is rational.
        auto exact_value() const -> std::optional<Rational>;
    };

    /// Compares a nonnegative quantity against the bound: exactly when the
    /// report carries an exact power, otherwise in the log2 domain with
    /// relative tolerance log2_tolerance.
    auto compare(BoundReport report, const Rational & actual) -> BoundReport;

    inline constexpr double log2_tolerance = 1e-9;

    auto to_json(const BoundReport & r) -> nlohmann::json;

    /// Collects base^(num/den) factors and resolves them to an ExactPower with
    /// the least common exponent clearing every denominator.
    class PowerProduct
    {
    public:
        auto times(const Rational & base, long num, long den = 1) -> PowerProduct &;
        auto resolve() const -> ExactPower;
        auto log2() const -> double;

    private:
        struct Factor
        {
            Rational base;
            long num, den;
        };
        std::vector<Factor> factors_;
    };

    /// Universal constants the bounds leave unspecified. C_lambda and c_alpha
    /// default to c_lambda_from_c(lambda, c) when unset.
    struct Constants
    {
        double C = 2.0;
        double c = 1.0;
        std::optional<double> C_lambda;
        std::optional<double> c_alpha;
    };

    /// sqrt(log2 d / d), the correction rate shared by several bounds.
    auto sqrt_log_ratio(int d) -> double;

    auto alekseev_bound(int n, int alpha) -> BoundReport;
    auto alekseev_weighted_bound(int n, int alpha, const Rational & lambda) -> BoundReport;

    auto alon_bound(int n, int d, double C) -> BoundReport;
    auto sapozhenko_simple_bound(int n, int d, double C) -> BoundReport;

    auto kahn_bound(int n, int d) -> BoundReport;
    auto weighted_kahn_bound(int n, int d, const Rational & lambda) -> BoundReport;

    auto conjecture_bound(int n, int d) -> BoundReport;
    /// i^(2d) <= (2^(d+1) - 1)^n.
    auto conjecture1_holds_exact(const BigInt & i, int n, int d) -> bool;

    auto kdd_weighted_bound(int n, int d, const Rational & lambda) -> BoundReport;
    /// p^(2d) <= (2(1+lambda)^d - 1)^n.
    auto weighted_conjecture_holds_exact(const Rational & p, int n, int d, const Rational & lambda) -> bool;

    auto theorem2_bound(int n, int d, double C) -> BoundReport;
    auto theorem4_bound(int n, int d, const Rational & lambda, double C_lambda) -> BoundReport;

    /// Solves (ln(1+lambda) - lambda/(1+lambda)) * C_lambda / (2 ln 2) = c.
    auto c_lambda_from_c(double lambda, double c) -> double;

    struct OrderBound
    {
        BoundReport report;
        std::vector<int> predecessors;  ///< p(v): neighbours of v earlier in the order
    };

    /// prod_v (2(1+lambda)^p(v) - 1)^(1/d) for a d-regular graph and a vertex
    /// order; the exact power has exponent d.
    auto order_bound(const Graph & g, std::span<const int> order, const Rational & lambda) -> OrderBound;

    /// Order listing `first` before every other vertex (both parts ascending).
    auto independent_first_order(const Graph & g, VertexSet first) -> std::vector<int>;

    /// (1+lambda)^(n/2) * 2^((n - alpha)/d).
    auto independent_first_bound(int n, int d, int alpha, const Rational & lambda) -> BoundReport;

    auto binary_entropy(double x) -> double;

    /// Fixed-size bound on i_t with density 2t/n: (n/2)(H + 2/d), or
    /// (n/2)(H + 1/d) when bipartite.
    auto fixed_size_bound(int n, int d, int t, bool bipartite) -> BoundReport;
    auto improved_fixed_size_bound(int n, int d, int t, double c_alpha) -> BoundReport;

    /// Coefficients of (2(1+x)^d - 1)^m, built by convolution.
    auto kdd_union_fixed_size(int m, int d) -> IndependencePolynomial;

    /// First t with i_t(G) > i_t((n/2d) K_{d,d}), if any. Requires 2d | n.
    auto fixed_size_conjecture_violation(const IndependencePolynomial & p, int n, int d) -> std::optional<int>;

    struct ExponentExpansion
    {
        double exact_per_pair_exponent;  ///< (1/d) log2(2^(d+1) - 1)
        double expansion;                ///< 1 + 1/d - 1/((2 ln 2) d 2^d)
    };

    auto kdd_exponent_expansion(int d) -> ExponentExpansion;
}

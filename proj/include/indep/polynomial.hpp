#pragma once

#include <indep/graph.hpp>
#include <indep/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace indep
{
    /// Coefficient t counts independent sets of size t. Trailing zeros are
    /// trimmed, so degree() is the independence number for a graph polynomial.
    class IndependencePolynomial
    {
    public:
        /// The polynomial 1: the empty graph.
        IndependencePolynomial();
        explicit IndependencePolynomial(std::vector<BigInt> coeffs);

        auto coeffs() const -> const std::vector<BigInt> & { return coeffs_; }
        auto degree() const -> int { return static_cast<int>(coeffs_.size()) - 1; }

        /// i_t; zero beyond the degree.
        auto coefficient(int t) const -> BigInt;

        /// Value at lambda = 1, i.e. the number of independent sets.
        auto total() const -> BigInt;

        auto operator+=(const IndependencePolynomial & other) -> IndependencePolynomial &;

        friend auto operator==(const IndependencePolynomial &, const IndependencePolynomial &) -> bool = default;

    private:
        std::vector<BigInt> coeffs_;
    };

    struct PolynomialOptions
    {
        /// Residual-mask memo entries kept per call; inserts stop once full.
        std::size_t memo_cap = std::size_t{1} << 22;
    };

    /// Exact P(x, G) by the vertex recurrence P(G) = P(G - v) + x P(G - N[v]),
    /// pivoting on a maximum-degree vertex, factoring over connected
    /// components at every node, with memoisation on the residual vertex mask.
    auto independence_polynomial(const Graph & g, const PolynomialOptions & options = {}) -> IndependencePolynomial;

    inline constexpr int brute_force_budget = 24;

    /// Reference oracle: enumerates all 2^n vertex subsets. n <= brute_force_budget.
    auto brute_force_polynomial(const Graph & g) -> IndependencePolynomial;

    auto poly_product(const IndependencePolynomial & p, const IndependencePolynomial & q) -> IndependencePolynomial;

    /// Shift by one degree (multiplication by x).
    auto poly_shift(const IndependencePolynomial & p) -> IndependencePolynomial;

    auto evaluate(const IndependencePolynomial & p, const Rational & lambda) -> Rational;

    auto count_independent_sets(const Graph & g) -> BigInt;

    /// {"n": i_1, "coeffs": ["1", "5", "5"]}; decimal strings keep full precision.
    auto to_json(const IndependencePolynomial & p) -> nlohmann::json;
    auto polynomial_from_json(const nlohmann::json & j) -> IndependencePolynomial;
}

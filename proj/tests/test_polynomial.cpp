#include "support.hpp"

#include <indep/error.hpp>
#include <indep/generators.hpp>
#include <indep/mis.hpp>
#include <indep/polynomial.hpp>

#include <doctest.h>

using namespace indep;

namespace
{
    auto poly(std::initializer_list<long> cs) -> IndependencePolynomial
    {
        std::vector<BigInt> v;
        for (long c : cs)
            v.emplace_back(c);
        return IndependencePolynomial(std::move(v));
    }

    auto from_counts(const std::vector<std::uint64_t> & counts) -> IndependencePolynomial
    {
        std::vector<BigInt> v;
        for (auto c : counts)
            v.emplace_back(static_cast<unsigned long>(c));
        return IndependencePolynomial(std::move(v));
    }

    /// 2(1+x)^d - 1 from binomials.
    auto kdd_closed_form(int d) -> IndependencePolynomial
    {
        std::vector<BigInt> v{BigInt(1)};
        for (int k = 1; k <= d; ++k) {
            BigInt b;
            mpz_bin_uiui(b.get_mpz_t(), d, k);
            v.push_back(2 * b);
        }
        return IndependencePolynomial(std::move(v));
    }
}

TEST_CASE("independence polynomial of named graphs")
{
    CHECK(independence_polynomial(gen_complete_bipartite(2)) == poly({1, 4, 2}));
    for (int d = 1; d <= 8; ++d)
        CHECK(independence_polynomial(gen_complete_bipartite(d)) == kdd_closed_form(d));
    for (int n = 1; n <= 8; ++n)
        CHECK(independence_polynomial(gen_complete(n)) == poly({1, n}));

    auto c5 = independence_polynomial(gen_cycle(5));
    CHECK(c5 == poly({1, 5, 5}));
    CHECK(c5.total() == 11);
    CHECK(from_counts(testing::enumerate_counts(gen_cycle(5))) == c5);

    auto petersen = independence_polynomial(gen_petersen());
    CHECK(petersen == poly({1, 10, 30, 30, 5}));
    CHECK(petersen.total() == 76);
    CHECK(from_counts(testing::enumerate_counts(gen_petersen())) == petersen);

    CHECK(independence_polynomial(Graph()) == poly({1}));
}

TEST_CASE("cycle polynomials match the closed form")
{
    for (int n = 3; n <= 40; ++n)
        CHECK(independence_polynomial(gen_cycle(n)) == IndependencePolynomial(testing::cycle_coefficients(n)));
}

TEST_CASE("brute force polynomial")
{
    CHECK(brute_force_polynomial(Graph(3)) == poly({1, 3, 3, 1}));
    CHECK(brute_force_polynomial(gen_complete(3)) == poly({1, 3}));
    CHECK(brute_force_polynomial(gen_cycle(4)) == poly({1, 4, 2}));
    CHECK(from_counts(testing::enumerate_counts(gen_cycle(4))) == poly({1, 4, 2}));
    CHECK_THROWS_AS(brute_force_polynomial(Graph(brute_force_budget + 1)), DomainError);
}

TEST_CASE("branching and enumeration agree on random graphs")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 1 + static_cast<int>(seed % 14);
        auto g = testing::gnp(n, 0.05 + 0.9 * static_cast<double>(seed % 9) / 8.0, seed);
        auto fast = independence_polynomial(g);
        CHECK(fast == from_counts(testing::enumerate_counts(g)));
        CHECK(fast == brute_force_polynomial(g));
        CHECK(fast.degree() == independence_number(g));
        CHECK(fast.coefficient(0) == 1);
        CHECK(fast.coefficient(1) == n);
    }
}

TEST_CASE("memo cap does not change results")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_regular(22, 3, seed);
        auto full = independence_polynomial(g);
        CHECK(independence_polynomial(g, {.memo_cap = 0}) == full);
        CHECK(independence_polynomial(g, {.memo_cap = 7}) == full);
    }
}

TEST_CASE("polynomial of a disjoint union is the product")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = testing::gnp(6 + static_cast<int>(seed % 8), 0.3, seed);
        auto h = gen_random_regular(10, 3, seed);
        CHECK(independence_polynomial(disjoint_union(g, h)) == poly_product(independence_polynomial(g), independence_polynomial(h)));
    }
}

TEST_CASE("poly_product")
{
    CHECK(poly_product(poly({1, 2}), poly({1, 2})) == poly({1, 4, 4}));
    auto k22 = poly({1, 4, 2});
    auto squared = poly_product(k22, k22);
    CHECK(squared == poly({1, 8, 20, 16, 4}));
    CHECK(squared.total() == 49);
    CHECK(poly_product(k22, poly({1})) == k22);
}

TEST_CASE("extremal counts of K_{d,d} unions")
{
    for (int d = 1; d <= 8; ++d)
        for (int m = 1; m <= 3; ++m) {
            if (2 * d * m > mask_capacity)
                continue;
            BigInt expected = pow(BigInt(pow(BigInt(2), d + 1) - 1), m);
            CHECK(count_independent_sets(gen_kdd_union(m, d)) == expected);
        }
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(poly({1, 4, 2}), Rational(1)) == 7);
    CHECK(evaluate(poly({1, 5, 5}), Rational(1, 2)) == Rational(19, 4));
    for (auto p : {poly({1}), poly({1, 5, 5}), poly({1, 10, 30, 30, 5})})
        CHECK(evaluate(p, Rational(0)) == 1);
    for (int d = 1; d <= 8; ++d)
        for (auto l : {Rational(1, 2), Rational(1), Rational(2)})
            CHECK(evaluate(independence_polynomial(gen_complete_bipartite(d)), l) == 2 * pow(Rational(1) + l, d) - 1);
}

TEST_CASE("count_independent_sets")
{
    CHECK(count_independent_sets(gen_cycle(5)) == 11);
    CHECK(count_independent_sets(gen_complete_bipartite(3)) == 15);
    CHECK(count_independent_sets(Graph(1)) == 2);
    auto g = gen_random_regular(16, 4, 3);
    CHECK(count_independent_sets(g) == Rational(evaluate(independence_polynomial(g), Rational(1))));
}

TEST_CASE("counts beyond 64 bits stay exact")
{
    // edgeless graph on 64 vertices: 2^64 independent sets
    CHECK(count_independent_sets(Graph(64)) == pow(BigInt(2), 64));
}

TEST_CASE("polynomial JSON")
{
    auto p = independence_polynomial(gen_cycle(5));
    auto j = to_json(p);
    CHECK(j.dump() == R"({"coeffs":["1","5","5"],"n":5})");
    CHECK(polynomial_from_json(j) == p);

    auto big = independence_polynomial(Graph(64));
    CHECK(polynomial_from_json(to_json(big)) == big);

    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"coeffs":[1,5,5]})")), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"n":4,"coeffs":["1","5","5"]})")), ParseError);
}

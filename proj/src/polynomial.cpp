#include <indep/polynomial.hpp>
#include <indep/error.hpp>

#include <cstdint>
#include <string>
#include <unordered_map>

namespace indep
{
    IndependencePolynomial::IndependencePolynomial() :
        coeffs_{BigInt(1)}
    {
    }

    IndependencePolynomial::IndependencePolynomial(std::vector<BigInt> coeffs) :
        coeffs_(std::move(coeffs))
    {
        while (coeffs_.size() > 1 && coeffs_.back() == 0)
            coeffs_.pop_back();
        if (coeffs_.empty())
            coeffs_.emplace_back(0);
    }

    auto IndependencePolynomial::coefficient(int t) const -> BigInt
    {
        return (t >= 0 && t <= degree()) ? coeffs_[t] : BigInt(0);
    }

    auto IndependencePolynomial::total() const -> BigInt
    {
        BigInt sum = 0;
        for (const auto & c : coeffs_)
            sum += c;
        return sum;
    }

    auto IndependencePolynomial::operator+=(const IndependencePolynomial & other) -> IndependencePolynomial &
    {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size());
        for (std::size_t t = 0; t < other.coeffs_.size(); ++t)
            coeffs_[t] += other.coeffs_[t];
        return *this;
    }

    namespace
    {
        class Counter
        {
        public:
            Counter(const Graph & g, std::size_t cap) :
                g_(g),
                cap_(cap)
            {
            }

            auto solve(VertexMask p) -> IndependencePolynomial
            {
                if (! p)
                    return {};
                if (auto it = memo_.find(p); it != memo_.end())
                    return it->second;

                auto comps = g_.components(p);
                IndependencePolynomial result;
                if (comps.size() > 1) {
                    for (auto c : comps)
                        result = poly_product(result, solve(c));
                }
                else
                    result = solve_connected(p);

                if (memo_.size() < cap_)
                    memo_.emplace(p, result);
                return result;
            }

        private:
            auto solve_connected(VertexMask p) -> IndependencePolynomial
            {
                int k = popcount(p);
                int pivot = -1, pivot_degree = -1;
                for_each_bit(p, [&](int v) {
                    int deg = popcount(g_.neighbors(v) & p);
                    if (deg > pivot_degree) {
                        pivot = v;
                        pivot_degree = deg;
                    }
                });

                bool clique = true;
                for_each_bit(p, [&](int v) { clique = clique && popcount(g_.neighbors(v) & p) == k - 1; });
                if (clique)
                    return IndependencePolynomial({BigInt(1), BigInt(k)});

                auto without = solve(p & ~bit(pivot));
                auto with = solve(p & ~bit(pivot) & ~g_.neighbors(pivot));
                without += poly_shift(with);
                return without;
            }

            const Graph & g_;
            std::size_t cap_;
            std::unordered_map<VertexMask, IndependencePolynomial, MaskHash> memo_;
        };
    }

    auto independence_polynomial(const Graph & g, const PolynomialOptions & options) -> IndependencePolynomial
    {
        return Counter(g, options.memo_cap).solve(g.vertices());
    }

    auto brute_force_polynomial(const Graph & g) -> IndependencePolynomial
    {
        int n = g.order();
        if (n > brute_force_budget)
            throw DomainError("brute force enumeration limited to " + std::to_string(brute_force_budget) + " vertices, got " + std::to_string(n));

        // independent[s] for every subset s, built from s minus its lowest vertex
        std::size_t subsets = std::size_t{1} << n;
        std::vector<std::uint8_t> independent(subsets, 0);
        std::vector<std::uint64_t> counts(n + 1, 0);
        independent[0] = 1;
        counts[0] = 1;
        for (std::size_t s = 1; s < subsets; ++s) {
            int v = lowest(static_cast<VertexMask>(s));
            std::size_t rest = s & (s - 1);
            if (independent[rest] && (g.neighbors(v) & static_cast<VertexMask>(s)) == 0) {
                independent[s] = 1;
                ++counts[popcount(static_cast<VertexMask>(s))];
            }
        }

        std::vector<BigInt> coeffs;
        for (auto c : counts)
            coeffs.emplace_back(static_cast<unsigned long>(c));
        return IndependencePolynomial(std::move(coeffs));
    }

    auto poly_product(const IndependencePolynomial & p, const IndependencePolynomial & q) -> IndependencePolynomial
    {
        const auto & a = p.coeffs();
        const auto & b = q.coeffs();
        std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        return IndependencePolynomial(std::move(out));
    }

    auto poly_shift(const IndependencePolynomial & p) -> IndependencePolynomial
    {
        std::vector<BigInt> out;
        out.reserve(p.coeffs().size() + 1);
        out.emplace_back(0);
        out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
        return IndependencePolynomial(std::move(out));
    }

    auto evaluate(const IndependencePolynomial & p, const Rational & lambda) -> Rational
    {
        Rational acc = 0;
        const auto & c = p.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * lambda + Rational(*it);
        acc.canonicalize();
        return acc;
    }

    auto count_independent_sets(const Graph & g) -> BigInt
    {
        return independence_polynomial(g).total();
    }

    auto to_json(const IndependencePolynomial & p) -> nlohmann::json
    {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto & c : p.coeffs())
            coeffs.push_back(to_string(c));
        return {{"n", p.coefficient(1).get_ui()}, {"coeffs", std::move(coeffs)}};
    }

    auto polynomial_from_json(const nlohmann::json & j) -> IndependencePolynomial
    {
        if (! j.is_object() || ! j.contains("coeffs") || ! j["coeffs"].is_array())
            throw ParseError("polynomial JSON needs a \"coeffs\" array");
        std::vector<BigInt> coeffs;
        for (const auto & c : j["coeffs"]) {
            if (! c.is_string())
                throw ParseError("polynomial coefficients must be decimal strings");
            auto r = parse_rational(c.get<std::string>());
            if (r.get_den() != 1 || r < 0)
                throw ParseError("polynomial coefficient is not a nonnegative integer: " + c.get<std::string>());
            coeffs.emplace_back(r.get_num());
        }
        IndependencePolynomial p(std::move(coeffs));
        if (j.contains("n") && j["n"].get<long>() != p.coefficient(1).get_si())
            throw ParseError("polynomial JSON: n disagrees with the linear coefficient");
        return p;
    }
}

#include <indep/harness.hpp>
#include <indep/error.hpp>
#include <indep/graph6.hpp>
#include <indep/polynomial.hpp>
#include <indep/sapozhenko.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace indep
{
    auto to_string(CheckClass c) -> std::string
    {
        switch (c) {
            case CheckClass::must_hold: return "must_hold";
            case CheckClass::conjecture: return "conjecture";
            case CheckClass::info: return "info";
        }
        return "unknown";
    }

    auto to_string(CheckStatus s) -> std::string
    {
        switch (s) {
            case CheckStatus::pass: return "pass";
            case CheckStatus::fail: return "fail";
            case CheckStatus::skipped: return "skipped";
        }
        return "unknown";
    }

    auto VerificationRecord::counterexample() const -> bool
    {
        return std::any_of(checks.begin(), checks.end(), [](const CheckResult & c) {
            return c.check_class == CheckClass::conjecture && c.status == CheckStatus::fail;
        });
    }

    auto VerificationRecord::failed() const -> bool
    {
        return std::any_of(checks.begin(), checks.end(), [](const CheckResult & c) {
            return c.check_class == CheckClass::must_hold && c.status == CheckStatus::fail;
        });
    }

    auto VerificationRecord::status() const -> std::string
    {
        if (error)
            return "error";
        if (failed())
            return "fail";
        if (counterexample())
            return "counterexample";
        return "pass";
    }

    auto all_check_names() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> names{
            "poly_degree", "alpha_half", "alekseev", "lemma2", "kahn", "weighted_kahn", "lemma1",
            "independent_first", "lemma3_cover", "cover_count", "fixed_size",
            "conjecture1", "weighted_conjecture", "conjecture3",
            "alon", "sapozhenko_simple", "theorem2", "theorem4", "lemma3"};
        return names;
    }

    void RunConfig::validate() const
    {
        if (lambdas.empty())
            throw DomainError("at least one activity lambda is required");
        for (const auto & l : lambdas)
            if (l <= 0)
                throw DomainError("activity lambda must be positive, got " + to_string(l));
        if (vertex_cap < 0 || vertex_cap > mask_capacity)
            throw DomainError("vertex cap must lie in [0, " + std::to_string(mask_capacity) + "]");
        if (phi && *phi < 1)
            throw DomainError("phi must be positive");
        if (random_orders < 0)
            throw DomainError("random order count must be nonnegative");
        const auto & known = all_check_names();
        for (const auto & c : checks)
            if (std::find(known.begin(), known.end(), c) == known.end())
                throw DomainError("unknown check '" + c + "'");
    }

    auto RunConfig::enabled(const std::string & family) const -> bool
    {
        return checks.empty() || checks.contains(family);
    }

    namespace
    {
        auto mix(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) -> std::uint64_t
        {
            std::uint64_t z = seed ^ (index * 0x9e3779b97f4a7c15ULL) ^ (stream * 0xd1b54a32d192ed03ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        auto lambda_name(const std::string & family, const Rational & lambda) -> std::string
        {
            return family + "[lambda=" + to_string(lambda) + "]";
        }

        auto log2_holds(const BoundReport & r) -> bool
        {
            return *r.margin_log2 >= -log2_tolerance * std::max(1.0, std::abs(r.log2_value));
        }

        auto from_report(std::string name, CheckClass cls, const BoundReport & r) -> CheckResult
        {
            CheckResult c;
            c.name = std::move(name);
            c.check_class = cls;
            c.holds_exact = r.holds_exact;
            c.equality = r.equality;
            c.margin_log2 = r.margin_log2;
            bool ok = r.holds_exact ? *r.holds_exact : log2_holds(r);
            c.status = ok ? CheckStatus::pass : CheckStatus::fail;
            if (auto v = r.exact_value())
                c.witness = "bound=" + to_string(*v);
            else if (r.exact)
                c.witness = "bound^" + std::to_string(r.exact->exponent) + "=" + to_string(r.exact->value);
            for (const auto & [k, v] : r.constants) {
                std::ostringstream s;
                s << k << "=" << v;
                c.witness += (c.witness.empty() ? "" : " ") + s.str();
            }
            return c;
        }

        auto skipped(std::string name, CheckClass cls, std::string why) -> CheckResult
        {
            CheckResult c;
            c.name = std::move(name);
            c.check_class = cls;
            c.status = CheckStatus::skipped;
            c.witness = std::move(why);
            return c;
        }

        auto fixed(std::string name, CheckClass cls, bool ok, std::string witness) -> CheckResult
        {
            CheckResult c;
            c.name = std::move(name);
            c.check_class = cls;
            c.holds_exact = ok;
            c.status = ok ? CheckStatus::pass : CheckStatus::fail;
            c.witness = std::move(witness);
            return c;
        }

        /// Emits every enabled check exactly once, in a fixed order.
        class Checker
        {
        public:
            Checker(const Graph & g, std::size_t index, const RunConfig & config, VerificationRecord & record) :
                g_(g), index_(index), config_(config), record_(record)
            {
            }

            void run()
            {
                poly_ = independence_polynomial(g_);
                witness_ = max_independent_set(g_);
                n_ = g_.order();
                alpha_ = witness_.size();
                record_.stats = GraphStats{n_, g_.regular_degree(), alpha_, g_.edge_count()};
                record_.independent_sets = to_string(poly_.total());
                d_ = record_.stats.d.value_or(0);
                regular_ = record_.stats.d && d_ >= 1;
                for (const auto & l : config_.lambdas)
                    values_.push_back(evaluate(poly_, l));

                for (const auto & family : all_check_names())
                    if (config_.enabled(family))
                        family_checks(family);
            }

        private:
            void add(CheckResult c) { record_.checks.push_back(std::move(c)); }

            void per_lambda(const std::string & family, CheckClass cls, const std::string & skip_reason, auto && body)
            {
                for (std::size_t i = 0; i < config_.lambdas.size(); ++i) {
                    auto name = lambda_name(family, config_.lambdas[i]);
                    if (! skip_reason.empty())
                        add(skipped(name, cls, skip_reason));
                    else
                        add(body(name, config_.lambdas[i], values_[i]));
                }
            }

            auto regular_reason(int min_d = 1) const -> std::string
            {
                if (! regular_)
                    return "not d-regular with d >= 1";
                if (d_ < min_d)
                    return "needs d >= " + std::to_string(min_d);
                return {};
            }

            auto phi() const -> int
            {
                return config_.phi.value_or(d_ >= 2 ? phi_default(d_) : 1);
            }

            auto cover_reason() const -> std::string
            {
                if (auto why = regular_reason(2); ! why.empty())
                    return why;
                if (phi() >= d_)
                    return "phi >= d";
                return {};
            }

            auto c_lambda(const Rational & lambda) const -> double
            {
                return config_.constants.C_lambda.value_or(c_lambda_from_c(lambda.get_d(), config_.constants.c));
            }

            void family_checks(const std::string & family)
            {
                const auto must = CheckClass::must_hold, conj = CheckClass::conjecture, info = CheckClass::info;
                const Rational total(poly_.total());

                if (family == "poly_degree")
                    add(fixed(family, must, poly_.degree() == alpha_ && poly_.coefficient(1) == n_,
                        "degree=" + std::to_string(poly_.degree()) + " alpha=" + std::to_string(alpha_)));
                else if (family == "alpha_half") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, must, why));
                    else
                        add(fixed(family, must, 2 * alpha_ <= n_, "alpha=" + std::to_string(alpha_) + " n=" + std::to_string(n_)));
                }
                else if (family == "alekseev") {
                    if (n_ == 0)
                        add(skipped(family, must, "empty graph"));
                    else
                        add(from_report(family, must, compare(alekseev_bound(n_, alpha_), total)));
                }
                else if (family == "lemma2") {
                    bool equal_cliques = is_equal_clique_union(g_);
                    per_lambda(family, must, n_ == 0 ? "empty graph" : "", [&](const std::string & name, const Rational & l, const Rational & p) {
                        auto c = from_report(name, must, compare(alekseev_weighted_bound(n_, alpha_, l), p));
                        if (c.status == CheckStatus::pass && *c.equality != equal_cliques) {
                            c.status = CheckStatus::fail;
                            c.witness += equal_cliques ? " equality expected on a union of equal cliques" : " equality on a graph that is not a union of equal cliques";
                        }
                        return c;
                    });
                }
                else if (family == "kahn") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, must, why));
                    else
                        add(from_report(family, must, compare(kahn_bound(n_, d_), total)));
                }
                else if (family == "weighted_kahn")
                    per_lambda(family, must, regular_reason(), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return from_report(name, must, compare(weighted_kahn_bound(n_, d_, l), p));
                    });
                else if (family == "lemma1")
                    per_lambda(family, must, regular_reason(), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return lemma1(name, l, p);
                    });
                else if (family == "independent_first")
                    per_lambda(family, must, regular_reason(), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return from_report(name, must, compare(independent_first_bound(n_, d_, alpha_, l), p));
                    });
                else if (family == "lemma3_cover") {
                    if (auto why = cover_reason(); ! why.empty())
                        add(skipped(family, must, why));
                    else
                        add(cover_certificates(family));
                }
                else if (family == "cover_count")
                    per_lambda(family, must, cover_reason(), [&](const std::string & name, const Rational & l, const Rational & p) {
                        auto bound = cover_count_bound(n_, d_, alpha_, l, phi());
                        auto c = from_report(name, must, compare(bound.exact, p));
                        if (bound.relaxed.log2_value < bound.exact.log2_value * (1 - log2_tolerance)) {
                            c.status = CheckStatus::fail;
                            c.witness += " relaxed form below exact form";
                        }
                        return c;
                    });
                else if (family == "fixed_size") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, must, why));
                    else
                        add(fixed_size(family));
                }
                else if (family == "conjecture1") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, conj, why));
                    else
                        add(from_report(family, conj, compare(conjecture_bound(n_, d_), total)));
                }
                else if (family == "weighted_conjecture")
                    per_lambda(family, conj, regular_reason(), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return from_report(name, conj, compare(kdd_weighted_bound(n_, d_, l), p));
                    });
                else if (family == "conjecture3") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, conj, why));
                    else if (n_ % (2 * d_) != 0)
                        add(skipped(family, conj, "2d does not divide n"));
                    else {
                        auto t = fixed_size_conjecture_violation(poly_, n_, d_);
                        add(fixed(family, conj, ! t, t ? "i_t exceeds the K_{d,d} union at t=" + std::to_string(*t) : "coefficientwise"));
                    }
                }
                else if (family == "alon") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, info, why));
                    else
                        add(from_report(family, info, compare(alon_bound(n_, d_, config_.constants.C), total)));
                }
                else if (family == "sapozhenko_simple") {
                    if (auto why = regular_reason(); ! why.empty())
                        add(skipped(family, info, why));
                    else
                        add(from_report(family, info, compare(sapozhenko_simple_bound(n_, d_, config_.constants.C), total)));
                }
                else if (family == "theorem2") {
                    if (auto why = regular_reason(2); ! why.empty())
                        add(skipped(family, info, why));
                    else
                        add(from_report(family, info, compare(theorem2_bound(n_, d_, config_.constants.C), total)));
                }
                else if (family == "theorem4")
                    per_lambda(family, info, regular_reason(2), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return from_report(name, info, compare(theorem4_bound(n_, d_, l, c_lambda(l)), p));
                    });
                else if (family == "lemma3")
                    per_lambda(family, info, regular_reason(2), [&](const std::string & name, const Rational & l, const Rational & p) {
                        return from_report(name, info, compare(lemma3_bound(n_, d_, alpha_, l, config_.constants.c), p));
                    });
            }

            auto lemma1(const std::string & name, const Rational & lambda, const Rational & p) -> CheckResult
            {
                std::vector<std::vector<int>> orders{independent_first_order(g_, witness_)};
                std::mt19937_64 rng(mix(config_.seed, index_, 1));
                for (int i = 0; i < config_.random_orders; ++i) {
                    std::vector<int> order(n_);
                    std::iota(order.begin(), order.end(), 0);
                    std::shuffle(order.begin(), order.end(), rng);
                    orders.push_back(std::move(order));
                }

                CheckResult worst;
                int equalities = 0;
                for (const auto & order : orders) {
                    auto c = from_report(name, CheckClass::must_hold, compare(order_bound(g_, order, lambda).report, p));
                    equalities += *c.equality ? 1 : 0;
                    if (worst.name.empty() || (worst.status == CheckStatus::pass && (c.status == CheckStatus::fail || *c.margin_log2 < *worst.margin_log2)))
                        worst = c;
                }
                worst.equality = equalities > 0;
                worst.witness = "orders=" + std::to_string(orders.size()) + " equalities=" + std::to_string(equalities) + " tightest " + worst.witness;
                return worst;
            }

            auto cover_certificates(const std::string & name) -> CheckResult
            {
                std::vector<VertexSet> sets{witness_, random_maximal_independent_set(g_, mix(config_.seed, index_, 2)), VertexSet{}};
                for (const auto & I : sets) {
                    auto cert = build_cover(g_, I, phi());
                    if (auto verdict = verify_cover(g_, cert); ! verdict.ok())
                        return fixed(name, CheckClass::must_hold, false, to_string(verdict.fault) + ": " + verdict.detail);
                }
                return fixed(name, CheckClass::must_hold, true, "certificates=" + std::to_string(sets.size()) + " phi=" + std::to_string(phi()));
            }

            auto fixed_size(const std::string & name) -> CheckResult
            {
                std::optional<CheckResult> worst;
                for (int t = 0; t <= poly_.degree(); ++t) {
                    auto c = from_report(name, CheckClass::must_hold, compare(fixed_size_bound(n_, d_, t, false), Rational(poly_.coefficient(t))));
                    c.witness = "t=" + std::to_string(t);
                    if (! worst || (worst->status == CheckStatus::pass && (c.status == CheckStatus::fail || *c.margin_log2 < *worst->margin_log2)))
                        worst = c;
                }
                return *worst;
            }

            const Graph & g_;
            std::size_t index_;
            const RunConfig & config_;
            VerificationRecord & record_;
            IndependencePolynomial poly_;
            VertexSet witness_;
            std::vector<Rational> values_;
            int n_ = 0, alpha_ = 0, d_ = 0;
            bool regular_ = false;
        };

        auto expanded_names(const RunConfig & config) -> std::vector<std::pair<std::string, CheckClass>>
        {
            static const std::set<std::string> per_lambda{"lemma2", "weighted_kahn", "lemma1", "independent_first", "cover_count", "weighted_conjecture", "theorem4", "lemma3"};
            static const std::set<std::string> conjectures{"conjecture1", "weighted_conjecture", "conjecture3"};
            static const std::set<std::string> informational{"alon", "sapozhenko_simple", "theorem2", "theorem4", "lemma3"};
            std::vector<std::pair<std::string, CheckClass>> out;
            for (const auto & family : all_check_names()) {
                if (! config.enabled(family))
                    continue;
                auto cls = conjectures.contains(family) ? CheckClass::conjecture : informational.contains(family) ? CheckClass::info : CheckClass::must_hold;
                if (per_lambda.contains(family))
                    for (const auto & l : config.lambdas)
                        out.emplace_back(lambda_name(family, l), cls);
                else
                    out.emplace_back(family, cls);
            }
            return out;
        }
    }

    auto verify_graph(const CorpusEntry & entry, std::size_t index, const RunConfig & config) -> VerificationRecord
    {
        auto start = std::chrono::steady_clock::now();
        VerificationRecord record;
        record.index = index;
        record.graph_id = entry.id;
        record.graph6 = write_graph6(entry.graph);
        record.stats.n = entry.graph.order();

        if (entry.graph.order() > config.vertex_cap) {
            record.stats.d = entry.graph.regular_degree();
            record.stats.edge_count = entry.graph.edge_count();
            for (auto & [name, cls] : expanded_names(config))
                record.checks.push_back(skipped(name, cls, "n exceeds vertex cap " + std::to_string(config.vertex_cap)));
        }
        else {
            try {
                Checker(entry.graph, index, config, record).run();
            }
            catch (const std::exception & e) {
                record.error = e.what();
            }
        }
        record.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return record;
    }

    auto run_verify(const std::vector<CorpusEntry> & entries, const RunConfig & config) -> std::vector<VerificationRecord>
    {
        config.validate();
        std::vector<VerificationRecord> records(entries.size());
        unsigned workers = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(entries.size(), 1)));

        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
                records[i] = verify_graph(entries[i], i, config);
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
        return records;
    }

    auto RunSummary::exit_code() const -> int
    {
        if (failures || errors)
            return 1;
        return counterexamples ? 2 : 0;
    }

    auto summarize(const std::vector<VerificationRecord> & records) -> RunSummary
    {
        RunSummary s;
        s.graphs = records.size();
        for (const auto & r : records) {
            s.errors += r.error ? 1 : 0;
            s.failures += r.failed() ? 1 : 0;
            s.counterexamples += r.counterexample() ? 1 : 0;
        }
        return s;
    }
}

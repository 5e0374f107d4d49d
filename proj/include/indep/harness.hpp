#pragma once

#include <indep/bounds.hpp>
#include <indep/corpus.hpp>
#include <indep/mis.hpp>
#include <indep/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace indep
{
    /// Proved statements must hold; a failing conjecture is a finding, not a
    /// bug; informational checks carry unknown constants and never fail a run.
    enum class CheckClass
    {
        must_hold,
        conjecture,
        info
    };

    enum class CheckStatus
    {
        pass,
        fail,
        skipped
    };

    auto to_string(CheckClass c) -> std::string;
    auto to_string(CheckStatus s) -> std::string;

    struct CheckResult
    {
        std::string name;
        CheckClass check_class = CheckClass::must_hold;
        CheckStatus status = CheckStatus::skipped;
        std::optional<bool> holds_exact;
        std::optional<bool> equality;
        std::optional<double> margin_log2;
        std::string witness;
    };

    struct VerificationRecord
    {
        std::size_t index = 0;  ///< position in the input
        std::string graph_id;
        std::string graph6;
        GraphStats stats;
        std::string independent_sets;  ///< i(G), decimal
        std::vector<CheckResult> checks;
        std::optional<std::string> error;
        double elapsed = 0.0;

        auto counterexample() const -> bool;
        auto failed() const -> bool;
        auto status() const -> std::string;
    };

    /// Check families; per-activity families expand to "name[lambda=p/q]".
    auto all_check_names() -> const std::vector<std::string> &;

    struct RunConfig
    {
        std::vector<Rational> lambdas{Rational(1, 2), Rational(1), Rational(2)};
        std::optional<int> phi;  ///< unset: phi_default(d)
        Constants constants;
        std::uint64_t seed = 0;
        std::set<std::string> checks;  ///< empty: every family
        int vertex_cap = 28;
        int random_orders = 20;
        unsigned jobs = 0;  ///< 0: hardware concurrency
        bool include_timing = false;

        /// Throws DomainError on nonpositive lambda or a cap beyond mask_capacity.
        void validate() const;
        auto enabled(const std::string & family) const -> bool;
    };

    auto verify_graph(const CorpusEntry & entry, std::size_t index, const RunConfig & config) -> VerificationRecord;

    /// Verifies every entry on a bounded worker pool; results are in input order.
    auto run_verify(const std::vector<CorpusEntry> & entries, const RunConfig & config) -> std::vector<VerificationRecord>;

    struct RunSummary
    {
        std::size_t graphs = 0;
        std::size_t counterexamples = 0;
        std::size_t failures = 0;
        std::size_t errors = 0;

        /// 0: all pass, 2: counterexample found, 1: a proved check failed or an error.
        auto exit_code() const -> int;
    };

    auto summarize(const std::vector<VerificationRecord> & records) -> RunSummary;

    auto to_json(const RunConfig & config) -> nlohmann::json;
    auto to_json(const CheckResult & c) -> nlohmann::json;
    auto to_json(const VerificationRecord & r, bool include_timing = false) -> nlohmann::json;
    auto record_from_json(const nlohmann::json & j) -> VerificationRecord;

    /// Report ordering: counterexamples and failures first, then by (n, d, input index).
    auto sorted_for_report(std::vector<VerificationRecord> records) -> std::vector<VerificationRecord>;

    /// Full JSON report: config, summary, sorted records.
    auto report_json(const std::vector<VerificationRecord> & records, const nlohmann::json & config) -> nlohmann::json;

    /// CSV with a fixed column order: identity and stats columns, then one
    /// column per check in order of first appearance.
    auto report_csv(const std::vector<VerificationRecord> & records) -> std::string;

    auto records_from_report(const nlohmann::json & report) -> std::vector<VerificationRecord>;
}

#include <indep/harness.hpp>
#include <indep/error.hpp>

#include <algorithm>
#include <sstream>
#include <tuple>

namespace indep
{
    auto to_json(const RunConfig & config) -> nlohmann::json
    {
        nlohmann::json lambdas = nlohmann::json::array();
        for (const auto & l : config.lambdas)
            lambdas.push_back(to_string(l));
        nlohmann::json constants{{"C", config.constants.C}, {"c", config.constants.c}};
        constants["C_lambda"] = config.constants.C_lambda ? nlohmann::json(*config.constants.C_lambda) : nlohmann::json("from_c");
        constants["c_alpha"] = config.constants.c_alpha ? nlohmann::json(*config.constants.c_alpha) : nlohmann::json("C_lambda");
        return {
            {"lambdas", lambdas},
            {"phi", config.phi ? nlohmann::json(*config.phi) : nlohmann::json("default")},
            {"constants", constants},
            {"seed", config.seed},
            {"checks", config.checks.empty() ? all_check_names() : std::vector<std::string>(config.checks.begin(), config.checks.end())},
            {"vertex_cap", config.vertex_cap},
            {"random_orders", config.random_orders},
        };
    }

    auto to_json(const CheckResult & c) -> nlohmann::json
    {
        nlohmann::json j{{"name", c.name}, {"class", to_string(c.check_class)}, {"status", to_string(c.status)}};
        if (c.holds_exact)
            j["holds_exact"] = *c.holds_exact;
        if (c.equality)
            j["equality"] = *c.equality;
        if (c.margin_log2)
            j["margin_log2"] = *c.margin_log2;
        j["witness"] = c.witness;
        return j;
    }

    auto to_json(const VerificationRecord & r, bool include_timing) -> nlohmann::json
    {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto & c : r.checks)
            checks.push_back(to_json(c));
        nlohmann::json j{
            {"index", r.index},
            {"graph_id", r.graph_id},
            {"graph6", r.graph6},
            {"n", r.stats.n},
            {"d", r.stats.d ? nlohmann::json(*r.stats.d) : nlohmann::json(nullptr)},
            {"alpha", r.stats.alpha},
            {"edges", r.stats.edge_count},
            {"i", r.independent_sets},
            {"status", r.status()},
            {"checks", checks},
        };
        if (r.error)
            j["error"] = *r.error;
        if (include_timing)
            j["elapsed"] = r.elapsed;
        return j;
    }

    namespace
    {
        auto check_class_from(const std::string & s) -> CheckClass
        {
            for (auto c : {CheckClass::must_hold, CheckClass::conjecture, CheckClass::info})
                if (to_string(c) == s)
                    return c;
            throw ParseError("unknown check class '" + s + "'");
        }

        auto check_status_from(const std::string & s) -> CheckStatus
        {
            for (auto c : {CheckStatus::pass, CheckStatus::fail, CheckStatus::skipped})
                if (to_string(c) == s)
                    return c;
            throw ParseError("unknown check status '" + s + "'");
        }

        auto csv_field(const std::string & s) -> std::string
        {
            if (s.find_first_of(",\"\n\r") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s) {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }
    }

    auto record_from_json(const nlohmann::json & j) -> VerificationRecord
    {
        try {
            VerificationRecord r;
            r.index = j.at("index").get<std::size_t>();
            r.graph_id = j.at("graph_id").get<std::string>();
            r.graph6 = j.at("graph6").get<std::string>();
            r.stats.n = j.at("n").get<int>();
            if (! j.at("d").is_null())
                r.stats.d = j.at("d").get<int>();
            r.stats.alpha = j.at("alpha").get<int>();
            r.stats.edge_count = j.at("edges").get<std::size_t>();
            r.independent_sets = j.at("i").get<std::string>();
            if (j.contains("error"))
                r.error = j["error"].get<std::string>();
            if (j.contains("elapsed"))
                r.elapsed = j["elapsed"].get<double>();
            for (const auto & cj : j.at("checks")) {
                CheckResult c;
                c.name = cj.at("name").get<std::string>();
                c.check_class = check_class_from(cj.at("class").get<std::string>());
                c.status = check_status_from(cj.at("status").get<std::string>());
                if (cj.contains("holds_exact"))
                    c.holds_exact = cj["holds_exact"].get<bool>();
                if (cj.contains("equality"))
                    c.equality = cj["equality"].get<bool>();
                if (cj.contains("margin_log2") && cj["margin_log2"].is_number())
                    c.margin_log2 = cj["margin_log2"].get<double>();
                c.witness = cj.value("witness", "");
                r.checks.push_back(std::move(c));
            }
            return r;
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(std::string("malformed verification record: ") + e.what());
        }
    }

    auto sorted_for_report(std::vector<VerificationRecord> records) -> std::vector<VerificationRecord>
    {
        auto key = [](const VerificationRecord & r) {
            bool flagged = r.error || r.failed() || r.counterexample();
            return std::make_tuple(flagged ? 0 : 1, r.stats.n, r.stats.d.value_or(-1), r.index);
        };
        std::stable_sort(records.begin(), records.end(), [&](const auto & a, const auto & b) { return key(a) < key(b); });
        return records;
    }

    auto report_json(const std::vector<VerificationRecord> & records, const nlohmann::json & config) -> nlohmann::json
    {
        auto summary = summarize(records);
        nlohmann::json out_records = nlohmann::json::array();
        for (const auto & r : sorted_for_report(records))
            out_records.push_back(to_json(r, config.value("include_timing", false)));
        return {
            {"config", config},
            {"summary", {{"graphs", summary.graphs}, {"counterexamples", summary.counterexamples}, {"failures", summary.failures}, {"errors", summary.errors}, {"exit_code", summary.exit_code()}}},
            {"records", out_records},
        };
    }

    auto report_csv(const std::vector<VerificationRecord> & records) -> std::string
    {
        std::vector<std::string> columns;
        for (const auto & r : records)
            for (const auto & c : r.checks)
                if (std::find(columns.begin(), columns.end(), c.name) == columns.end())
                    columns.push_back(c.name);

        std::ostringstream out;
        out << "graph_id,graph6,n,d,alpha,edges,i,status";
        for (const auto & c : columns)
            out << ',' << csv_field(c);
        out << '\n';

        for (const auto & r : sorted_for_report(records)) {
            out << csv_field(r.graph_id) << ',' << csv_field(r.graph6) << ',' << r.stats.n << ','
                << (r.stats.d ? std::to_string(*r.stats.d) : "") << ',' << r.stats.alpha << ',' << r.stats.edge_count << ','
                << r.independent_sets << ',' << r.status();
            for (const auto & name : columns) {
                auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult & c) { return c.name == name; });
                out << ',' << (it == r.checks.end() ? "" : to_string(it->status));
            }
            out << '\n';
        }
        return out.str();
    }

    auto records_from_report(const nlohmann::json & report) -> std::vector<VerificationRecord>
    {
        const auto & list = report.is_array() ? report : report.contains("records") ? report["records"] : throw ParseError("report has no \"records\" array");
        std::vector<VerificationRecord> out;
        for (const auto & j : list)
            out.push_back(record_from_json(j));
        return out;
    }
}

#include "support.hpp"

#include <indep/corpus.hpp>
#include <indep/error.hpp>
#include <indep/generators.hpp>
#include <indep/graph6.hpp>
#include <indep/harness.hpp>
#include <indep/polynomial.hpp>

#include <doctest.h>

#include <fstream>
#include <filesystem>

using namespace indep;

namespace
{
    auto find_check(const VerificationRecord & r, const std::string & name) -> const CheckResult &
    {
        for (const auto & c : r.checks)
            if (c.name == name)
                return c;
        FAIL("missing check " << name);
        throw std::logic_error("unreachable");
    }

    auto fast_config() -> RunConfig
    {
        RunConfig config;
        config.random_orders = 4;
        config.jobs = 2;
        return config;
    }
}

TEST_CASE("cycle partitions")
{
    auto parts = cycle_partitions(8);
    std::vector<std::vector<int>> expected{{3}, {3, 3}, {3, 4}, {3, 5}, {4}, {4, 4}, {5}, {6}, {7}, {8}};
    CHECK(parts == expected);
    CHECK(cycle_partitions(2).empty());
}

TEST_CASE("cycle-union sweep against the closed form")
{
    auto entries = expand_input("sweep:cycle-unions:14");
    CHECK(entries.size() == cycle_partitions(14).size());
    for (const auto & e : entries) {
        REQUIRE(e.id.rfind("cycles:", 0) == 0);
        std::vector<BigInt> expected{1};
        std::string lengths = e.id.substr(7);
        std::size_t pos = 0;
        while (pos < lengths.size()) {
            auto next = lengths.find('+', pos);
            int len = std::stoi(lengths.substr(pos, next - pos));
            expected = testing::convolve(expected, testing::cycle_coefficients(len));
            pos = next == std::string::npos ? lengths.size() : next + 1;
        }
        CHECK(independence_polynomial(e.graph).coeffs() == expected);
        CHECK(e.graph.regular_degree() == 2);
    }
}

TEST_CASE("graph specs")
{
    CHECK(parse_graph_spec("gen:petersen") == gen_petersen());
    CHECK(parse_graph_spec("gen:cycle:5") == gen_cycle(5));
    CHECK(parse_graph_spec("Dhc") == gen_cycle(5));
    CHECK(parse_graph_spec("gen:kdd-union:2:3") == gen_kdd_union(2, 3));
    CHECK(parse_graph_spec("gen:rr:12:3:7") == gen_random_regular(12, 3, 7));
    CHECK(parse_graph_spec("gen:empty:4").edge_count() == 0);
    CHECK_THROWS(parse_graph_spec("gen:nonsense:4"));
    CHECK_THROWS(parse_graph_spec("gen:cycle:x"));

    auto complete = expand_input("sweep:complete:4");
    REQUIRE(complete.size() == 4);
    CHECK(complete[3].graph == gen_complete(5));

    auto rr = expand_input("sweep:rr:10:3:5:100");
    REQUIRE(rr.size() == 5);
    CHECK(rr[0].graph == gen_random_regular(10, 3, 100));
    CHECK(rr[4].graph == gen_random_regular(10, 3, 104));
}

TEST_CASE("corpus files")
{
    auto path = std::filesystem::temp_directory_path() / "indep_corpus_test.txt";
    {
        std::ofstream out(path);
        out << "# comment\n\nDhc\ngen:petersen\n";
    }
    auto entries = expand_input(path.string());
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].graph == gen_cycle(5));
    CHECK(entries[1].graph == gen_petersen());
    {
        std::ofstream out(path);
        out << "Dhc\nnot a graph\n";
    }
    try {
        expand_input(path.string());
        FAIL("expected a parse error");
    }
    catch (const std::exception & e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("checks are skipped where they do not apply")
{
    auto config = fast_config();
    auto r = verify_graph({"p3", gen_path(3)}, 0, config);
    CHECK_FALSE(r.error);
    CHECK(r.status() == "pass");
    CHECK(r.independent_sets == "5");
    CHECK(find_check(r, "poly_degree").status == CheckStatus::pass);
    CHECK(find_check(r, "alekseev").status == CheckStatus::pass);
    CHECK(find_check(r, "lemma2[lambda=1/2]").status == CheckStatus::pass);
    for (auto name : {"kahn", "conjecture1", "fixed_size", "lemma3_cover", "alon", "theorem2"})
        CHECK(find_check(r, name).status == CheckStatus::skipped);
    CHECK(find_check(r, "weighted_kahn[lambda=2]").status == CheckStatus::skipped);

    auto cycle = verify_graph({"c6", gen_cycle(6)}, 0, config);
    CHECK(find_check(cycle, "conjecture3").status == CheckStatus::skipped);
    CHECK(find_check(cycle, "kahn").status == CheckStatus::pass);

    auto c8 = verify_graph({"c8", gen_cycle(8)}, 0, config);
    CHECK(find_check(c8, "conjecture3").status == CheckStatus::pass);

    // phi_default(2) = 1 < 2, so cycles get cover certificates
    CHECK(find_check(cycle, "lemma3_cover").status == CheckStatus::pass);
}

TEST_CASE("every enabled check appears exactly once")
{
    auto config = fast_config();
    for (const auto & g : {gen_petersen(), gen_path(4), Graph(0), gen_complete(4)}) {
        auto r = verify_graph({"g", g}, 0, config);
        std::set<std::string> names;
        for (const auto & c : r.checks)
            CHECK(names.insert(c.name).second);
        CHECK(r.checks.size() == 11 + 8 * 3);
    }

    config.checks = {"kahn", "lemma1"};
    auto r = verify_graph({"p", gen_petersen()}, 0, config);
    CHECK(r.checks.size() == 1 + 3);
}

TEST_CASE("equality on K_{3,3} and equal clique unions")
{
    auto config = fast_config();
    auto k33 = verify_graph({"k33", gen_complete_bipartite(3)}, 0, config);
    CHECK(k33.status() == "pass");
    CHECK(*find_check(k33, "conjecture1").equality);
    CHECK(*find_check(k33, "weighted_conjecture[lambda=2]").equality);
    CHECK_FALSE(*find_check(k33, "lemma2[lambda=1]").equality);

    Graph cliques;
    for (int i = 0; i < 3; ++i)
        cliques = disjoint_union(cliques, gen_complete(4));
    auto r = verify_graph({"3K4", cliques}, 0, config);
    CHECK(r.status() == "pass");
    CHECK(*find_check(r, "lemma2[lambda=1/2]").equality);
    CHECK(*find_check(r, "alekseev").equality);
}

TEST_CASE("named graphs pass every proved check")
{
    auto config = fast_config();
    for (const auto & g : {gen_petersen(), gen_cycle(5), gen_complete_bipartite(4), gen_kdd_union(2, 3), gen_complete(6)}) {
        auto r = verify_graph({"g", g}, 0, config);
        CHECK_FALSE(r.error);
        CHECK_FALSE(r.failed());
        CHECK_FALSE(r.counterexample());
    }
}

TEST_CASE("vertex cap")
{
    auto config = fast_config();
    config.vertex_cap = 8;
    auto r = verify_graph({"petersen", gen_petersen()}, 0, config);
    CHECK(r.status() == "pass");
    CHECK(r.stats.d == 3);
    for (const auto & c : r.checks)
        CHECK(c.status == CheckStatus::skipped);

    config.vertex_cap = mask_capacity + 1;
    CHECK_THROWS_AS(config.validate(), DomainError);
    config.vertex_cap = 28;
    config.lambdas = {Rational(0)};
    CHECK_THROWS_AS(config.validate(), DomainError);
    config.lambdas = {Rational(1)};
    config.checks = {"bogus"};
    CHECK_THROWS_AS(config.validate(), DomainError);
}

TEST_CASE("exit codes")
{
    CHECK(summarize({}).exit_code() == 0);

    VerificationRecord ok;
    ok.checks.push_back({"kahn", CheckClass::must_hold, CheckStatus::pass, true, false, 1.0, ""});
    VerificationRecord conj = ok;
    conj.checks.push_back({"conjecture1", CheckClass::conjecture, CheckStatus::fail, false, false, -0.5, ""});
    VerificationRecord info = ok;
    info.checks.push_back({"alon", CheckClass::info, CheckStatus::fail, {}, {}, -0.5, ""});
    VerificationRecord bad = ok;
    bad.checks.push_back({"lemma1", CheckClass::must_hold, CheckStatus::fail, false, false, -0.5, ""});
    VerificationRecord err = ok;
    err.error = "boom";

    CHECK(summarize({ok, info}).exit_code() == 0);
    CHECK(summarize({ok, conj}).exit_code() == 2);
    CHECK(summarize({conj, bad}).exit_code() == 1);
    CHECK(summarize({ok, err}).exit_code() == 1);
    CHECK(conj.status() == "counterexample");
    CHECK(bad.status() == "fail");
    CHECK(err.status() == "error");
    auto s = summarize({ok, conj, bad, err});
    CHECK(s.graphs == 4);
    CHECK(s.counterexamples == 1);
    CHECK(s.failures == 1);
    CHECK(s.errors == 1);
}

TEST_CASE("runs are deterministic across worker counts")
{
    auto entries = expand_input("sweep:rr:12:3:12:9");
    auto more = expand_input("sweep:cycle-unions:10");
    entries.insert(entries.end(), more.begin(), more.end());
    auto config = fast_config();
    config.seed = 42;

    config.jobs = 1;
    auto a = report_json(run_verify(entries, config), to_json(config)).dump();
    config.jobs = 4;
    auto b = report_json(run_verify(entries, config), to_json(config)).dump();
    CHECK(a == b);
    CHECK(a.find("elapsed") == std::string::npos);

    auto records = run_verify(entries, config);
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(records[i].index == i);
    CHECK(summarize(records).exit_code() == 0);
}

TEST_CASE("report ordering and round trip")
{
    std::vector<CorpusEntry> entries{{"petersen", gen_petersen()}, {"c5", gen_cycle(5)}, {"p3", gen_path(3)}, {"k4", gen_complete(4)}};
    auto config = fast_config();
    auto records = run_verify(entries, config);
    records[3].checks.push_back({"conjecture1", CheckClass::conjecture, CheckStatus::fail, false, false, -1.0, "made up"});

    auto sorted = sorted_for_report(records);
    std::vector<std::string> ids;
    for (const auto & r : sorted)
        ids.push_back(r.graph_id);
    CHECK(ids == std::vector<std::string>{"k4", "p3", "c5", "petersen"});

    auto report = report_json(records, to_json(config));
    CHECK(report["summary"]["counterexamples"] == 1);
    auto back = records_from_report(report);
    REQUIRE(back.size() == records.size());
    CHECK(report_json(back, to_json(config)) == report);
    CHECK(back[0].graph_id == "k4");
    CHECK(back[0].counterexample());
}

TEST_CASE("CSV report")
{
    CHECK(report_csv({}) == "graph_id,graph6,n,d,alpha,edges,i,status\n");

    auto config = fast_config();
    config.checks = {"kahn"};
    auto records = run_verify({{"c5", gen_cycle(5)}, {"a,b", gen_path(3)}}, config);
    auto csv = report_csv(records);
    CHECK(csv == "graph_id,graph6,n,d,alpha,edges,i,status,kahn\n"
                 "\"a,b\",Bg,3,,2,2,5,pass,skipped\n"
                 "c5,Dhc,5,2,2,5,11,pass,pass\n");
}

#include "support.hpp"

#include <indep/error.hpp>
#include <indep/generators.hpp>
#include <indep/graph6.hpp>

#include <doctest.h>

using namespace indep;

// Expected strings were produced by networkx.to_graph6_bytes on the same labelled graphs.
TEST_CASE("graph6 encodings agree with a reference encoder")
{
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == gen_complete(2));
    CHECK(parse_graph6("?") == Graph());

    CHECK(write_graph6(Graph()) == "?");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(gen_complete(2)) == "A_");
    CHECK(write_graph6(gen_cycle(5)) == "Dhc");
    CHECK(write_graph6(gen_complete_bipartite(3)) == "EFz_");
    CHECK(write_graph6(gen_petersen()) == "IheA@GUAo");
    CHECK(write_graph6(gen_kdd_union(2, 2)) == "G]??WW");
    CHECK(write_graph6(gen_path(4)) == "Ch");
    CHECK(write_graph6(gen_complete(8)) == "G~~~~{");

    CHECK(parse_graph6("IheA@GUAo") == gen_petersen());
    CHECK(parse_graph6("EFz_") == gen_complete_bipartite(3));
}

TEST_CASE("graph6 long size header")
{
    auto c64 = gen_cycle(64);
    auto text = write_graph6(c64);
    CHECK(text.size() == 340);
    CHECK(text.starts_with("~?@?hC"));
    CHECK(text.ends_with("?????@"));
    CHECK(parse_graph6(text) == c64);

    auto c63 = gen_cycle(63);
    CHECK(write_graph6(c63).starts_with("~??~hCGG"));
    CHECK(parse_graph6(write_graph6(c63)) == c63);
}

TEST_CASE("graph6 accepts header and newline decorations")
{
    CHECK(parse_graph6(">>graph6<<Dhc") == gen_cycle(5));
    CHECK(parse_graph6("Dhc\n") == gen_cycle(5));
    CHECK(parse_graph6("Dhc\r\n") == gen_cycle(5));
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);           // body missing
    CHECK_THROWS_AS(parse_graph6("Dhc?"), ParseError);        // trailing garbage
    CHECK_THROWS_AS(parse_graph6("Dh c"), ParseError);        // non-printable / out of range
    CHECK_THROWS_AS(parse_graph6("D\x01hc"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);          // nonzero padding bit
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);          // truncated long header
    CHECK_THROWS_AS(parse_graph6("~?AA"), ParseError);        // 65 vertices > capacity (default build)
}

TEST_CASE("graph6 round trip on random graphs")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = static_cast<int>(seed % (mask_capacity + 1));
        auto g = testing::gnp(n, 0.05 + 0.9 * static_cast<double>(seed % 7) / 6.0, seed);
        auto text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(write_graph6(parse_graph6(text)) == text);
    }
}

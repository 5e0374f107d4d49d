#pragma once

#include <indep/graph.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace indep
{
    struct CorpusEntry
    {
        std::string id;  ///< "file:line", or the generator descriptor
        Graph graph;
    };

    /// One graph from a graph6 string or a generator descriptor:
    ///   gen:cycle:N  gen:complete:N  gen:path:N  gen:empty:N  gen:petersen
    ///   gen:kdd:D  gen:kdd-union:M:D  gen:rr:N:D:SEED
    auto parse_graph_spec(std::string_view spec) -> Graph;

    /// Expands one input argument into graphs, in a fixed order:
    ///   sweep:rr:N:D:COUNT[:SEED]   COUNT random d-regular graphs, seeds SEED.. (default base_seed)
    ///   sweep:cycle-unions:MAXN     every union of cycles with total order <= MAXN
    ///   sweep:complete:MAXD         K_{d+1} for d = 1..MAXD
    ///   an existing file path       one graph6 line or gen: spec per line; blank and # lines skipped
    ///   anything else               a single graph spec
    auto expand_input(const std::string & input, std::uint64_t base_seed = 0) -> std::vector<CorpusEntry>;

    /// All multisets of cycle lengths (each >= 3) whose sum is at most max_n, as
    /// ascending length lists in lexicographic order.
    auto cycle_partitions(int max_n) -> std::vector<std::vector<int>>;
}

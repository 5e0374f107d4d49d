#pragma once

#include <indep/graph.hpp>

#include <string>
#include <string_view>

namespace indep
{
    /// Decode one graph6 line. An optional ">>graph6<<" prefix and a single
    /// trailing newline (LF or CRLF) are accepted; anything else outside the
    /// encoding is an error, including nonzero padding bits.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 encoding, without header or newline.
    auto write_graph6(const Graph & g) -> std::string;
}

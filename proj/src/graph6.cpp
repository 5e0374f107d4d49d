#include <indep/graph6.hpp>
#include <indep/error.hpp>

#include <cstdint>

namespace indep
{
    namespace
    {
        constexpr int offset = 63;
        constexpr char long_form = '~';

        auto sextet(std::string_view text, std::size_t pos) -> int
        {
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < offset || c > 126)
                throw ParseError("graph6: byte " + std::to_string(c) + " at position " + std::to_string(pos) + " is not in the printable range 63..126");
            return c - offset;
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);
        if (text.ends_with('\n'))
            text.remove_suffix(1);
        if (text.ends_with('\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError("graph6: empty input");

        std::size_t pos = 0;
        std::uint64_t n = 0;
        if (text[0] != long_form) {
            n = sextet(text, pos++);
        }
        else {
            int width = 3;
            pos = 1;
            if (text.size() > 1 && text[1] == long_form) {
                width = 6;
                pos = 2;
            }
            if (text.size() < pos + width)
                throw ParseError("graph6: truncated size header");
            for (int i = 0; i < width; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
        }
        if (n > static_cast<std::uint64_t>(mask_capacity))
            throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds capacity " + std::to_string(mask_capacity));

        std::size_t bits = n * (n - (n > 0)) / 2;
        std::size_t body = (bits + 5) / 6;
        if (text.size() - pos < body)
            throw ParseError("graph6: body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(body));
        if (text.size() - pos > body)
            throw ParseError("graph6: trailing garbage after byte " + std::to_string(pos + body));

        std::vector<Edge> edges;
        std::size_t k = 0;
        for (int j = 1; j < static_cast<int>(n); ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int value = sextet(text, pos + k / 6);
                if (value & (0x20 >> (k % 6)))
                    edges.emplace_back(i, j);
            }
        if (k % 6 != 0) {
            int value = sextet(text, pos + k / 6);
            if (value & ((1 << (6 - k % 6)) - 1))
                throw ParseError("graph6: nonzero padding bits");
        }
        // validate remaining body bytes are printable (only relevant when bits == 0)
        for (std::size_t i = pos; i < text.size(); ++i)
            sextet(text, i);
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    auto write_graph6(const Graph & g) -> std::string
    {
        std::string out;
        auto n = static_cast<std::uint64_t>(g.order());
        if (n <= 62)
            out.push_back(static_cast<char>(n + offset));
        else if (n <= 258047) {
            out.push_back(long_form);
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 0x3f) + offset));
        }
        else {
            out.append(2, long_form);
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 0x3f) + offset));
        }

        int acc = 0, used = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++used == 6) {
                    out.push_back(static_cast<char>(acc + offset));
                    acc = used = 0;
                }
            }
        if (used)
            out.push_back(static_cast<char>((acc << (6 - used)) + offset));
        return out;
    }
}

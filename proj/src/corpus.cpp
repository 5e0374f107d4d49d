#include <indep/corpus.hpp>
#include <indep/error.hpp>
#include <indep/generators.hpp>
#include <indep/graph6.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>

namespace indep
{
    namespace
    {
        auto split(std::string_view s, char sep) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            for (;;) {
                auto pos = s.find(sep, start);
                parts.push_back(s.substr(start, pos - start));
                if (pos == std::string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        template <typename T>
        auto number(std::string_view s, std::string_view spec) -> T
        {
            T value{};
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(spec) + "'");
            return value;
        }

        void arity(const std::vector<std::string_view> & parts, std::size_t want, std::string_view spec)
        {
            if (parts.size() != want)
                throw ParseError("wrong number of fields in '" + std::string(spec) + "'");
        }

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            return s;
        }

        auto generate(std::string_view spec) -> Graph
        {
            auto parts = split(spec, ':');
            auto kind = parts.size() > 1 ? parts[1] : std::string_view{};
            try {
                if (kind == "petersen") {
                    arity(parts, 2, spec);
                    return gen_petersen();
                }
                if (kind == "cycle" || kind == "complete" || kind == "path" || kind == "empty" || kind == "kdd") {
                    arity(parts, 3, spec);
                    int k = number<int>(parts[2], spec);
                    if (kind == "cycle")
                        return gen_cycle(k);
                    if (kind == "complete")
                        return gen_complete(k);
                    if (kind == "path")
                        return gen_path(k);
                    if (kind == "kdd")
                        return gen_complete_bipartite(k);
                    return Graph(k);
                }
                if (kind == "kdd-union") {
                    arity(parts, 4, spec);
                    return gen_kdd_union(number<int>(parts[2], spec), number<int>(parts[3], spec));
                }
                if (kind == "rr") {
                    arity(parts, 5, spec);
                    return gen_random_regular(number<int>(parts[2], spec), number<int>(parts[3], spec), number<std::uint64_t>(parts[4], spec));
                }
            }
            catch (const DomainError & e) {
                throw ParseError("'" + std::string(spec) + "': " + e.what());
            }
            throw ParseError("unknown generator '" + std::string(spec) + "'");
        }

        auto cycle_union(const std::vector<int> & lengths) -> Graph
        {
            Graph g;
            for (int k : lengths)
                g = disjoint_union(g, gen_cycle(k));
            return g;
        }

        auto join(const std::vector<int> & xs) -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < xs.size(); ++i)
                out += (i ? "+" : "") + std::to_string(xs[i]);
            return out;
        }
    }

    auto parse_graph_spec(std::string_view spec) -> Graph
    {
        spec = trim(spec);
        if (spec.starts_with("gen:"))
            return generate(spec);
        return parse_graph6(spec);
    }

    auto cycle_partitions(int max_n) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        std::vector<int> current;
        std::function<void(int, int)> extend = [&](int min_len, int budget) {
            for (int k = min_len; k <= budget; ++k) {
                current.push_back(k);
                out.push_back(current);
                extend(k, budget - k);
                current.pop_back();
            }
        };
        extend(3, max_n);
        return out;
    }

    auto expand_input(const std::string & input, std::uint64_t base_seed) -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> out;
        std::string_view spec = trim(input);

        if (spec.starts_with("sweep:")) {
            auto parts = split(spec, ':');
            auto kind = parts.size() > 1 ? parts[1] : std::string_view{};
            if (kind == "rr") {
                if (parts.size() != 5 && parts.size() != 6)
                    throw ParseError("sweep:rr needs N:D:COUNT[:SEED] in '" + input + "'");
                int n = number<int>(parts[2], spec), d = number<int>(parts[3], spec), count = number<int>(parts[4], spec);
                std::uint64_t seed = parts.size() == 6 ? number<std::uint64_t>(parts[5], spec) : base_seed;
                for (int i = 0; i < count; ++i) {
                    std::string id = "gen:rr:" + std::to_string(n) + ":" + std::to_string(d) + ":" + std::to_string(seed + i);
                    out.push_back({id, generate(id)});
                }
                return out;
            }
            if (kind == "cycle-unions") {
                arity(parts, 3, spec);
                for (const auto & lengths : cycle_partitions(number<int>(parts[2], spec)))
                    out.push_back({"cycles:" + join(lengths), cycle_union(lengths)});
                return out;
            }
            if (kind == "complete") {
                arity(parts, 3, spec);
                int max_d = number<int>(parts[2], spec);
                for (int d = 1; d <= max_d; ++d)
                    out.push_back({"gen:complete:" + std::to_string(d + 1), gen_complete(d + 1)});
                return out;
            }
            throw ParseError("unknown sweep '" + input + "'");
        }

        if (! spec.starts_with("gen:") && std::filesystem::is_regular_file(std::filesystem::path(std::string(spec)))) {
            std::ifstream in{std::string(spec)};
            if (! in)
                throw ParseError("cannot open corpus '" + std::string(spec) + "'");
            std::string line;
            for (int lineno = 1; std::getline(in, line); ++lineno) {
                auto body = trim(line);
                if (body.empty() || body.starts_with('#'))
                    continue;
                try {
                    out.push_back({std::string(spec) + ":" + std::to_string(lineno), parse_graph_spec(body)});
                }
                catch (const std::exception & e) {
                    throw ParseError(std::string(spec) + ":" + std::to_string(lineno) + ": " + e.what());
                }
            }
            return out;
        }

        out.push_back({std::string(spec), parse_graph_spec(spec)});
        return out;
    }
}

#include <indclique/io.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace indclique
{
    namespace
    {
        auto split_lines(std::string_view text) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> lines;
            while (! text.empty()) {
                auto end = text.find('\n');
                auto line = text.substr(0, end);
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);
                lines.push_back(line);
                if (end == std::string_view::npos)
                    break;
                text.remove_prefix(end + 1);
            }
            return lines;
        }

        auto tokens(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> result;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                    ++i;
                auto start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                    ++i;
                if (i > start)
                    result.push_back(line.substr(start, i - start));
            }
            return result;
        }

        auto to_number(std::string_view token, unsigned line, const char * what) -> unsigned long long
        {
            unsigned long long value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
            return value;
        }

        auto to_vertex(std::string_view token, unsigned line) -> unsigned
        {
            auto value = to_number(token, line, "a vertex id");
            if (value > 0xfffffffeull)
                throw ParseError(line, "vertex id " + std::string(token) + " is too large");
            return static_cast<unsigned>(value);
        }

        auto checked_edge(unsigned u, unsigned v, unsigned n, unsigned line, bool one_based) -> Edge
        {
            auto shown = [&] (unsigned x) { return std::to_string(x); };
            if (u == v)
                throw ParseError(line, "self-loop on vertex " + shown(u));
            if (one_based) {
                if (u < 1 || u > n || v < 1 || v > n)
                    throw ParseError(line, "vertex out of range 1.." + shown(n) + " in edge " + shown(u) + " " + shown(v));
                return Edge{u - 1, v - 1};
            }
            if (u >= n || v >= n)
                throw ParseError(line, "vertex out of range 0.." + shown(n - 1) + " in edge " + shown(u) + " " + shown(v));
            return Edge{u, v};
        }
    }

    auto parse_format(std::string_view name) -> GraphFormat
    {
        if (name == "dimacs")
            return GraphFormat::Dimacs;
        if (name == "edgelist")
            return GraphFormat::Edgelist;
        throw InputError("unknown graph format '" + std::string(name) + "' (expected dimacs or edgelist)");
    }

    auto parse_dimacs(std::string_view text) -> ParsedGraph
    {
        std::optional<unsigned> n;
        unsigned long long declared_m = 0;
        std::vector<Edge> edges;

        auto lines = split_lines(text);
        for (unsigned number = 1 ; number <= lines.size() ; ++number) {
            auto t = tokens(lines[number - 1]);
            if (t.empty() || t[0] == "c")
                continue;
            if (t[0] == "p") {
                if (n)
                    throw ParseError(number, "second problem line");
                if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
                    throw ParseError(number, "expected 'p edge <n> <m>'");
                n = to_vertex(t[2], number);
                declared_m = to_number(t[3], number, "an edge count");
            }
            else if (t[0] == "e") {
                if (! n)
                    throw ParseError(number, "edge before the problem line");
                if (t.size() != 3)
                    throw ParseError(number, "expected 'e <u> <v>'");
                edges.push_back(checked_edge(to_vertex(t[1], number), to_vertex(t[2], number), *n, number, true));
            }
            else
                throw ParseError(number, "unrecognised line starting with '" + std::string(t[0]) + "'");
        }

        if (! n)
            throw ParseError(0, "missing 'p edge <n> <m>' line");
        if (*n == 0)
            throw ParseError(0, "no vertices declared");

        ParsedGraph result{build_graph(*n, edges), {}};
        if (result.graph.edge_count() != declared_m)
            result.warnings.push_back("problem line declares " + std::to_string(declared_m) + " edges but "
                    + std::to_string(result.graph.edge_count()) + " distinct edges were read");
        return result;
    }

    auto parse_edgelist(std::string_view text) -> ParsedGraph
    {
        std::optional<unsigned> declared_n;
        std::vector<std::pair<Edge, unsigned>> raw;
        unsigned largest = 0;
        bool any_edge = false;

        auto lines = split_lines(text);
        for (unsigned number = 1 ; number <= lines.size() ; ++number) {
            auto line = lines[number - 1];
            auto t = tokens(line);
            if (t.empty())
                continue;
            if (t[0].starts_with('#')) {
                // "# vertices: <n>"
                auto body = tokens(line.substr(line.find('#') + 1));
                if (body.size() == 2 && body[0] == "vertices:") {
                    if (declared_n)
                        throw ParseError(number, "second vertices header");
                    declared_n = to_vertex(body[1], number);
                }
                continue;
            }
            if (t.size() != 2)
                throw ParseError(number, "expected '<u> <v>'");
            auto u = to_vertex(t[0], number), v = to_vertex(t[1], number);
            raw.push_back({{u, v}, number});
            largest = std::max({largest, u, v});
            any_edge = true;
        }

        unsigned n = declared_n ? *declared_n : (any_edge ? largest + 1 : 0);
        if (n == 0)
            throw ParseError(0, "no vertices declared");

        std::vector<Edge> edges;
        edges.reserve(raw.size());
        for (auto & [e, number] : raw)
            edges.push_back(checked_edge(e.first, e.second, n, number, false));
        return ParsedGraph{build_graph(n, edges), {}};
    }

    auto detect_format(std::string_view text) -> GraphFormat
    {
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#')
                continue;
            auto c = line[start];
            return (c == 'p' || c == 'c' || c == 'e') ? GraphFormat::Dimacs : GraphFormat::Edgelist;
        }
        return GraphFormat::Edgelist;
    }

    auto parse_graph(std::string_view text, GraphFormat format) -> ParsedGraph
    {
        return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edgelist(text);
    }

    auto emit_dimacs(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        return out.str();
    }

    auto emit_edgelist(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "# vertices: " << g.size() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto emit_graph(const Graph & g, GraphFormat format) -> std::string
    {
        return format == GraphFormat::Dimacs ? emit_dimacs(g) : emit_edgelist(g);
    }

    auto parse_ordering(std::string_view text, unsigned n) -> VertexOrdering
    {
        std::vector<unsigned> order;
        auto lines = split_lines(text);
        for (unsigned number = 1 ; number <= lines.size() ; ++number) {
            auto line = lines[number - 1];
            line = line.substr(0, line.find('#'));
            for (auto t : tokens(line))
                order.push_back(to_vertex(t, number));
        }
        if (order.size() != n)
            throw OrderingError("ordering lists " + std::to_string(order.size()) + " vertices, the graph has " + std::to_string(n));
        return VertexOrdering(std::move(order));
    }

    auto emit_ordering(const VertexOrdering & ordering) -> std::string
    {
        std::ostringstream out;
        for (unsigned p = 0 ; p < ordering.size() ; ++p)
            out << (p ? " " : "") << ordering.at(p);
        out << '\n';
        return out.str();
    }

    auto read_text_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}

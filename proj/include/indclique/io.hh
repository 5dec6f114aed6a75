#ifndef INDCLIQUE_IO_HH
#define INDCLIQUE_IO_HH

#include <indclique/errors.hh>
#include <indclique/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace indclique
{
    /// A rejected input line; `line` is 1-based, 0 when not tied to a line.
    class ParseError : public InputError
    {
        public:
            ParseError(unsigned line, const std::string & what) :
                InputError(line ? "line " + std::to_string(line) + ": " + what : what),
                line(line)
            {
            }

            unsigned line;
    };

    struct ParsedGraph
    {
        Graph graph;
        std::vector<std::string> warnings;
    };

    enum class GraphFormat
    {
        Dimacs,
        Edgelist
    };

    auto parse_format(std::string_view name) -> GraphFormat;

    /// "c" comments, one "p edge <n> <m>" line (also "p col"), "e <u> <v>"
    /// edges with 1-based ids. A declared edge count that disagrees with the
    /// distinct edges parsed is a warning; the parsed count wins.
    auto parse_dimacs(std::string_view text) -> ParsedGraph;

    /// 0-based "u v" pairs, one per line, '#' comments. n is 1 + the largest
    /// id unless a "# vertices: <n>" header line says otherwise.
    auto parse_edgelist(std::string_view text) -> ParsedGraph;

    /// DIMACS if the first non-blank, non-'#' line opens with 'p', 'c' or 'e';
    /// otherwise an edge list.
    auto detect_format(std::string_view text) -> GraphFormat;

    auto parse_graph(std::string_view text, GraphFormat format) -> ParsedGraph;

    auto emit_dimacs(const Graph & g) -> std::string;

    /// Always writes the vertices header, so isolated vertices survive.
    auto emit_edgelist(const Graph & g) -> std::string;

    auto emit_graph(const Graph & g, GraphFormat format) -> std::string;

    /// Whitespace-separated 0-based vertex ids, first position first; '#'
    /// comments allowed. Throws OrderingError unless it is a permutation of 0..n-1.
    auto parse_ordering(std::string_view text, unsigned n) -> VertexOrdering;

    auto emit_ordering(const VertexOrdering & ordering) -> std::string;

    /// Whole file contents; throws InputError if it cannot be read.
    auto read_text_file(const std::string & path) -> std::string;
}

#endif

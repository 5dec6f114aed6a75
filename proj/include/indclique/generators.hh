#ifndef INDCLIQUE_GENERATORS_HH
#define INDCLIQUE_GENERATORS_HH

#include <indclique/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indclique
{
    enum class Family
    {
        Gnp,
        KTree,
        PartialKTree,
        Chordal,
        LineGraphOfGnp,
        Cycle,
        Complete,
        Petersen,
        Star
    };

    auto parse_family(std::string_view name) -> Family;
    auto family_name(Family family) -> std::string;
    auto all_families() -> std::vector<Family>;

    struct GeneratorParams
    {
        unsigned n = 10;
        /// Edge probability (gnp, linegraph_of_gnp) or edge keep probability (partial_ktree).
        double p = 0.5;
        /// Tree width (ktree, partial_ktree) or largest attachment clique (chordal).
        unsigned k = 2;
    };

    struct Generated
    {
        Graph graph;
        /// Reverse construction order, for the families built by vertex
        /// additions (ktree, partial_ktree, chordal): each vertex's later
        /// neighbors lie inside the clique it was attached to.
        std::optional<VertexOrdering> ordering;
    };

    /// Deterministic in (family, params, seed). Throws InputError on
    /// parameters outside the family's range.
    auto generate(Family family, const GeneratorParams & params, std::uint64_t seed) -> Generated;

    /// Each pair (u, v), u < v in lexicographic order, is an edge with probability p.
    auto gnp(unsigned n, double p, std::uint64_t seed) -> Graph;

    /// Starts from K_{k+1}; each further vertex joins a uniformly chosen existing k-clique.
    auto ktree(unsigned n, unsigned k, std::uint64_t seed) -> Generated;

    /// A k-tree with each edge kept independently with probability keep.
    auto partial_ktree(unsigned n, unsigned k, double keep, std::uint64_t seed) -> Generated;

    /// Each new vertex attaches to a random clique of at most max_attach
    /// existing vertices, so it is simplicial when added.
    auto chordal(unsigned n, unsigned max_attach, std::uint64_t seed) -> Generated;

    /// Vertices are the edges of g in lexicographic order; adjacent when they share an endpoint.
    auto line_graph(const Graph & g) -> Graph;

    auto cycle(unsigned n) -> Graph;
    auto complete(unsigned n) -> Graph;
    auto petersen() -> Graph;
    /// K_{1,n-1} with centre 0.
    auto star(unsigned n) -> Graph;
}

#endif

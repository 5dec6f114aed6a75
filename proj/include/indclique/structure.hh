#ifndef INDCLIQUE_STRUCTURE_HH
#define INDCLIQUE_STRUCTURE_HH

#include <indclique/graph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace indclique
{
    inline constexpr unsigned default_enumeration_cap = 40;
    inline constexpr std::size_t default_max_cliques = 1'000'000;
    inline constexpr unsigned default_hamiltonian_cap = 18;

    struct MaximalCliques
    {
        /// Each clique ascending; the list in lexicographic order.
        std::vector<std::vector<unsigned>> cliques;
        /// Stopped early at the output limit.
        bool partial = false;
    };

    /// All inclusion-maximal cliques, by Bron-Kerbosch with pivoting. Throws
    /// OracleCapExceeded above `cap` vertices.
    auto enumerate_maximal_cliques(const Graph & g, unsigned cap = default_enumeration_cap,
            std::size_t max_output = default_max_cliques) -> MaximalCliques;

    /// The 1-based i with clique ⊆ V(G_i^+): the earliest-ranked member's
    /// position. Throws InputError if `clique` is not a maximal clique of g.
    auto container_index(const Graph & g, const VertexOrdering & ordering, std::span<const unsigned> clique) -> unsigned;

    /// Hamiltonian cycle decision by dynamic programming over visited sets.
    /// Graphs with fewer than 3 vertices are not Hamiltonian. Returns nullopt
    /// (skipped) above `cap` vertices; caps above 24 are rejected.
    auto is_hamiltonian(const Graph & g, unsigned cap = default_hamiltonian_cap) -> std::optional<bool>;

    using CliquePair = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

    /// Two vertex sets, each a clique, that together cover every vertex:
    /// the colour classes of a 2-colouring of the complement. nullopt when the
    /// complement is not bipartite.
    auto two_clique_cover(const Graph & g) -> std::optional<CliquePair>;

    enum class Hamiltonicity
    {
        Yes,
        No,
        Skipped
    };

    struct IndexVerdict
    {
        unsigned index = 0;
        Hamiltonicity hamiltonian = Hamiltonicity::No;
        /// Global ids.
        std::optional<CliquePair> cover;
        bool passes = false;
        /// Hamiltonicity skipped and no cover found: neither confirmed nor refuted.
        bool inconclusive = false;
    };

    struct StructureReport
    {
        std::vector<IndexVerdict> verdicts;
        bool overall = true;
        unsigned inconclusive_count = 0;
    };

    /// For a 2-independence ordering, checks that every G_i^+ is Hamiltonian
    /// or covered by two cliques. Throws IndependenceViolation if the
    /// ordering is not 2-independent.
    auto check_2independent_structure(const Graph & g, const VertexOrdering & ordering,
            unsigned hamiltonian_cap = default_hamiltonian_cap, unsigned workers = 1) -> StructureReport;

    struct ContainerReport
    {
        std::size_t cliques_checked = 0;
        std::size_t violations = 0;
        bool partial = false;
    };

    /// Scans every G_i^+ for every maximal clique and counts cliques whose
    /// containers are not exactly {container_index}.
    auto check_unique_containers(const Graph & g, const VertexOrdering & ordering,
            unsigned cap = default_enumeration_cap) -> ContainerReport;

    struct Restriction
    {
        SubgraphView view;
        /// Local ids of `view`, in the order the parent ordering visits them.
        VertexOrdering ordering;
    };

    /// g[subset] with the parent ordering restricted to it.
    auto restrict_ordering(const Graph & g, const VertexOrdering & ordering, std::vector<unsigned> subset) -> Restriction;

    struct HeredityReport
    {
        unsigned trials = 0;
        unsigned violations = 0;
        /// Global ids of the first subset whose restricted ordering failed.
        std::optional<std::vector<unsigned>> counterexample;
    };

    /// Restricts a verified k-independence ordering to random vertex subsets
    /// and re-verifies each restriction at k. Throws IndependenceViolation if
    /// the ordering does not verify on g itself.
    auto check_heredity(const Graph & g, const VertexOrdering & ordering, unsigned k, unsigned trials,
            std::uint64_t seed) -> HeredityReport;
}

#endif

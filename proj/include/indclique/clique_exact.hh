#ifndef INDCLIQUE_CLIQUE_EXACT_HH
#define INDCLIQUE_CLIQUE_EXACT_HH

#include <indclique/graph.hh>

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indclique
{
    enum class CliqueSource
    {
        WholeGraph,
        Index,
        Residual
    };

    auto to_string(CliqueSource) -> std::string;

    struct CliqueResult
    {
        /// Global vertex ids, ascending.
        std::vector<unsigned> vertices;
        CliqueSource source = CliqueSource::WholeGraph;
        /// 1-based decomposition index when source == Index, otherwise 0.
        unsigned index = 0;

        auto size() const -> unsigned { return static_cast<unsigned>(vertices.size()); }
    };

    inline constexpr unsigned default_clique_cap = 64;

    /// Exact maximum clique by branch and bound, branching on vertices in id
    /// order with a greedy colouring bound. Returns the lexicographically
    /// smallest maximum clique; the empty graph gives the empty clique. Throws
    /// OracleCapExceeded above `cap` vertices.
    auto max_clique_bruteforce(const Graph & g, unsigned cap = default_clique_cap) -> CliqueResult;

    /// Given a graph, return a maximum clique as local vertex ids.
    using CliqueSubsolver = std::function<std::vector<unsigned> (const Graph &)>;

    auto bruteforce_subsolver(unsigned cap = default_clique_cap) -> CliqueSubsolver;

    /// A subsolver failure, tagged with the 1-based index of the forward
    /// neighborhood it was solving.
    class SubsolverError : public std::runtime_error
    {
        public:
            SubsolverError(unsigned index, const std::string & what) :
                std::runtime_error("subproblem " + std::to_string(index) + ": " + what),
                index(index)
            {
            }

            unsigned index;
    };

    /// Solves every closed forward neighborhood G_i^+ with `subsolver` and
    /// returns the largest clique found, smallest index among ties. Every
    /// maximal clique of g lies in G_i^+ for the i of its earliest vertex, so
    /// an exact subsolver gives an exact answer.
    auto max_clique_ordered(const Graph & g, const VertexOrdering & ordering, const CliqueSubsolver & subsolver,
            unsigned workers = 1) -> CliqueResult;

    /// The open forward neighborhoods G_1..G_{n-k} of a k-degeneracy ordering,
    /// plus the residual graph on the last k positions.
    struct DecompositionBundle
    {
        std::vector<SubgraphView> subgraphs;
        SubgraphView residual;
        VertexOrdering ordering;
        unsigned k = 0;
    };

    /// Throws OrderingError naming a vertex with more than k forward
    /// neighbors, or if n <= k.
    auto decompose_degenerate(const Graph & g, const VertexOrdering & ordering, unsigned k) -> DecompositionBundle;

    /// Combines per-subgraph maximum cliques into a maximum clique of the
    /// whole graph. subgraph_cliques[j] is a maximum clique of G_{j+1} (global
    /// ids) and residual_clique one of the residual graph. The largest
    /// subgraph clique wins, extended by its own vertex v_j, unless the
    /// residual clique is strictly larger than every subgraph clique.
    auto combine_degenerate(std::span<const std::vector<unsigned>> subgraph_cliques,
            const std::vector<unsigned> & residual_clique, const VertexOrdering & ordering) -> CliqueResult;

    /// Maximum clique of any graph with n >= 1 through its degeneracy
    /// ordering: one exact solve per subgraph of at most d vertices.
    auto max_clique_degenerate(const Graph & g, unsigned workers = 1) -> CliqueResult;
}

#endif

#ifndef INDCLIQUE_GRAPH_HH
#define INDCLIQUE_GRAPH_HH

#include <indclique/bitset.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace indclique
{
    using Edge = std::pair<unsigned, unsigned>;

    /// Immutable simple undirected graph on vertices 0..n-1. Keeps sorted
    /// neighbor lists for scans and an edge membership set for O(1) expected
    /// adjacency queries.
    class Graph
    {
        public:
            Graph() = default;

            auto size() const -> unsigned { return _n; }
            auto edge_count() const -> std::size_t { return _m; }

            /// Sorted ascending.
            auto neighbors(unsigned v) const -> std::span<const unsigned> { return _adjacency[v]; }
            auto degree(unsigned v) const -> unsigned { return static_cast<unsigned>(_adjacency[v].size()); }
            auto adjacent(unsigned u, unsigned v) const -> bool;

            auto max_degree() const -> unsigned;
            auto min_degree() const -> unsigned;

            /// Each edge once as (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            /// Dense adjacency rows, one Bitset per vertex.
            auto adjacency_rows() const -> std::vector<Bitset>;

            auto operator== (const Graph & other) const -> bool
            {
                return _n == other._n && _adjacency == other._adjacency;
            }

            friend auto build_graph(unsigned n, std::span<const Edge> edges) -> Graph;

        private:
            static auto key(unsigned u, unsigned v) -> std::uint64_t
            {
                if (u > v)
                    std::swap(u, v);
                return (std::uint64_t{u} << 32) | v;
            }

            unsigned _n = 0;
            std::size_t _m = 0;
            std::vector<std::vector<unsigned>> _adjacency;
            std::unordered_set<std::uint64_t> _edge_keys;
    };

    /// Duplicate pairs (in either direction) collapse to one edge. Throws
    /// InputError on a self-loop or an endpoint outside 0..n-1.
    auto build_graph(unsigned n, std::span<const Edge> edges) -> Graph;

    inline auto build_graph(unsigned n, std::initializer_list<Edge> edges) -> Graph
    {
        return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    auto complement(const Graph & g) -> Graph;

    /// A permutation of 0..n-1. Position p (0-based) holds vertex at(p); rank is
    /// the inverse.
    class VertexOrdering
    {
        public:
            VertexOrdering() = default;

            /// Throws OrderingError unless `order` is a permutation of 0..size-1.
            explicit VertexOrdering(std::vector<unsigned> order);

            static auto identity(unsigned n) -> VertexOrdering;

            auto size() const -> unsigned { return static_cast<unsigned>(_order.size()); }
            auto at(unsigned position) const -> unsigned { return _order[position]; }
            auto rank(unsigned vertex) const -> unsigned { return _rank[vertex]; }
            auto order() const -> std::span<const unsigned> { return _order; }

            auto operator== (const VertexOrdering &) const -> bool = default;

        private:
            std::vector<unsigned> _order;
            std::vector<unsigned> _rank;
    };

    /// Throws OrderingError if the ordering does not cover exactly the vertices of g.
    void check_ordering_matches(const Graph & g, const VertexOrdering & ordering);

    /// Neighbors of the vertex at `position` that come later in the ordering,
    /// sorted by rank.
    auto forward_neighbors(const Graph & g, const VertexOrdering & ordering, unsigned position) -> std::vector<unsigned>;

    /// An induced subgraph of a parent graph, materialised with local ids
    /// 0..size-1. Local id j corresponds to global vertex globals()[j]. The view
    /// refers to its parent, which must outlive it.
    class SubgraphView
    {
        public:
            SubgraphView() = default;

            /// Throws InputError on an out-of-range or repeated vertex.
            SubgraphView(const Graph & parent, std::vector<unsigned> kept);

            auto parent() const -> const Graph & { return *_parent; }
            auto graph() const -> const Graph & { return _local; }
            auto size() const -> unsigned { return _local.size(); }

            auto globals() const -> std::span<const unsigned> { return _globals; }
            auto to_global(unsigned local) const -> unsigned { return _globals[local]; }
            auto to_local(unsigned global) const -> std::optional<unsigned>;

            /// Maps local ids to global ids, sorted ascending.
            auto to_global(std::span<const unsigned> locals) const -> std::vector<unsigned>;

        private:
            const Graph * _parent = nullptr;
            std::vector<unsigned> _globals;
            std::vector<std::pair<unsigned, unsigned>> _global_to_local;
            Graph _local;
    };

    /// Local ids follow the order of `vertices`.
    auto induced_subgraph(const Graph & g, std::vector<unsigned> vertices) -> SubgraphView;

    /// G_i (closed = false) or G_i^+ (closed = true) for 1-based position i.
    /// Local ids follow the ordering; in the closed form v_i is local 0.
    /// Throws InputError if i is outside 1..n.
    auto forward_neighborhood(const Graph & g, const VertexOrdering & ordering, unsigned i, bool closed) -> SubgraphView;

    auto is_clique(const Graph & g, std::span<const unsigned> vertices) -> bool;
    auto is_independent_set(const Graph & g, std::span<const unsigned> vertices) -> bool;
}

#endif

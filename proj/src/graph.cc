#include <indclique/graph.hh>
#include <indclique/errors.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace indclique
{
    auto build_graph(unsigned n, std::span<const Edge> edges) -> Graph
    {
        Graph g;
        g._n = n;
        g._adjacency.resize(n);
        g._edge_keys.reserve(edges.size());

        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.."
                        + std::to_string(n == 0 ? 0 : n - 1));
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u) + " in edge (" + std::to_string(u) + ", "
                        + std::to_string(v) + ")");
            if (g._edge_keys.insert(Graph::key(u, v)).second) {
                g._adjacency[u].push_back(v);
                g._adjacency[v].push_back(u);
            }
        }

        for (auto & list : g._adjacency)
            std::sort(list.begin(), list.end());
        g._m = g._edge_keys.size();
        return g;
    }

    auto Graph::adjacent(unsigned u, unsigned v) const -> bool
    {
        return u != v && _edge_keys.contains(key(u, v));
    }

    auto Graph::max_degree() const -> unsigned
    {
        unsigned result = 0;
        for (auto & list : _adjacency)
            result = std::max(result, static_cast<unsigned>(list.size()));
        return result;
    }

    auto Graph::min_degree() const -> unsigned
    {
        if (_n == 0)
            return 0;
        unsigned result = _n;
        for (auto & list : _adjacency)
            result = std::min(result, static_cast<unsigned>(list.size()));
        return result;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_m);
        for (unsigned u = 0 ; u < _n ; ++u)
            for (auto v : _adjacency[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::adjacency_rows() const -> std::vector<Bitset>
    {
        std::vector<Bitset> rows(_n, Bitset(_n));
        for (unsigned u = 0 ; u < _n ; ++u)
            for (auto v : _adjacency[u])
                rows[u].set(v);
        return rows;
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Edge> edges;
        auto n = g.size();
        edges.reserve(std::size_t{n} * (n ? n - 1 : 0) / 2 - g.edge_count());
        for (unsigned u = 0 ; u < n ; ++u) {
            auto nbrs = g.neighbors(u);
            auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
            for (unsigned v = u + 1 ; v < n ; ++v) {
                if (it != nbrs.end() && *it == v)
                    ++it;
                else
                    edges.emplace_back(u, v);
            }
        }
        return build_graph(n, edges);
    }

    VertexOrdering::VertexOrdering(std::vector<unsigned> order) :
        _order(std::move(order)),
        _rank(_order.size(), ~0u)
    {
        for (unsigned p = 0 ; p < _order.size() ; ++p) {
            auto v = _order[p];
            if (v >= _order.size())
                throw OrderingError("ordering entry " + std::to_string(v) + " is outside 0.." + std::to_string(_order.size() - 1));
            if (_rank[v] != ~0u)
                throw OrderingError("ordering lists vertex " + std::to_string(v) + " twice");
            _rank[v] = p;
        }
    }

    auto VertexOrdering::identity(unsigned n) -> VertexOrdering
    {
        std::vector<unsigned> order(n);
        std::iota(order.begin(), order.end(), 0u);
        return VertexOrdering(std::move(order));
    }

    void check_ordering_matches(const Graph & g, const VertexOrdering & ordering)
    {
        if (ordering.size() != g.size())
            throw OrderingError("ordering has " + std::to_string(ordering.size()) + " entries but the graph has "
                    + std::to_string(g.size()) + " vertices");
    }

    auto forward_neighbors(const Graph & g, const VertexOrdering & ordering, unsigned position) -> std::vector<unsigned>
    {
        std::vector<unsigned> result;
        for (auto w : g.neighbors(ordering.at(position)))
            if (ordering.rank(w) > position)
                result.push_back(w);
        std::sort(result.begin(), result.end(), [&] (unsigned a, unsigned b) { return ordering.rank(a) < ordering.rank(b); });
        return result;
    }

    SubgraphView::SubgraphView(const Graph & parent, std::vector<unsigned> kept) :
        _parent(&parent),
        _globals(std::move(kept))
    {
        auto s = static_cast<unsigned>(_globals.size());
        _global_to_local.reserve(s);
        for (unsigned j = 0 ; j < s ; ++j) {
            if (_globals[j] >= parent.size())
                throw InputError("vertex " + std::to_string(_globals[j]) + " is not in the graph");
            _global_to_local.emplace_back(_globals[j], j);
        }
        std::sort(_global_to_local.begin(), _global_to_local.end());
        for (unsigned j = 1 ; j < s ; ++j)
            if (_global_to_local[j].first == _global_to_local[j - 1].first)
                throw InputError("vertex " + std::to_string(_global_to_local[j].first) + " listed twice");

        // Pairwise probing costs s^2/2; scanning costs the sum of degrees. Hub
        // vertices inside small views make the scan the expensive one.
        std::size_t degree_sum = 0;
        for (auto v : _globals)
            degree_sum += parent.degree(v);

        std::vector<Edge> edges;
        if (std::size_t{s} * s / 2 <= degree_sum) {
            for (unsigned a = 0 ; a < s ; ++a)
                for (unsigned b = a + 1 ; b < s ; ++b)
                    if (parent.adjacent(_globals[a], _globals[b]))
                        edges.emplace_back(a, b);
        }
        else {
            for (unsigned a = 0 ; a < s ; ++a)
                for (auto w : parent.neighbors(_globals[a]))
                    if (auto b = to_local(w) ; b && a < *b)
                        edges.emplace_back(a, *b);
        }
        _local = build_graph(s, edges);
    }

    auto SubgraphView::to_local(unsigned global) const -> std::optional<unsigned>
    {
        auto it = std::lower_bound(_global_to_local.begin(), _global_to_local.end(), std::pair{global, 0u});
        if (it == _global_to_local.end() || it->first != global)
            return std::nullopt;
        return it->second;
    }

    auto SubgraphView::to_global(std::span<const unsigned> locals) const -> std::vector<unsigned>
    {
        std::vector<unsigned> result;
        result.reserve(locals.size());
        for (auto l : locals)
            result.push_back(_globals[l]);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto induced_subgraph(const Graph & g, std::vector<unsigned> vertices) -> SubgraphView
    {
        return SubgraphView(g, std::move(vertices));
    }

    auto forward_neighborhood(const Graph & g, const VertexOrdering & ordering, unsigned i, bool closed) -> SubgraphView
    {
        check_ordering_matches(g, ordering);
        if (i < 1 || i > g.size())
            throw InputError("forward neighborhood index " + std::to_string(i) + " is outside 1.." + std::to_string(g.size()));
        auto position = i - 1;
        auto forward = forward_neighbors(g, ordering, position);
        if (closed)
            forward.insert(forward.begin(), ordering.at(position));
        return SubgraphView(g, std::move(forward));
    }

    auto is_clique(const Graph & g, std::span<const unsigned> vertices) -> bool
    {
        if (! std::all_of(vertices.begin(), vertices.end(), [&] (unsigned v) { return v < g.size(); }))
            return false;
        for (std::size_t a = 0 ; a < vertices.size() ; ++a)
            for (std::size_t b = a + 1 ; b < vertices.size() ; ++b)
                if (! g.adjacent(vertices[a], vertices[b]))
                    return false;
        return true;
    }

    auto is_independent_set(const Graph & g, std::span<const unsigned> vertices) -> bool
    {
        for (std::size_t a = 0 ; a < vertices.size() ; ++a)
            for (std::size_t b = a + 1 ; b < vertices.size() ; ++b)
                if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b]))
                    return false;
        return std::all_of(vertices.begin(), vertices.end(), [&] (unsigned v) { return v < g.size(); });
    }
}

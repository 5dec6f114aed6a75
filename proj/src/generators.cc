#include <indclique/generators.hh>
#include <indclique/errors.hh>
#include <indclique/random.hh>

#include <algorithm>
#include <map>
#include <numeric>

namespace indclique
{
    namespace
    {
        const std::vector<std::pair<Family, std::string>> names{
            {Family::Gnp, "gnp"},
            {Family::KTree, "ktree"},
            {Family::PartialKTree, "partial_ktree"},
            {Family::Chordal, "chordal"},
            {Family::LineGraphOfGnp, "linegraph_of_gnp"},
            {Family::Cycle, "cycle"},
            {Family::Complete, "complete"},
            {Family::Petersen, "petersen"},
            {Family::Star, "star"}
        };

        void check_probability(double p)
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw InputError("probability " + std::to_string(p) + " is outside [0, 1]");
        }

        template <typename T_>
        void shuffle(std::vector<T_> & items, Rng & rng)
        {
            for (std::size_t i = items.size() ; i > 1 ; --i)
                std::swap(items[i - 1], items[rng.below(i)]);
        }

        auto reverse_construction(unsigned n) -> VertexOrdering
        {
            std::vector<unsigned> order(n);
            for (unsigned p = 0 ; p < n ; ++p)
                order[p] = n - 1 - p;
            return VertexOrdering(std::move(order));
        }
    }

    auto parse_family(std::string_view name) -> Family
    {
        for (auto & [family, text] : names)
            if (text == name)
                return family;
        throw InputError("unknown graph family '" + std::string(name) + "'");
    }

    auto family_name(Family family) -> std::string
    {
        for (auto & [f, text] : names)
            if (f == family)
                return text;
        return "unknown";
    }

    auto all_families() -> std::vector<Family>
    {
        std::vector<Family> result;
        for (auto & entry : names)
            result.push_back(entry.first);
        return result;
    }

    auto gnp(unsigned n, double p, std::uint64_t seed) -> Graph
    {
        check_probability(p);
        Rng rng(seed);
        std::vector<Edge> edges;
        for (unsigned u = 0 ; u < n ; ++u)
            for (unsigned v = u + 1 ; v < n ; ++v)
                if (rng.bernoulli(p))
                    edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    auto ktree(unsigned n, unsigned k, std::uint64_t seed) -> Generated
    {
        if (k < 1)
            throw InputError("ktree needs k >= 1");
        if (n < k + 1)
            throw InputError("ktree needs n >= k + 1");

        Rng rng(seed);
        std::vector<Edge> edges;
        // k-cliques stored flat, k ids each.
        std::vector<unsigned> cliques;
        for (unsigned u = 0 ; u <= k ; ++u)
            for (unsigned v = u + 1 ; v <= k ; ++v)
                edges.emplace_back(u, v);
        for (unsigned skip = 0 ; skip <= k ; ++skip)
            for (unsigned u = 0 ; u <= k ; ++u)
                if (u != skip)
                    cliques.push_back(u);

        for (unsigned v = k + 1 ; v < n ; ++v) {
            auto chosen = rng.below(cliques.size() / k);
            std::vector<unsigned> base(cliques.begin() + chosen * k, cliques.begin() + (chosen + 1) * k);
            for (auto u : base)
                edges.emplace_back(u, v);
            for (unsigned skip = 0 ; skip < k ; ++skip) {
                for (unsigned j = 0 ; j < k ; ++j)
                    if (j != skip)
                        cliques.push_back(base[j]);
                cliques.push_back(v);
            }
        }
        return Generated{build_graph(n, edges), reverse_construction(n)};
    }

    auto partial_ktree(unsigned n, unsigned k, double keep, std::uint64_t seed) -> Generated
    {
        check_probability(keep);
        auto full = ktree(n, k, seed);
        // Separate stream for the deletions so the underlying k-tree matches ktree(n, k, seed).
        Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<Edge> kept;
        for (auto e : full.graph.edges())
            if (rng.bernoulli(keep))
                kept.push_back(e);
        return Generated{build_graph(n, kept), std::move(full.ordering)};
    }

    auto chordal(unsigned n, unsigned max_attach, std::uint64_t seed) -> Generated
    {
        if (n == 0)
            throw InputError("chordal needs n >= 1");
        if (max_attach < 1)
            throw InputError("chordal needs an attachment size of at least 1");

        Rng rng(seed);
        std::vector<std::vector<unsigned>> adjacency(n);
        std::vector<Edge> edges;
        auto adjacent = [&] (unsigned a, unsigned b) {
            return std::find(adjacency[a].begin(), adjacency[a].end(), b) != adjacency[a].end();
        };

        for (unsigned v = 1 ; v < n ; ++v) {
            auto anchor = static_cast<unsigned>(rng.below(v));
            std::vector<unsigned> clique{anchor};
            auto candidates = adjacency[anchor];
            std::sort(candidates.begin(), candidates.end());
            shuffle(candidates, rng);
            for (auto w : candidates) {
                if (clique.size() >= max_attach)
                    break;
                if (rng.bernoulli(0.5) && std::all_of(clique.begin(), clique.end(), [&] (unsigned c) { return adjacent(c, w); }))
                    clique.push_back(w);
            }
            for (auto u : clique) {
                edges.emplace_back(u, v);
                adjacency[u].push_back(v);
                adjacency[v].push_back(u);
            }
        }
        return Generated{build_graph(n, edges), reverse_construction(n)};
    }

    auto line_graph(const Graph & g) -> Graph
    {
        auto edge_list = g.edges();
        std::vector<std::vector<unsigned>> incident(g.size());
        for (unsigned e = 0 ; e < edge_list.size() ; ++e) {
            incident[edge_list[e].first].push_back(e);
            incident[edge_list[e].second].push_back(e);
        }
        std::vector<Edge> edges;
        for (auto & list : incident)
            for (std::size_t a = 0 ; a < list.size() ; ++a)
                for (std::size_t b = a + 1 ; b < list.size() ; ++b)
                    edges.emplace_back(list[a], list[b]);
        return build_graph(static_cast<unsigned>(edge_list.size()), edges);
    }

    auto cycle(unsigned n) -> Graph
    {
        if (n < 3)
            throw InputError("cycle needs n >= 3");
        std::vector<Edge> edges;
        for (unsigned v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return build_graph(n, edges);
    }

    auto complete(unsigned n) -> Graph
    {
        std::vector<Edge> edges;
        for (unsigned u = 0 ; u < n ; ++u)
            for (unsigned v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return build_graph(n, edges);
    }

    auto petersen() -> Graph
    {
        // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
        std::vector<Edge> edges;
        for (unsigned i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(i + 5, (i + 2) % 5 + 5);
        }
        return build_graph(10, edges);
    }

    auto star(unsigned n) -> Graph
    {
        if (n == 0)
            throw InputError("star needs n >= 1");
        std::vector<Edge> edges;
        for (unsigned v = 1 ; v < n ; ++v)
            edges.emplace_back(0, v);
        return build_graph(n, edges);
    }

    auto generate(Family family, const GeneratorParams & params, std::uint64_t seed) -> Generated
    {
        switch (family) {
            case Family::Gnp:            return Generated{gnp(params.n, params.p, seed), std::nullopt};
            case Family::KTree:          return ktree(params.n, params.k, seed);
            case Family::PartialKTree:   return partial_ktree(params.n, params.k, params.p, seed);
            case Family::Chordal:        return chordal(params.n, params.k, seed);
            case Family::LineGraphOfGnp: return Generated{line_graph(gnp(params.n, params.p, seed)), std::nullopt};
            case Family::Cycle:          return Generated{cycle(params.n), std::nullopt};
            case Family::Complete:       return Generated{complete(params.n), std::nullopt};
            case Family::Petersen:       return Generated{petersen(), std::nullopt};
            case Family::Star:           return Generated{star(params.n), std::nullopt};
        }
        throw InputError("unknown graph family");
    }
}

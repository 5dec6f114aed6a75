#include <indclique/clique_exact.hh>
#include <indclique/errors.hh>
#include <indclique/orderings.hh>
#include <indclique/parallel.hh>

#include <algorithm>
#include <limits>

namespace indclique
{
    auto to_string(CliqueSource source) -> std::string
    {
        switch (source) {
            case CliqueSource::WholeGraph: return "whole-graph";
            case CliqueSource::Index:      return "index";
            case CliqueSource::Residual:   return "residual";
        }
        return "unknown";
    }

    namespace
    {
        class BranchAndBound
        {
            public:
                explicit BranchAndBound(const Graph & g) :
                    _rows(g.adjacency_rows())
                {
                }

                auto solve(unsigned n) -> std::vector<unsigned>
                {
                    Bitset candidates(n);
                    candidates.set_all();
                    if (n > 0)
                        expand(candidates);
                    return _best;
                }

            private:
                // Branches on candidates in ascending id order. The colouring is
                // built from the highest id down, so the colours used by the
                // candidates from position p onwards bound any clique among them;
                // that suffix bound only shrinks as p advances.
                void expand(Bitset candidates)
                {
                    auto vertices = candidates.to_vector();
                    std::vector<unsigned> suffix_bound(vertices.size() + 1, 0);
                    std::vector<Bitset> classes;
                    for (auto p = vertices.size() ; p-- > 0 ; ) {
                        auto v = vertices[p];
                        std::size_t c = 0;
                        while (c < classes.size() && classes[c].count_and(_rows[v]) != 0)
                            ++c;
                        if (c == classes.size())
                            classes.emplace_back(candidates.size());
                        classes[c].set(v);
                        suffix_bound[p] = std::max(suffix_bound[p + 1], static_cast<unsigned>(c + 1));
                    }

                    for (std::size_t p = 0 ; p < vertices.size() ; ++p) {
                        if (_current.size() + suffix_bound[p] <= _best.size())
                            return;

                        auto v = vertices[p];
                        _current.push_back(v);
                        auto next = candidates & _rows[v];
                        if (next.none()) {
                            if (_current.size() > _best.size())
                                _best = _current;
                        }
                        else
                            expand(std::move(next));
                        _current.pop_back();
                        candidates.reset(v);
                    }
                }

                std::vector<Bitset> _rows;
                std::vector<unsigned> _current, _best;
        };
    }

    auto max_clique_bruteforce(const Graph & g, unsigned cap) -> CliqueResult
    {
        if (g.size() > cap)
            throw OracleCapExceeded("max_clique_bruteforce", g.size(), cap);
        BranchAndBound search(g);
        return CliqueResult{search.solve(g.size()), CliqueSource::WholeGraph, 0};
    }

    auto bruteforce_subsolver(unsigned cap) -> CliqueSubsolver
    {
        return [cap] (const Graph & g) { return max_clique_bruteforce(g, cap).vertices; };
    }

    auto max_clique_ordered(const Graph & g, const VertexOrdering & ordering, const CliqueSubsolver & subsolver,
            unsigned workers) -> CliqueResult
    {
        check_ordering_matches(g, ordering);
        auto n = g.size();
        std::vector<std::vector<unsigned>> per_index(n);

        parallel_for(n, workers, [&] (unsigned p) {
            auto view = forward_neighborhood(g, ordering, p + 1, true);
            try {
                per_index[p] = view.to_global(subsolver(view.graph()));
            }
            catch (const std::exception & e) {
                throw SubsolverError(p + 1, e.what());
            }
        });

        CliqueResult best;
        for (unsigned p = 0 ; p < n ; ++p)
            if (best.vertices.empty() || per_index[p].size() > best.vertices.size())
                best = CliqueResult{std::move(per_index[p]), CliqueSource::Index, p + 1};
        return best;
    }

    auto decompose_degenerate(const Graph & g, const VertexOrdering & ordering, unsigned k) -> DecompositionBundle
    {
        check_ordering_matches(g, ordering);
        auto n = g.size();
        if (n <= k)
            throw OrderingError("cannot decompose: " + std::to_string(n) + " vertices is not more than k = " + std::to_string(k));

        for (unsigned v = 0 ; v < n ; ++v) {
            unsigned forward = 0;
            for (auto w : g.neighbors(v))
                if (ordering.rank(w) > ordering.rank(v))
                    ++forward;
            if (forward > k)
                throw OrderingError("vertex " + std::to_string(v) + " has " + std::to_string(forward)
                        + " later neighbors, more than k = " + std::to_string(k));
        }

        DecompositionBundle bundle;
        bundle.ordering = ordering;
        bundle.k = k;
        bundle.subgraphs.reserve(n - k);

        // Every vertex starts blue. Step p turns v_p red and keeps its blue
        // neighbors; red ones came earlier in the ordering.
        std::vector<bool> red(n, false);
        for (unsigned p = 0 ; p < n - k ; ++p) {
            auto v = ordering.at(p);
            red[v] = true;
            std::vector<unsigned> kept;
            for (auto w : g.neighbors(v))
                if (! red[w])
                    kept.push_back(w);
            std::sort(kept.begin(), kept.end(), [&] (unsigned a, unsigned b) { return ordering.rank(a) < ordering.rank(b); });
            bundle.subgraphs.emplace_back(g, std::move(kept));
        }

        std::vector<unsigned> rest;
        for (unsigned p = n - k ; p < n ; ++p)
            rest.push_back(ordering.at(p));
        bundle.residual = SubgraphView(g, std::move(rest));
        return bundle;
    }

    auto combine_degenerate(std::span<const std::vector<unsigned>> subgraph_cliques,
            const std::vector<unsigned> & residual_clique, const VertexOrdering & ordering) -> CliqueResult
    {
        std::size_t winner = std::numeric_limits<std::size_t>::max();
        for (std::size_t j = 0 ; j < subgraph_cliques.size() ; ++j)
            if (winner == std::numeric_limits<std::size_t>::max() || subgraph_cliques[j].size() > subgraph_cliques[winner].size())
                winner = j;

        // The residual only wins outright; on a tie, the subgraph clique plus
        // its vertex is one larger.
        if (winner == std::numeric_limits<std::size_t>::max() || residual_clique.size() > subgraph_cliques[winner].size()) {
            auto vertices = residual_clique;
            std::sort(vertices.begin(), vertices.end());
            return CliqueResult{std::move(vertices), CliqueSource::Residual, 0};
        }

        auto vertices = subgraph_cliques[winner];
        vertices.push_back(ordering.at(static_cast<unsigned>(winner)));
        std::sort(vertices.begin(), vertices.end());
        return CliqueResult{std::move(vertices), CliqueSource::Index, static_cast<unsigned>(winner + 1)};
    }

    auto max_clique_degenerate(const Graph & g, unsigned workers) -> CliqueResult
    {
        if (g.size() == 0)
            throw InputError("maximum clique of an empty graph");

        auto [ordering, k] = degeneracy_ordering(g);
        // Subproblems have at most k vertices; the oracle cap does not apply.
        auto subsolver = bruteforce_subsolver(std::max(k, default_clique_cap));

        if (g.size() <= k) {
            auto whole = subsolver(g);
            std::sort(whole.begin(), whole.end());
            return CliqueResult{std::move(whole), CliqueSource::WholeGraph, 0};
        }

        auto bundle = decompose_degenerate(g, ordering, k);
        std::vector<std::vector<unsigned>> cliques(bundle.subgraphs.size());
        parallel_for(static_cast<unsigned>(cliques.size()), workers, [&] (unsigned j) {
            auto & view = bundle.subgraphs[j];
            cliques[j] = view.to_global(subsolver(view.graph()));
        });
        auto residual = bundle.residual.to_global(subsolver(bundle.residual.graph()));

        return combine_degenerate(cliques, residual, ordering);
    }
}

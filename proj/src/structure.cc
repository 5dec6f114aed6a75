#include <indclique/structure.hh>
#include <indclique/errors.hh>
#include <indclique/orderings.hh>
#include <indclique/parallel.hh>
#include <indclique/random.hh>

#include <algorithm>
#include <deque>
#include <string>

namespace indclique
{
    namespace
    {
        class PivotEnumerator
        {
            public:
                PivotEnumerator(const Graph & g, std::size_t max_output) :
                    _rows(g.adjacency_rows()),
                    _max_output(max_output)
                {
                }

                void run(unsigned n)
                {
                    Bitset candidates(n), excluded(n);
                    candidates.set_all();
                    expand(candidates, excluded);
                }

                MaximalCliques result;

            private:
                void expand(Bitset candidates, Bitset excluded)
                {
                    if (result.partial)
                        return;
                    if (candidates.none()) {
                        if (excluded.none()) {
                            if (result.cliques.size() == _max_output) {
                                result.partial = true;
                                return;
                            }
                            auto clique = _current;
                            std::sort(clique.begin(), clique.end());
                            result.cliques.push_back(std::move(clique));
                        }
                        return;
                    }

                    // Pivot on the vertex of candidates ∪ excluded with most candidate neighbors.
                    unsigned pivot = Bitset::npos, pivot_count = 0;
                    auto consider = [&] (unsigned u) {
                        auto c = candidates.count_and(_rows[u]);
                        if (pivot == Bitset::npos || c > pivot_count) {
                            pivot = u;
                            pivot_count = c;
                        }
                    };
                    candidates.for_each(consider);
                    excluded.for_each(consider);

                    auto branch = candidates;
                    branch.subtract(_rows[pivot]);
                    for (auto v : branch.to_vector()) {
                        _current.push_back(v);
                        expand(candidates & _rows[v], excluded & _rows[v]);
                        _current.pop_back();
                        candidates.reset(v);
                        excluded.set(v);
                        if (result.partial)
                            return;
                    }
                }

                std::vector<Bitset> _rows;
                std::size_t _max_output;
                std::vector<unsigned> _current;
        };

        auto closed_forward_contains(const Graph & g, const VertexOrdering & ordering, unsigned position,
                std::span<const unsigned> clique) -> bool
        {
            auto v = ordering.at(position);
            for (auto u : clique)
                if (u != v && ! (ordering.rank(u) > position && g.adjacent(u, v)))
                    return false;
            return true;
        }
    }

    auto enumerate_maximal_cliques(const Graph & g, unsigned cap, std::size_t max_output) -> MaximalCliques
    {
        if (g.size() > cap)
            throw OracleCapExceeded("enumerate_maximal_cliques", g.size(), cap);
        if (g.size() == 0)
            return MaximalCliques{};
        PivotEnumerator enumerator(g, max_output);
        enumerator.run(g.size());
        std::sort(enumerator.result.cliques.begin(), enumerator.result.cliques.end());
        return std::move(enumerator.result);
    }

    auto container_index(const Graph & g, const VertexOrdering & ordering, std::span<const unsigned> clique) -> unsigned
    {
        check_ordering_matches(g, ordering);
        if (clique.empty() || ! is_clique(g, clique))
            throw InputError("container_index: vertex set is not a clique");

        // Maximal iff no common neighbor outside: scan the first member's neighbors.
        for (auto w : g.neighbors(clique.front())) {
            if (std::find(clique.begin(), clique.end(), w) != clique.end())
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&] (unsigned u) { return g.adjacent(u, w); }))
                throw InputError("container_index: clique is not maximal, vertex " + std::to_string(w) + " extends it");
        }

        unsigned earliest = g.size();
        for (auto u : clique)
            earliest = std::min(earliest, ordering.rank(u));
        return earliest + 1;
    }

    auto is_hamiltonian(const Graph & g, unsigned cap) -> std::optional<bool>
    {
        constexpr unsigned hard_limit = 24;
        if (cap > hard_limit)
            throw InputError("Hamiltonicity cap " + std::to_string(cap) + " is above the supported " + std::to_string(hard_limit));
        auto n = g.size();
        if (n > cap)
            return std::nullopt;
        if (n < 3)
            return false;

        using Mask = std::uint32_t;
        std::vector<Mask> nbrs(n, 0);
        for (unsigned v = 0 ; v < n ; ++v)
            for (auto w : g.neighbors(v))
                nbrs[v] |= Mask{1} << w;

        // ends[S]: vertices at which some path from 0 covering exactly S can end.
        Mask full = (Mask{1} << n) - 1;
        std::vector<Mask> ends(std::size_t{full} + 1, 0);
        ends[1] = 1;
        for (Mask s = 1 ; s <= full ; s += 2) {
            for (Mask e = ends[s] ; e ; e &= e - 1) {
                auto v = static_cast<unsigned>(std::countr_zero(e));
                for (Mask out = nbrs[v] & ~s ; out ; out &= out - 1) {
                    auto w = static_cast<unsigned>(std::countr_zero(out));
                    ends[s | (Mask{1} << w)] |= Mask{1} << w;
                }
            }
        }
        return (ends[full] & nbrs[0]) != 0;
    }

    auto two_clique_cover(const Graph & g) -> std::optional<CliquePair>
    {
        auto n = g.size();
        std::vector<int> colour(n, -1);
        for (unsigned start = 0 ; start < n ; ++start) {
            if (colour[start] != -1)
                continue;
            colour[start] = 0;
            std::deque<unsigned> queue{start};
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                for (unsigned w = 0 ; w < n ; ++w) {
                    if (w == u || g.adjacent(u, w))
                        continue;
                    // w and u are adjacent in the complement.
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    }
                    else if (colour[w] == colour[u])
                        return std::nullopt;
                }
            }
        }

        CliquePair cover;
        for (unsigned v = 0 ; v < n ; ++v)
            (colour[v] == 0 ? cover.first : cover.second).push_back(v);
        return cover;
    }

    auto check_2independent_structure(const Graph & g, const VertexOrdering & ordering,
            unsigned hamiltonian_cap, unsigned workers) -> StructureReport
    {
        auto verified = verify_k_independence(g, ordering, 2, workers);
        if (! verified.holds)
            throw IndependenceViolation("ordering is not 2-independent at index " + std::to_string(verified.witness->index),
                    *verified.witness);

        auto n = g.size();
        StructureReport report;
        report.verdicts.resize(n);
        parallel_for(n, workers, [&] (unsigned p) {
            auto view = forward_neighborhood(g, ordering, p + 1, true);
            auto & verdict = report.verdicts[p];
            verdict.index = p + 1;
            auto ham = is_hamiltonian(view.graph(), hamiltonian_cap);
            verdict.hamiltonian = ! ham ? Hamiltonicity::Skipped : *ham ? Hamiltonicity::Yes : Hamiltonicity::No;
            if (auto cover = two_clique_cover(view.graph()))
                verdict.cover = CliquePair{view.to_global(cover->first), view.to_global(cover->second)};
            verdict.passes = verdict.hamiltonian == Hamiltonicity::Yes || verdict.cover.has_value();
            verdict.inconclusive = verdict.hamiltonian == Hamiltonicity::Skipped && ! verdict.cover;
        });

        for (auto & verdict : report.verdicts) {
            if (verdict.inconclusive)
                ++report.inconclusive_count;
            else if (! verdict.passes)
                report.overall = false;
        }
        return report;
    }

    auto check_unique_containers(const Graph & g, const VertexOrdering & ordering, unsigned cap) -> ContainerReport
    {
        check_ordering_matches(g, ordering);
        auto cliques = enumerate_maximal_cliques(g, cap);
        ContainerReport report;
        report.partial = cliques.partial;
        for (auto & clique : cliques.cliques) {
            ++report.cliques_checked;
            auto expected = container_index(g, ordering, clique);
            unsigned containers = 0;
            bool expected_contains = false;
            for (unsigned p = 0 ; p < g.size() ; ++p)
                if (closed_forward_contains(g, ordering, p, clique)) {
                    ++containers;
                    expected_contains = expected_contains || p + 1 == expected;
                }
            if (containers != 1 || ! expected_contains)
                ++report.violations;
        }
        return report;
    }

    auto restrict_ordering(const Graph & g, const VertexOrdering & ordering, std::vector<unsigned> subset) -> Restriction
    {
        check_ordering_matches(g, ordering);
        SubgraphView view(g, std::move(subset));
        std::vector<unsigned> local(view.size());
        for (unsigned j = 0 ; j < view.size() ; ++j)
            local[j] = j;
        std::sort(local.begin(), local.end(), [&] (unsigned a, unsigned b) {
                return ordering.rank(view.to_global(a)) < ordering.rank(view.to_global(b)); });
        return Restriction{std::move(view), VertexOrdering(std::move(local))};
    }

    auto check_heredity(const Graph & g, const VertexOrdering & ordering, unsigned k, unsigned trials,
            std::uint64_t seed) -> HeredityReport
    {
        auto verified = verify_k_independence(g, ordering, k);
        if (! verified.holds)
            throw IndependenceViolation("ordering is not " + std::to_string(k) + "-independent at index "
                    + std::to_string(verified.witness->index), *verified.witness);

        Rng rng(seed);
        HeredityReport report;
        for (unsigned t = 0 ; t < trials ; ++t) {
            // Keep probability drawn per trial so subset sizes vary.
            double keep = rng.uniform();
            std::vector<unsigned> subset;
            for (unsigned v = 0 ; v < g.size() ; ++v)
                if (rng.bernoulli(keep))
                    subset.push_back(v);

            auto restricted = restrict_ordering(g, ordering, subset);
            ++report.trials;
            if (! verify_k_independence(restricted.view.graph(), restricted.ordering, k).holds) {
                ++report.violations;
                if (! report.counterexample)
                    report.counterexample = subset;
            }
        }
        return report;
    }
}

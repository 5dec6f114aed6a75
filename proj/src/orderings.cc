#include <indclique/orderings.hh>
#include <indclique/clique_exact.hh>
#include <indclique/parallel.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>

namespace indclique
{
    auto degeneracy_ordering(const Graph & g) -> DegeneracyResult
    {
        auto n = g.size();
        if (n == 0)
            throw InputError("degeneracy ordering of an empty graph");

        // Lazy heap of (residual degree, id): stale entries are skipped on pop.
        using Entry = std::pair<unsigned, unsigned>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        std::vector<unsigned> residual(n);
        std::vector<bool> removed(n, false);
        for (unsigned v = 0 ; v < n ; ++v) {
            residual[v] = g.degree(v);
            heap.emplace(residual[v], v);
        }

        std::vector<unsigned> order;
        order.reserve(n);
        unsigned degeneracy = 0;
        while (order.size() < n) {
            auto [d, v] = heap.top();
            heap.pop();
            if (removed[v] || d != residual[v])
                continue;
            removed[v] = true;
            order.push_back(v);
            degeneracy = std::max(degeneracy, d);
            for (auto w : g.neighbors(v))
                if (! removed[w])
                    heap.emplace(--residual[w], w);
        }

        return DegeneracyResult{VertexOrdering(std::move(order)), degeneracy};
    }

    namespace
    {
        // Lexicographic search for an independent set of size `target`, extending
        // `chosen` with vertices from `candidates` (ascending, all later than chosen).
        auto find_independent(const Graph & g, std::vector<unsigned> & chosen, const std::vector<unsigned> & candidates,
                unsigned target) -> bool
        {
            if (chosen.size() == target)
                return true;
            for (std::size_t c = 0 ; c < candidates.size() ; ++c) {
                if (chosen.size() + (candidates.size() - c) < target)
                    return false;
                auto v = candidates[c];
                std::vector<unsigned> rest;
                for (std::size_t d = c + 1 ; d < candidates.size() ; ++d)
                    if (! g.adjacent(v, candidates[d]))
                        rest.push_back(candidates[d]);
                chosen.push_back(v);
                if (find_independent(g, chosen, rest, target))
                    return true;
                chosen.pop_back();
            }
            return false;
        }

        auto complement_max_degree(const Graph & g) -> unsigned
        {
            return g.size() == 0 ? 0 : g.size() - 1 - g.min_degree();
        }
    }

    auto alpha_at_most(const Graph & g, unsigned k) -> AlphaCheck
    {
        auto target = k + 1;
        if (target > g.size())
            return AlphaCheck{};

        std::vector<unsigned> all(g.size());
        for (unsigned v = 0 ; v < g.size() ; ++v)
            all[v] = v;
        std::vector<unsigned> chosen;
        if (find_independent(g, chosen, all, target))
            return AlphaCheck{false, std::move(chosen)};
        return AlphaCheck{};
    }

    auto forward_profile(const Graph & g, const VertexOrdering & ordering) -> OrderingProfile
    {
        check_ordering_matches(g, ordering);
        OrderingProfile profile;
        for (unsigned i = 1 ; i <= g.size() ; ++i) {
            auto view = forward_neighborhood(g, ordering, i, false);
            profile.delta_sigma = std::max(profile.delta_sigma, view.graph().max_degree());
            profile.delta_bar_sigma = std::max(profile.delta_bar_sigma, complement_max_degree(view.graph()));
            profile.degeneracy_bound = std::max(profile.degeneracy_bound, view.size());
        }
        return profile;
    }

    auto verify_k_independence(const Graph & g, const VertexOrdering & ordering, unsigned k,
            unsigned workers) -> KIndependenceResult
    {
        check_ordering_matches(g, ordering);
        auto n = g.size();

        struct PerIndex
        {
            AlphaCheck check;
            unsigned alpha = 0;
            unsigned max_degree = 0;
            unsigned complement_max_degree = 0;
            unsigned size = 0;
        };
        std::vector<PerIndex> per_index(n);

        parallel_for(n, workers, [&] (unsigned p) {
            auto view = forward_neighborhood(g, ordering, p + 1, false);
            auto & slot = per_index[p];
            slot.check = alpha_at_most(view.graph(), k);
            slot.max_degree = view.graph().max_degree();
            slot.complement_max_degree = complement_max_degree(view.graph());
            slot.size = view.size();
            if (slot.check.holds) {
                // alpha(G_i) itself: the smallest bound that passes.
                while (slot.alpha < k && ! alpha_at_most(view.graph(), slot.alpha).holds)
                    ++slot.alpha;
            }
            else
                slot.check.witness = view.to_global(slot.check.witness);
        });

        KIndependenceResult result;
        result.holds = true;
        for (unsigned p = 0 ; p < n ; ++p) {
            auto & slot = per_index[p];
            result.profile.delta_sigma = std::max(result.profile.delta_sigma, slot.max_degree);
            result.profile.delta_bar_sigma = std::max(result.profile.delta_bar_sigma, slot.complement_max_degree);
            result.profile.degeneracy_bound = std::max(result.profile.degeneracy_bound, slot.size);
            result.profile.k_verified = std::max(result.profile.k_verified, slot.alpha);
            if (result.holds && ! slot.check.holds) {
                result.holds = false;
                result.witness = IndependenceWitness{p + 1, slot.check.witness};
            }
        }
        if (! result.holds)
            result.profile.k_verified = 0;
        return result;
    }

    auto independence_number_exact(const Graph & g, unsigned cap) -> IndependenceNumber
    {
        if (g.size() > cap)
            throw OracleCapExceeded("independence_number_exact", g.size(), cap);
        auto clique = max_clique_bruteforce(complement(g), cap);
        return IndependenceNumber{clique.size(), std::move(clique.vertices)};
    }

    auto inductive_independence_number_exact(const Graph & g, unsigned cap) -> InductiveIndependence
    {
        constexpr unsigned hard_limit = 24;
        if (cap > hard_limit)
            throw InputError("inductive independence oracle cap " + std::to_string(cap) + " is above the supported "
                    + std::to_string(hard_limit));
        auto n = g.size();
        if (n > cap)
            throw OracleCapExceeded("inductive_independence_number_exact", n, cap);
        if (n == 0)
            return InductiveIndependence{0, VertexOrdering{}};

        using Mask = std::uint32_t;
        std::vector<Mask> nbrs(n, 0);
        for (unsigned v = 0 ; v < n ; ++v)
            for (auto w : g.neighbors(v))
                nbrs[v] |= Mask{1} << w;

        Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
        std::size_t states = std::size_t{full} + 1;

        // alpha of every vertex subset: either skip the lowest vertex or take it.
        std::vector<std::uint8_t> alpha(states, 0);
        for (Mask s = 1 ; s != 0 && s <= full ; ++s) {
            auto v = static_cast<unsigned>(std::countr_zero(s));
            Mask without = s & (s - 1);
            alpha[s] = std::max<std::uint8_t>(alpha[without], alpha[without & ~nbrs[v]] + 1);
            if (s == full)
                break;
        }

        // best[R]: minimal achievable max forward alpha when R remains to be ordered.
        std::vector<std::uint8_t> best(states, 0), choice(states, 0);
        for (Mask r = 1 ; r != 0 && r <= full ; ++r) {
            std::uint8_t value = 0xff;
            for (Mask rest = r ; rest ; rest &= rest - 1) {
                auto v = static_cast<unsigned>(std::countr_zero(rest));
                Mask after = r & ~(Mask{1} << v);
                auto here = std::max(alpha[nbrs[v] & after], best[after]);
                if (here < value) {
                    value = here;
                    choice[r] = static_cast<std::uint8_t>(v);
                }
            }
            best[r] = value;
            if (r == full)
                break;
        }

        std::vector<unsigned> order;
        for (Mask r = full ; r ; r &= ~(Mask{1} << choice[r]))
            order.push_back(choice[r]);
        return InductiveIndependence{best[full], VertexOrdering(std::move(order))};
    }
}

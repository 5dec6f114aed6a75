#include <indclique/clique_approx.hh>
#include <indclique/parallel.hh>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace indclique
{
    auto mis_approx_kfree(const Graph & g, unsigned) -> std::vector<unsigned>
    {
        auto n = g.size();
        std::vector<bool> alive(n, true);
        std::vector<unsigned> degree(n);
        for (unsigned v = 0 ; v < n ; ++v)
            degree[v] = g.degree(v);

        std::vector<unsigned> result;
        for (unsigned remaining = n ; remaining > 0 ; ) {
            unsigned pick = n;
            for (unsigned v = 0 ; v < n ; ++v)
                if (alive[v] && (pick == n || degree[v] < degree[pick]))
                    pick = v;
            result.push_back(pick);

            std::vector<unsigned> dropped{pick};
            for (auto w : g.neighbors(pick))
                if (alive[w])
                    dropped.push_back(w);
            for (auto d : dropped)
                alive[d] = false;
            remaining -= static_cast<unsigned>(dropped.size());
            for (auto d : dropped)
                for (auto w : g.neighbors(d))
                    if (alive[w])
                        --degree[w];
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto kfree_ratio_bound(double dbar, unsigned k) -> RatioBound
    {
        RatioBound bound{"dbar / ln(ln(dbar) / (k + 1))", dbar, false, 0};
        if (dbar <= 1)
            return bound;
        double inner = std::log(dbar) / (k + 1.0);
        if (inner <= 1)
            return bound;
        double value = dbar / std::log(inner);
        if (std::isfinite(value) && value >= 1) {
            bound.applicable = true;
            bound.value = value;
        }
        return bound;
    }

    auto triangle_free_ratio_bound(double d) -> RatioBound
    {
        RatioBound bound{"(d - 1)^2 / (d ln(d) - d + 1)", d, false, 0};
        if (d <= 1)
            return bound;
        double denominator = d * std::log(d) - d + 1;
        if (denominator <= 0)
            return bound;
        double value = (d - 1) * (d - 1) / denominator;
        if (std::isfinite(value) && value >= 1) {
            bound.applicable = true;
            bound.value = value;
        }
        return bound;
    }

    auto clique_approx(const Graph & g, const VertexOrdering & ordering, unsigned k,
            const IndependentSetApprox & subroutine, std::optional<unsigned> omega, unsigned workers) -> ApproxReport
    {
        check_ordering_matches(g, ordering);
        auto n = g.size();

        std::vector<std::vector<unsigned>> cliques(n);
        std::vector<unsigned> complement_degree(n, 0);
        parallel_for(n, workers, [&] (unsigned p) {
            auto view = forward_neighborhood(g, ordering, p + 1, true);
            auto flipped = complement(view.graph());
            complement_degree[p] = flipped.max_degree();
            auto chosen = subroutine(flipped, k + 1);
            if (! is_independent_set(flipped, chosen))
                throw std::logic_error("independent set routine returned a non-independent set for index " + std::to_string(p + 1));
            cliques[p] = view.to_global(chosen);
        });

        ApproxReport report;
        report.per_index_sizes.reserve(n);
        unsigned winner = 0;
        for (unsigned p = 0 ; p < n ; ++p) {
            report.per_index_sizes.push_back(static_cast<unsigned>(cliques[p].size()));
            report.delta_bar_sigma = std::max(report.delta_bar_sigma, complement_degree[p]);
            if (cliques[p].size() > cliques[winner].size())
                winner = p;
        }
        if (n > 0)
            report.clique = CliqueResult{std::move(cliques[winner]), CliqueSource::Index, winner + 1};

        report.complement_max_degree = n == 0 ? 0 : n - 1 - g.min_degree();
        report.bound = kfree_ratio_bound(report.delta_bar_sigma, k);
        report.coarse_bound = kfree_ratio_bound(report.complement_max_degree, k);
        if (k == 2)
            report.triangle_free_bound = triangle_free_ratio_bound(report.complement_max_degree);
        if (omega && report.clique.size() > 0)
            report.beta = static_cast<double>(*omega) / report.clique.size();
        return report;
    }
}

#ifndef INDCLIQUE_CLIQUE_APPROX_HH
#define INDCLIQUE_CLIQUE_APPROX_HH

#include <indclique/clique_exact.hh>
#include <indclique/graph.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace indclique
{
    /// Independent set routine for graphs with no clique of size `clique_free`.
    using IndependentSetApprox = std::function<std::vector<unsigned> (const Graph &, unsigned clique_free)>;

    /// Minimum-degree greedy: take a vertex of least degree in what remains
    /// (smallest id on ties), drop its closed neighborhood, repeat. Ignores
    /// the clique-freeness parameter; it carries no ratio guarantee of its own.
    auto mis_approx_kfree(const Graph & g, unsigned clique_free) -> std::vector<unsigned>;

    /// A ratio formula evaluated at some maximum complement degree.
    struct RatioBound
    {
        std::string formula;
        double degree = 0;
        bool applicable = false;
        /// Only meaningful when applicable.
        double value = 0;
    };

    /// dbar / ln(ln(dbar) / (k + 1)), natural logs. Applicable when defined and >= 1.
    auto kfree_ratio_bound(double dbar, unsigned k) -> RatioBound;

    /// (d - 1)^2 / (d ln d - d + 1), the triangle-free variant used when k = 2.
    auto triangle_free_ratio_bound(double d) -> RatioBound;

    struct ApproxReport
    {
        CliqueResult clique;
        /// Formula at the forward complement degree dbar_sigma; this is the guard.
        RatioBound bound;
        /// Same formula at the maximum degree of the whole complement (coarser).
        RatioBound coarse_bound;
        /// Present only for k = 2.
        std::optional<RatioBound> triangle_free_bound;
        /// Clique size found in each closed forward neighborhood, by index.
        std::vector<unsigned> per_index_sizes;
        unsigned delta_bar_sigma = 0;
        unsigned complement_max_degree = 0;
        /// omega / |clique| when an exact omega was supplied.
        std::optional<double> beta;
    };

    /// Approximate maximum clique through a k-independence ordering: for each
    /// G_i^+, an independent set of its complement (which has no (k+1)-clique)
    /// is a clique of G_i^+; the largest wins, smallest index on ties.
    auto clique_approx(const Graph & g, const VertexOrdering & ordering, unsigned k,
            const IndependentSetApprox & subroutine = mis_approx_kfree, std::optional<unsigned> omega = std::nullopt,
            unsigned workers = 1) -> ApproxReport;
}

#endif

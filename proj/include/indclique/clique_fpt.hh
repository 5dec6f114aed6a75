#ifndef INDCLIQUE_CLIQUE_FPT_HH
#define INDCLIQUE_CLIQUE_FPT_HH

#include <indclique/clique_exact.hh>
#include <indclique/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace indclique
{
    /// binomial(n, r), throwing std::overflow_error if it does not fit in 64 bits.
    auto checked_binomial(std::uint64_t n, std::uint64_t r) -> std::uint64_t;

    /// Vertex count that forces a p-clique in any graph whose independence
    /// number is at most k: the Ramsey bound R(k+1, p) <= C(p+k-1, k).
    /// Requires p >= 1 and k >= 1; throws std::overflow_error past 64 bits.
    auto ramsey_threshold(unsigned p, unsigned k) -> std::uint64_t;

    /// The coarser (p+k-1)^k, which dominates ramsey_threshold.
    auto ramsey_power_bound(unsigned p, unsigned k) -> std::uint64_t;

    struct RamseyOutcome
    {
        enum class Kind
        {
            Clique,
            IndependentSet
        };

        Kind kind = Kind::Clique;
        /// Ascending.
        std::vector<unsigned> vertices;
    };

    /// Finds a clique of size c or an independent set of size i in a graph of
    /// at least C(i+c-2, c-1) vertices, by the standard recursive argument:
    /// split on a vertex into neighbors (for a smaller clique) and non-neighbors
    /// (for a smaller independent set), one of which is large enough. Throws
    /// InputError if i or c is 0 or the graph is too small.
    auto ramsey_extract(const Graph & g, unsigned i, unsigned c) -> RamseyOutcome;

    /// Does g contain a clique on p vertices? `ordering` must be an inductive
    /// k-independence ordering of g. Each closed forward neighborhood large
    /// enough to force a p-clique gets one extracted constructively; smaller
    /// ones have all their p-subsets enumerated. Returns a p-clique from the
    /// smallest index that has one, or nullopt.
    ///
    /// Throws OrderingError if the ordering does not match g, and
    /// IndependenceViolation if extraction turns up an independent set of
    /// size k+1, which refutes the ordering.
    auto clique_fpt(const Graph & g, const VertexOrdering & ordering, unsigned k, unsigned p) -> std::optional<CliqueResult>;
}

#endif

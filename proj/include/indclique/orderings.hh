#ifndef INDCLIQUE_ORDERINGS_HH
#define INDCLIQUE_ORDERINGS_HH

#include <indclique/errors.hh>
#include <indclique/graph.hh>

#include <optional>
#include <vector>

namespace indclique
{
    struct DegeneracyResult
    {
        VertexOrdering ordering;
        unsigned degeneracy = 0;
    };

    /// Repeatedly removes a vertex of minimum residual degree, smallest id
    /// first among ties. The removal order is the ordering; the degeneracy is
    /// the largest residual degree seen at removal. Throws InputError on an
    /// empty graph.
    auto degeneracy_ordering(const Graph & g) -> DegeneracyResult;

    struct AlphaCheck
    {
        bool holds = true;
        /// When !holds: the lexicographically smallest independent set of size k+1.
        std::vector<unsigned> witness;
    };

    /// Does g have no independent set of size k+1?
    auto alpha_at_most(const Graph & g, unsigned k) -> AlphaCheck;

    struct OrderingProfile
    {
        /// Smallest k for which the ordering verifies; meaningful only when verification passed.
        unsigned k_verified = 0;
        /// max_i of the maximum degree of G_i.
        unsigned delta_sigma = 0;
        /// max_i of the maximum degree of the complement of G_i.
        unsigned delta_bar_sigma = 0;
        /// max_i |V(G_i)|.
        unsigned degeneracy_bound = 0;
    };

    /// The degree statistics of the forward neighborhoods, without any
    /// independence checking (k_verified is left at 0).
    auto forward_profile(const Graph & g, const VertexOrdering & ordering) -> OrderingProfile;

    struct KIndependenceResult
    {
        bool holds = false;
        OrderingProfile profile;
        /// On failure: the smallest index whose forward neighborhood breaks the bound.
        std::optional<IndependenceWitness> witness;
    };

    /// Checks that ordering is an inductive k-independence ordering of g, i.e.
    /// alpha(G_i) <= k for every position i. Throws OrderingError if the
    /// ordering does not match g.
    auto verify_k_independence(const Graph & g, const VertexOrdering & ordering, unsigned k,
            unsigned workers = 1) -> KIndependenceResult;

    struct IndependenceNumber
    {
        unsigned alpha = 0;
        std::vector<unsigned> witness;
    };

    inline constexpr unsigned default_independence_cap = 40;
    inline constexpr unsigned default_lambda_cap = 9;

    /// Exact alpha(g), solved as a maximum clique of the complement. Throws
    /// OracleCapExceeded above `cap` vertices.
    auto independence_number_exact(const Graph & g, unsigned cap = default_independence_cap) -> IndependenceNumber;

    struct InductiveIndependence
    {
        unsigned lambda = 0;
        VertexOrdering ordering;
    };

    /// Exact inductive independence number, with an ordering attaining it.
    /// Minimises over all orderings by dynamic programming over the set of
    /// vertices still to be placed. Throws OracleCapExceeded above `cap`
    /// vertices; caps above 24 are rejected as InputError.
    auto inductive_independence_number_exact(const Graph & g, unsigned cap = default_lambda_cap) -> InductiveIndependence;
}

#endif

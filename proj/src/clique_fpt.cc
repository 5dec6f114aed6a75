#include <indclique/clique_fpt.hh>
#include <indclique/errors.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace indclique
{
    auto checked_binomial(std::uint64_t n, std::uint64_t r) -> std::uint64_t
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        // result * (n - r + j) / j stays integral at each step; divide by the
        // gcd first so the intermediate product overflows only if the result does.
        std::uint64_t result = 1;
        for (std::uint64_t j = 1 ; j <= r ; ++j) {
            std::uint64_t factor = n - r + j;
            std::uint64_t g = std::gcd(result, j);
            std::uint64_t reduced = result / g;
            std::uint64_t divisor = j / g;
            factor /= divisor;
            if (reduced > std::numeric_limits<std::uint64_t>::max() / factor)
                throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") overflows 64 bits");
            result = reduced * factor;
        }
        return result;
    }

    auto ramsey_threshold(unsigned p, unsigned k) -> std::uint64_t
    {
        if (p < 1 || k < 1)
            throw InputError("ramsey_threshold needs p >= 1 and k >= 1");
        return checked_binomial(std::uint64_t{p} + k - 1, k);
    }

    auto ramsey_power_bound(unsigned p, unsigned k) -> std::uint64_t
    {
        if (p < 1 || k < 1)
            throw InputError("ramsey_power_bound needs p >= 1 and k >= 1");
        std::uint64_t base = std::uint64_t{p} + k - 1, result = 1;
        for (unsigned e = 0 ; e < k ; ++e) {
            if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
                throw std::overflow_error("(p+k-1)^k overflows 64 bits");
            result *= base;
        }
        return result;
    }

    namespace
    {
        // Threshold for (independent set i, clique c), saturating instead of throwing.
        auto ramsey_bound(unsigned i, unsigned c) -> std::uint64_t
        {
            try {
                return checked_binomial(std::uint64_t{i} + c - 2, c - 1);
            }
            catch (const std::overflow_error &) {
                return std::numeric_limits<std::uint64_t>::max();
            }
        }

        auto extract(const Graph & g, std::vector<unsigned> vertices, unsigned i, unsigned c) -> RamseyOutcome
        {
            using Kind = RamseyOutcome::Kind;
            if (c == 1)
                return RamseyOutcome{Kind::Clique, {vertices.front()}};
            if (i == 1)
                return RamseyOutcome{Kind::IndependentSet, {vertices.front()}};

            auto v = vertices.front();
            std::vector<unsigned> near, far;
            for (std::size_t j = 1 ; j < vertices.size() ; ++j)
                (g.adjacent(v, vertices[j]) ? near : far).push_back(vertices[j]);

            // |near| + |far| = |vertices| - 1 >= R(i, c-1) + R(i-1, c) - 1, so one side suffices.
            if (near.size() >= ramsey_bound(i, c - 1)) {
                auto result = extract(g, std::move(near), i, c - 1);
                if (result.kind == Kind::Clique)
                    result.vertices.push_back(v);
                return result;
            }
            auto result = extract(g, std::move(far), i - 1, c);
            if (result.kind == Kind::IndependentSet)
                result.vertices.push_back(v);
            return result;
        }

        // First p-subset of view's local ids (lexicographic) that is a clique.
        auto enumerate_subsets(const Graph & local, unsigned p) -> std::optional<std::vector<unsigned>>
        {
            auto n = local.size();
            if (p > n)
                return std::nullopt;
            std::vector<unsigned> subset(p);
            std::iota(subset.begin(), subset.end(), 0u);
            while (true) {
                if (is_clique(local, subset))
                    return subset;
                // Advance to the next combination.
                int j = static_cast<int>(p) - 1;
                while (j >= 0 && subset[j] == n - p + static_cast<unsigned>(j))
                    --j;
                if (j < 0)
                    return std::nullopt;
                ++subset[j];
                for (auto t = static_cast<unsigned>(j) + 1 ; t < p ; ++t)
                    subset[t] = subset[t - 1] + 1;
            }
        }
    }

    auto ramsey_extract(const Graph & g, unsigned i, unsigned c) -> RamseyOutcome
    {
        if (i < 1 || c < 1)
            throw InputError("ramsey_extract needs i >= 1 and c >= 1");
        auto needed = ramsey_bound(i, c);
        if (g.size() < needed)
            throw InputError("ramsey_extract needs at least " + std::to_string(needed) + " vertices for (i = "
                    + std::to_string(i) + ", c = " + std::to_string(c) + "), got " + std::to_string(g.size()));
        std::vector<unsigned> all(g.size());
        std::iota(all.begin(), all.end(), 0u);
        auto result = extract(g, std::move(all), i, c);
        std::sort(result.vertices.begin(), result.vertices.end());
        return result;
    }

    auto clique_fpt(const Graph & g, const VertexOrdering & ordering, unsigned k, unsigned p) -> std::optional<CliqueResult>
    {
        check_ordering_matches(g, ordering);
        if (p == 0)
            return CliqueResult{{}, CliqueSource::Index, 1};
        auto n = g.size();
        if (p > n)
            return std::nullopt;

        // A 0-independence ordering is also a 1-independence ordering, and the
        // Ramsey bound is only meaningful from k = 1.
        auto bound = std::max(k, 1u);
        std::uint64_t threshold;
        try {
            threshold = ramsey_threshold(p, bound);
        }
        catch (const std::overflow_error &) {
            threshold = std::uint64_t{n} + 1;
        }

        for (unsigned i = 1 ; i <= n ; ++i) {
            auto view = forward_neighborhood(g, ordering, i, true);
            if (view.size() >= threshold) {
                auto outcome = ramsey_extract(view.graph(), bound + 1, p);
                if (outcome.kind == RamseyOutcome::Kind::IndependentSet)
                    throw IndependenceViolation("forward neighborhood " + std::to_string(i) + " has an independent set of size "
                            + std::to_string(bound + 1) + ", so the ordering is not " + std::to_string(bound) + "-independent",
                            IndependenceWitness{i, view.to_global(outcome.vertices)});
                auto vertices = view.to_global(outcome.vertices);
                vertices.resize(p);
                return CliqueResult{std::move(vertices), CliqueSource::Index, i};
            }
            if (auto found = enumerate_subsets(view.graph(), p))
                return CliqueResult{view.to_global(*found), CliqueSource::Index, i};
        }
        return std::nullopt;
    }
}

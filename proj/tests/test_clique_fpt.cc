#include <doctest.h>

#include "oracles.hh"

#include <indclique/clique_exact.hh>
#include <indclique/clique_fpt.hh>
#include <indclique/errors.hh>
#include <indclique/generators.hh>
#include <indclique/orderings.hh>

#include <stdexcept>

using namespace indclique;

TEST_CASE("ramsey_threshold")
{
    CHECK(ramsey_threshold(4, 1) == 4);
    CHECK(ramsey_threshold(3, 2) == 6);
    for (unsigned k = 1 ; k <= 6 ; ++k)
        CHECK(ramsey_threshold(1, k) == 1);

    // C(p+k-1, k) never exceeds (p+k-1)^k.
    for (unsigned p = 1 ; p <= 8 ; ++p)
        for (unsigned k = 1 ; k <= 6 ; ++k)
            CHECK(ramsey_threshold(p, k) <= ramsey_power_bound(p, k));

    CHECK(ramsey_power_bound(3, 2) == 16);
    CHECK_THROWS_AS(ramsey_threshold(0, 1), InputError);
    CHECK_THROWS_AS(ramsey_threshold(1, 0), InputError);
    CHECK_THROWS_AS(ramsey_threshold(100, 60), std::overflow_error);
    CHECK_THROWS_AS(ramsey_power_bound(100, 60), std::overflow_error);
}

TEST_CASE("checked_binomial")
{
    CHECK(checked_binomial(0, 0) == 1);
    CHECK(checked_binomial(5, 7) == 0);
    CHECK(checked_binomial(10, 3) == 120);
    CHECK(checked_binomial(62, 31) == 465428353255261088ull);
    CHECK(checked_binomial(67, 33) == 14226520737620288370ull);
    CHECK_THROWS_AS(checked_binomial(68, 34), std::overflow_error);
}

TEST_CASE("ramsey_extract examples")
{
    using Kind = RamseyOutcome::Kind;

    SUBCASE("six vertices without an independent triple hold a triangle")
    {
        // Two disjoint triangles plus a perfect matching between them: alpha = 2.
        auto g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
        REQUIRE(oracle::independence_number(g) == 2);
        auto outcome = ramsey_extract(g, 3, 3);
        CHECK(outcome.kind == Kind::Clique);
        CHECK(outcome.vertices.size() == 3);
        CHECK(is_clique(g, outcome.vertices));
    }

    SUBCASE("K_4 with (i, c) = (2, 3)")
    {
        auto outcome = ramsey_extract(complete(4), 2, 3);
        CHECK(outcome.kind == Kind::Clique);
        CHECK(outcome.vertices.size() == 3);
    }

    SUBCASE("edgeless graph yields an independent set")
    {
        auto outcome = ramsey_extract(build_graph(6, {}), 3, 3);
        CHECK(outcome.kind == Kind::IndependentSet);
        CHECK(outcome.vertices.size() == 3);
    }

    SUBCASE("too few vertices")
    {
        CHECK_THROWS_AS(ramsey_extract(cycle(5), 3, 3), InputError);
        CHECK_THROWS_AS(ramsey_extract(cycle(5), 0, 3), InputError);
    }
}

TEST_CASE("ramsey_extract always returns a valid witness of the requested size")
{
    using Kind = RamseyOutcome::Kind;
    for (std::uint64_t seed = 0 ; seed < 60 ; ++seed) {
        auto n = 1 + static_cast<unsigned>(seed % 12);
        auto g = oracle::random_graph(n, 0.5, seed);
        for (unsigned i = 1 ; i <= n ; ++i)
            for (unsigned c = 1 ; c <= n ; ++c) {
                if (checked_binomial(i + c - 2, c - 1) > n)
                    continue;
                auto outcome = ramsey_extract(g, i, c);
                if (outcome.kind == Kind::Clique) {
                    CHECK(outcome.vertices.size() == c);
                    CHECK(is_clique(g, outcome.vertices));
                }
                else {
                    CHECK(outcome.vertices.size() == i);
                    CHECK(is_independent_set(g, outcome.vertices));
                }
            }
    }
}

TEST_CASE("clique_fpt examples")
{
    SUBCASE("K_5 takes the threshold branch at index 1")
    {
        auto found = clique_fpt(complete(5), VertexOrdering::identity(5), 1, 4);
        REQUIRE(found.has_value());
        CHECK(found->size() == 4);
        CHECK(found->index == 1);
        CHECK(is_clique(complete(5), found->vertices));
    }

    SUBCASE("5-cycle has no triangle")
    {
        CHECK_FALSE(clique_fpt(cycle(5), VertexOrdering::identity(5), 2, 3).has_value());
        CHECK(clique_fpt(cycle(5), VertexOrdering::identity(5), 2, 2).has_value());
    }

    SUBCASE("p larger than n")
    {
        CHECK_FALSE(clique_fpt(complete(3), VertexOrdering::identity(3), 1, 4).has_value());
    }

    SUBCASE("an ordering that is not k-independent is caught by the extractor")
    {
        // Star centre first: its forward neighborhood is 6 independent leaves.
        auto g = star(7);
        try {
            clique_fpt(g, VertexOrdering::identity(7), 1, 3);
            FAIL("expected IndependenceViolation");
        }
        catch (const IndependenceViolation & e) {
            CHECK(e.witness.index == 1);
            CHECK(e.witness.vertices.size() == 2);
            CHECK(is_independent_set(g, e.witness.vertices));
        }
    }

    SUBCASE("mismatched ordering")
    {
        CHECK_THROWS_AS(clique_fpt(cycle(5), VertexOrdering::identity(3), 2, 2), OrderingError);
    }
}

TEST_CASE("clique_fpt decision matches omega >= p and is monotone")
{
    for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
        auto g = gnp(20, 0.5, seed);
        auto [sigma, d] = degeneracy_ordering(g);
        auto omega = max_clique_bruteforce(g).size();
        bool previous = true;
        for (unsigned p = 1 ; p <= omega + 1 ; ++p) {
            auto found = clique_fpt(g, sigma, d, p);
            CHECK(found.has_value() == (omega >= p));
            if (found) {
                CHECK(found->size() == p);
                CHECK(is_clique(g, found->vertices));
            }
            CHECK((previous || ! found));
            previous = found.has_value();
        }
    }
}

TEST_CASE("threshold branch never sees an independent set under verified orderings")
{
    // Chordal orderings are 1-independent; forward neighborhoods are cliques, so
    // small p triggers extraction often.
    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto generated = chordal(30, 6, seed);
        for (unsigned p = 1 ; p <= 5 ; ++p)
            CHECK_NOTHROW(clique_fpt(generated.graph, *generated.ordering, 1, p));
    }
}

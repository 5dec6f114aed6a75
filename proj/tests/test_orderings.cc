#include <doctest.h>

#include "oracles.hh"

#include <indclique/errors.hh>
#include <indclique/generators.hh>
#include <indclique/orderings.hh>
#include <indclique/structure.hh>

using namespace indclique;

namespace
{
    auto forward_count(const Graph & g, const VertexOrdering & sigma, unsigned v) -> unsigned
    {
        unsigned count = 0;
        for (auto w : g.neighbors(v))
            count += sigma.rank(w) > sigma.rank(v);
        return count;
    }
}

TEST_CASE("degeneracy_ordering on named graphs")
{
    CHECK(degeneracy_ordering(star(6)).degeneracy == 1);
    CHECK(degeneracy_ordering(petersen()).degeneracy == 3);
    CHECK(degeneracy_ordering(complete(6)).degeneracy == 5);
    CHECK(degeneracy_ordering(build_graph(4, {})).degeneracy == 0);
    CHECK_THROWS_AS(degeneracy_ordering(build_graph(0, {})), InputError);
}

TEST_CASE("degeneracy_ordering breaks ties by smallest id")
{
    // Path 0-1-2-3: leaves 0 and 3 tie at degree 1; 0 goes first, then 1
    // (now a leaf, smaller than 3), then 2, then 3.
    auto result = degeneracy_ordering(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(std::vector<unsigned>(result.ordering.order().begin(), result.ordering.order().end())
            == std::vector<unsigned>{0, 1, 2, 3});
}

TEST_CASE("degeneracy ordering is valid, tight, and a d-independence ordering")
{
    for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
        auto g = oracle::random_graph(13, 0.1 + 0.02 * seed, seed);
        auto [sigma, d] = degeneracy_ordering(g);
        CAPTURE(seed);
        CHECK(d == oracle::degeneracy(g));
        for (unsigned v = 0 ; v < g.size() ; ++v)
            CHECK(forward_count(g, sigma, v) <= d);
        CHECK(verify_k_independence(g, sigma, d).holds);
    }
}

TEST_CASE("ktree generator has degeneracy exactly k")
{
    for (unsigned k = 1 ; k <= 5 ; ++k)
        for (std::uint64_t seed = 0 ; seed < 3 ; ++seed)
            CHECK(degeneracy_ordering(ktree(30, k, seed).graph).degeneracy == k);
}

TEST_CASE("alpha_at_most")
{
    auto c5 = cycle(5);
    CHECK(alpha_at_most(c5, 2).holds);

    auto failed = alpha_at_most(c5, 1);
    CHECK_FALSE(failed.holds);
    REQUIRE(failed.witness.size() == 2);
    CHECK(is_independent_set(c5, failed.witness));
    CHECK(failed.witness == std::vector<unsigned>{0, 2});

    auto edgeless = alpha_at_most(build_graph(4, {}), 3);
    CHECK_FALSE(edgeless.holds);
    CHECK(edgeless.witness.size() == 4);

    CHECK(alpha_at_most(build_graph(0, {}), 0).holds);
    CHECK_FALSE(alpha_at_most(build_graph(1, {}), 0).holds);
}

TEST_CASE("alpha_at_most agrees with the exact independence number")
{
    for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
        auto g = oracle::random_graph(5 + seed % 11, 0.5, seed);
        auto alpha = oracle::independence_number(g);
        CHECK(independence_number_exact(g).alpha == alpha);
        for (unsigned k = 0 ; k <= 6 ; ++k) {
            auto check = alpha_at_most(g, k);
            CHECK(check.holds == (alpha <= k));
            if (! check.holds) {
                CHECK(check.witness.size() == k + 1);
                CHECK(is_independent_set(g, check.witness));
            }
        }
    }
}

TEST_CASE("verify_k_independence")
{
    SUBCASE("complete graphs are 1-independent under any ordering")
    {
        auto k7 = complete(7);
        for (std::uint64_t seed = 0 ; seed < 5 ; ++seed) {
            auto result = verify_k_independence(k7, VertexOrdering(oracle::random_order(7, seed)), 1);
            CHECK(result.holds);
            CHECK(result.profile.k_verified == 1);
            CHECK(result.profile.delta_bar_sigma == 0);
        }
    }

    SUBCASE("5-cycle under the identity ordering")
    {
        auto c5 = cycle(5);
        auto identity = VertexOrdering::identity(5);
        auto pass = verify_k_independence(c5, identity, 2);
        CHECK(pass.holds);
        CHECK(pass.profile.k_verified == 2);
        CHECK(pass.profile.degeneracy_bound == 2);
        CHECK(pass.profile.delta_sigma == 0);
        CHECK(pass.profile.delta_bar_sigma == 1);

        auto fail = verify_k_independence(c5, identity, 1);
        CHECK_FALSE(fail.holds);
        REQUIRE(fail.witness.has_value());
        CHECK(fail.witness->index == 1);
        CHECK(fail.witness->vertices == std::vector<unsigned>{1, 4});
    }

    SUBCASE("chordal graphs with their reverse construction order")
    {
        for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
            auto generated = chordal(25, 4, seed);
            auto result = verify_k_independence(generated.graph, *generated.ordering, 1);
            CHECK(result.holds);
        }
    }

    SUBCASE("k_verified is the largest forward alpha")
    {
        for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
            auto g = oracle::random_graph(11, 0.4, seed);
            auto order = oracle::random_order(11, seed);
            auto expected = oracle::max_forward_alpha(g, order);
            auto result = verify_k_independence(g, VertexOrdering(order), 10);
            CHECK(result.holds);
            CHECK(result.profile.k_verified == expected);
            if (expected > 0) {
                auto tight = verify_k_independence(g, VertexOrdering(order), expected - 1);
                CHECK_FALSE(tight.holds);
                CHECK(is_independent_set(g, tight.witness->vertices));
                CHECK(tight.witness->vertices.size() == expected);
            }
        }
    }

    SUBCASE("profile invariants")
    {
        for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
            auto g = oracle::random_graph(16, 0.3, seed);
            auto profile = verify_k_independence(g, degeneracy_ordering(g).ordering, 16).profile;
            CHECK(profile.delta_sigma <= profile.degeneracy_bound);
            if (profile.degeneracy_bound >= 1)
                CHECK(profile.delta_bar_sigma <= profile.degeneracy_bound - 1);
            auto plain = forward_profile(g, degeneracy_ordering(g).ordering);
            CHECK(plain.delta_sigma == profile.delta_sigma);
            CHECK(plain.delta_bar_sigma == profile.delta_bar_sigma);
        }
    }

    SUBCASE("parallel workers give the same answer")
    {
        auto g = oracle::random_graph(30, 0.5, 77);
        VertexOrdering sigma(oracle::random_order(30, 77));
        for (unsigned k : {1u, 2u, 3u, 4u}) {
            auto one = verify_k_independence(g, sigma, k, 1);
            auto four = verify_k_independence(g, sigma, k, 4);
            CHECK(one.holds == four.holds);
            CHECK(one.profile.k_verified == four.profile.k_verified);
            if (! one.holds) {
                CHECK(one.witness->index == four.witness->index);
                CHECK(one.witness->vertices == four.witness->vertices);
            }
        }
    }

    SUBCASE("mismatched ordering")
    {
        CHECK_THROWS_AS(verify_k_independence(cycle(5), VertexOrdering::identity(4), 2), OrderingError);
    }
}

TEST_CASE("heredity: restrictions of verified orderings still verify")
{
    for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
        auto g = oracle::random_graph(14, 0.45, seed);
        VertexOrdering sigma(oracle::random_order(14, seed));
        auto k = verify_k_independence(g, sigma, 14).profile.k_verified;
        auto report = check_heredity(g, sigma, k, 10, seed);
        CHECK(report.trials == 10);
        CHECK(report.violations == 0);
    }
    CHECK_THROWS_AS(check_heredity(cycle(5), VertexOrdering::identity(5), 1, 3, 0), IndependenceViolation);
}

TEST_CASE("independence_number_exact")
{
    CHECK(independence_number_exact(cycle(5)).alpha == 2);
    CHECK(independence_number_exact(build_graph(9, {})).alpha == 9);

    // Exhaustive subset search gives 4 for the Petersen graph.
    REQUIRE(oracle::independence_number(petersen()) == 4);
    auto p = independence_number_exact(petersen());
    CHECK(p.alpha == 4);
    CHECK(is_independent_set(petersen(), p.witness));

    CHECK_THROWS_AS(independence_number_exact(build_graph(41, {})), OracleCapExceeded);
    CHECK(independence_number_exact(build_graph(41, {}), 41).alpha == 41);
}

TEST_CASE("inductive_independence_number_exact")
{
    // Exhaustive search over all orderings.
    REQUIRE(oracle::inductive_independence_number(cycle(5)) == 2);
    REQUIRE(oracle::inductive_independence_number(star(4)) == 1);

    CHECK(inductive_independence_number_exact(cycle(5)).lambda == 2);
    CHECK(inductive_independence_number_exact(complete(4)).lambda == 1);

    auto claw = inductive_independence_number_exact(star(4));
    CHECK(claw.lambda == 1);
    // At most one leaf may follow the centre.
    CHECK(claw.ordering.rank(0) >= 2);

    CHECK(inductive_independence_number_exact(build_graph(0, {})).lambda == 0);
    CHECK(inductive_independence_number_exact(build_graph(3, {})).lambda == 0);

    for (std::uint64_t seed = 0 ; seed < 25 ; ++seed) {
        auto g = oracle::random_graph(7, 0.45, seed);
        auto result = inductive_independence_number_exact(g);
        CHECK(result.lambda == oracle::inductive_independence_number(g));
        std::vector<unsigned> order(result.ordering.order().begin(), result.ordering.order().end());
        CHECK(oracle::max_forward_alpha(g, order) == result.lambda);
    }

    CHECK_THROWS_AS(inductive_independence_number_exact(cycle(10)), OracleCapExceeded);
    CHECK_THROWS_AS(inductive_independence_number_exact(cycle(5), 25), InputError);
}

#include <doctest.h>

#include "oracles.hh"

#include <indclique/errors.hh>
#include <indclique/generators.hh>
#include <indclique/orderings.hh>
#include <indclique/structure.hh>

#include <algorithm>

using namespace indclique;

TEST_CASE("enumerate_maximal_cliques")
{
    SUBCASE("5-cycle gives its edges")
    {
        auto r = enumerate_maximal_cliques(cycle(5));
        CHECK_FALSE(r.partial);
        CHECK(r.cliques == std::vector<std::vector<unsigned>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    }

    SUBCASE("K_4 gives one clique")
    {
        auto r = enumerate_maximal_cliques(complete(4));
        CHECK(r.cliques == std::vector<std::vector<unsigned>>{{0, 1, 2, 3}});
    }

    SUBCASE("Petersen gives its 15 edges")
    {
        auto g = petersen();
        REQUIRE(oracle::maximal_cliques(g).size() == 15);
        auto r = enumerate_maximal_cliques(g);
        CHECK(r.cliques.size() == 15);
        for (auto & c : r.cliques)
            CHECK((c.size() == 2 && g.adjacent(c[0], c[1])));
    }

    SUBCASE("isolated vertices are maximal cliques")
    {
        auto r = enumerate_maximal_cliques(build_graph(3, {{0, 1}}));
        CHECK(r.cliques == std::vector<std::vector<unsigned>>{{0, 1}, {2}});
        CHECK(enumerate_maximal_cliques(build_graph(0, {})).cliques.empty());
    }

    SUBCASE("matches subset enumeration")
    {
        for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
            auto g = oracle::random_graph(4 + seed % 11, 0.2 + 0.02 * seed, seed);
            CHECK(enumerate_maximal_cliques(g).cliques == oracle::maximal_cliques(g));
        }
    }

    SUBCASE("output limit flags a partial result")
    {
        auto r = enumerate_maximal_cliques(cycle(9), 40, 4);
        CHECK(r.partial);
        CHECK(r.cliques.size() == 4);
    }

    SUBCASE("size cap")
    {
        CHECK_THROWS_AS(enumerate_maximal_cliques(cycle(41)), OracleCapExceeded);
    }
}

TEST_CASE("container_index")
{
    CHECK(container_index(complete(4), VertexOrdering::identity(4), std::vector<unsigned>{0, 1, 2, 3}) == 1);
    CHECK(container_index(cycle(5), VertexOrdering::identity(5), std::vector<unsigned>{3, 4}) == 4);

    CHECK_THROWS_AS(container_index(cycle(5), VertexOrdering::identity(5), std::vector<unsigned>{0, 2}), InputError);
    CHECK_THROWS_AS(container_index(complete(4), VertexOrdering::identity(4), std::vector<unsigned>{0, 1}), InputError);
    CHECK_THROWS_AS(container_index(complete(4), VertexOrdering::identity(4), std::vector<unsigned>{}), InputError);
}

TEST_CASE("every maximal clique has exactly one container, at its earliest vertex")
{
    for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
        auto n = 3 + static_cast<unsigned>(seed % 10);
        auto g = oracle::random_graph(n, 0.15 + 0.007 * seed, seed);
        VertexOrdering sigma(oracle::random_order(n, seed));

        // Brute scan, independent of check_unique_containers.
        for (auto & clique : oracle::maximal_cliques(g)) {
            std::vector<unsigned> containers;
            for (unsigned i = 1 ; i <= n ; ++i) {
                auto view = forward_neighborhood(g, sigma, i, true);
                if (std::all_of(clique.begin(), clique.end(), [&] (unsigned v) { return view.to_local(v).has_value(); }))
                    containers.push_back(i);
            }
            REQUIRE(containers.size() == 1);
            CHECK(containers.front() == container_index(g, sigma, clique));
        }

        auto report = check_unique_containers(g, sigma);
        CHECK(report.violations == 0);
        CHECK(report.cliques_checked == oracle::maximal_cliques(g).size());
    }
}

TEST_CASE("is_hamiltonian")
{
    CHECK(is_hamiltonian(cycle(5)) == true);
    CHECK(is_hamiltonian(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == false);

    REQUIRE_FALSE(oracle::hamiltonian(petersen()));
    CHECK(is_hamiltonian(petersen()) == false);

    CHECK(is_hamiltonian(complete(2)) == false);
    CHECK(is_hamiltonian(complete(3)) == true);
    CHECK_FALSE(is_hamiltonian(cycle(19)).has_value());
    CHECK(is_hamiltonian(cycle(19), 19) == true);
    CHECK_THROWS_AS(is_hamiltonian(cycle(5), 25), InputError);

    for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
        auto g = oracle::random_graph(3 + seed % 7, 0.3 + 0.01 * seed, seed);
        CHECK(is_hamiltonian(g) == oracle::hamiltonian(g));
    }
}

TEST_CASE("two_clique_cover")
{
    SUBCASE("4-cycle splits into opposite pairs")
    {
        auto cover = two_clique_cover(cycle(4));
        REQUIRE(cover.has_value());
        CHECK(cover->first == std::vector<unsigned>{0, 1});
        CHECK(cover->second == std::vector<unsigned>{2, 3});
    }

    SUBCASE("5-cycle has none")
    {
        CHECK_FALSE(two_clique_cover(cycle(5)).has_value());
    }

    SUBCASE("complete graph")
    {
        auto cover = two_clique_cover(complete(6));
        REQUIRE(cover.has_value());
        CHECK(cover->first.size() + cover->second.size() == 6);
    }

    SUBCASE("sound and complete against exhaustive partitions")
    {
        for (std::uint64_t seed = 0 ; seed < 60 ; ++seed) {
            auto g = oracle::random_graph(2 + seed % 10, 0.5 + 0.008 * seed, seed);
            auto cover = two_clique_cover(g);
            CHECK(cover.has_value() == oracle::two_clique_coverable(g));
            if (cover) {
                CHECK(is_clique(g, cover->first));
                CHECK(is_clique(g, cover->second));
                std::vector<unsigned> all = cover->first;
                all.insert(all.end(), cover->second.begin(), cover->second.end());
                std::sort(all.begin(), all.end());
                CHECK(all.size() == g.size());
                CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            }
        }
    }
}

TEST_CASE("check_2independent_structure")
{
    SUBCASE("5-cycle")
    {
        auto r = check_2independent_structure(cycle(5), VertexOrdering::identity(5));
        CHECK(r.overall);
        CHECK(r.verdicts.size() == 5);
        CHECK(r.inconclusive_count == 0);
        // G_1^+ is the path 1-0-4: not Hamiltonian, but {0,1} and {4} cover it.
        CHECK(r.verdicts[0].hamiltonian == Hamiltonicity::No);
        CHECK(r.verdicts[0].cover.has_value());
    }

    SUBCASE("complete graph")
    {
        auto r = check_2independent_structure(complete(7), VertexOrdering(oracle::random_order(7, 3)));
        CHECK(r.overall);
        CHECK(r.verdicts[0].hamiltonian == Hamiltonicity::Yes);
    }

    SUBCASE("line graphs are claw-free so every ordering works")
    {
        for (std::uint64_t seed = 0 ; seed < 15 ; ++seed) {
            auto l = line_graph(gnp(8, 0.4, seed));
            if (l.size() == 0)
                continue;
            VertexOrdering sigma(oracle::random_order(l.size(), seed));
            REQUIRE(verify_k_independence(l, sigma, 2).holds);
            auto r = check_2independent_structure(l, sigma);
            CHECK(r.overall);
            CHECK(r.inconclusive_count == 0);
            for (auto & v : r.verdicts)
                CHECK(v.passes);
        }
    }

    SUBCASE("skipped Hamiltonicity without a cover is inconclusive, not a failure")
    {
        // Hub first over a 5-cycle rim: G_1^+ is the 6-vertex wheel, whose
        // complement holds a 5-cycle, so no cover exists either.
        std::vector<Edge> edges;
        for (unsigned v = 1 ; v <= 5 ; ++v) {
            edges.emplace_back(0, v);
            edges.emplace_back(v, v % 5 + 1);
        }
        auto wheel = build_graph(6, edges);
        auto r = check_2independent_structure(wheel, VertexOrdering::identity(6), 3);
        CHECK(r.verdicts[0].hamiltonian == Hamiltonicity::Skipped);
        CHECK(r.verdicts[0].inconclusive);
        CHECK(r.inconclusive_count >= 1);
        CHECK(r.overall);
    }

    SUBCASE("orderings that are not 2-independent are rejected")
    {
        CHECK_THROWS_AS(check_2independent_structure(star(5), VertexOrdering::identity(5)), IndependenceViolation);
    }
}

TEST_CASE("Hamiltonicity of graphs with connectivity at least alpha")
{
    // Connectivity by removing every vertex subset of size < kappa.
    auto connected_after_removal = [] (const Graph & g, std::uint32_t removed) {
        std::uint32_t alive = ((std::uint32_t{1} << g.size()) - 1) & ~removed;
        if (! alive)
            return true;
        auto nbrs = oracle::masks(g);
        std::uint32_t seen = alive & (0u - alive), frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (auto f = frontier ; f ; f &= f - 1)
                next |= nbrs[std::countr_zero(f)];
            next &= alive & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == alive;
    };
    auto connectivity = [&] (const Graph & g) {
        unsigned n = g.size();
        for (unsigned kappa = 0 ; kappa + 1 < n ; ++kappa)
            for (std::uint32_t s = 0 ; s < (std::uint32_t{1} << n) ; ++s)
                if (static_cast<unsigned>(std::popcount(s)) == kappa && ! connected_after_removal(g, s))
                    return kappa;
        return n - 1;
    };

    unsigned tested = 0;
    for (std::uint64_t seed = 0 ; seed < 200 && tested < 40 ; ++seed) {
        auto g = oracle::random_graph(5 + seed % 6, 0.55 + 0.002 * seed, seed);
        auto alpha = oracle::independence_number(g);
        if (connectivity(g) < alpha)
            continue;
        ++tested;
        CHECK(is_hamiltonian(g) == true);
    }
    CHECK(tested >= 20);
}

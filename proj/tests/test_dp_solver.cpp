#include <doctest.h>

#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/rng.hpp>

#include "oracle.hpp"

using namespace dpchroma;

namespace
{
    auto random_cover_on(const Graph & g, int k, std::uint64_t seed) -> MatchingCover
    {
        auto rng = substream(seed, {17});
        std::vector<Permutation> perms;
        for (std::size_t e = 0 ; e < g.edge_count() ; ++e)
            perms.push_back(random_permutation(rng, k));
        return MatchingCover(g, k, perms);
    }

    auto petersen_like() -> Graph
    {
        return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
    }
}

TEST_CASE("find_coloring on the small examples")
{
    auto c4 = cycle(4);
    MatchingCover plain(c4, 2, std::vector<Permutation>(4, Permutation::identity(2)));
    auto col = find_coloring(plain);
    REQUIRE(col);
    CHECK(is_valid_coloring(plain, *col));

    std::vector<Permutation> twisted(4, Permutation::identity(2));
    twisted[3] = Permutation({1, 0});
    CHECK(! find_coloring(MatchingCover(complete_bipartite(2, 2), 2, twisted)));
}

TEST_CASE("find_coloring agrees with brute force")
{
    std::vector<Graph> graphs{cycle(3), cycle(5), cycle(6), complete_bipartite(2, 2), complete_bipartite(2, 4),
        complete_bipartite(3, 3), petersen_like(), Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}})};
    std::uint64_t seed = 1;
    int uncolourable = 0;
    for (auto & g : graphs)
        for (int k = 1 ; k <= 3 ; ++k)
            for (int trial = 0 ; trial < 12 ; ++trial) {
                auto c = random_cover_on(g, k, seed++);
                auto found = find_coloring(c);
                CHECK(found.has_value() == oracle::colourable_by_brute_force(c));
                if (found)
                    CHECK(is_valid_coloring(c, *found));
                else
                    ++uncolourable;
            }
    CHECK(uncolourable > 0);
}

TEST_CASE("covers at fold col(G) are always colourable")
{
    std::uint64_t seed = 500;
    for (int k = 1 ; k <= 3 ; ++k)
        for (int t = 1 ; t <= 5 ; ++t) {
            auto g = complete_bipartite(k, t);
            int fold = colouring_number(g);
            CHECK(fold <= k + 1);
            for (int trial = 0 ; trial < 5 ; ++trial)
                CHECK(find_coloring(random_cover_on(g, fold, seed++)).has_value());
        }
}

TEST_CASE("chi_dp_exact small values")
{
    for (int n = 3 ; n <= 8 ; ++n)
        CHECK(chi_dp_exact(cycle(n), 4) == 3);
    CHECK(chi_dp_exact(complete_bipartite(2, 2), 4) == 3);
    CHECK(chi_dp_exact(complete_bipartite(2, 1), 4) == 2);
    CHECK(chi_dp_exact(complete_bipartite(1, 1), 4) == 2);
    CHECK(chi_dp_exact(Graph(1, {}), 4) == 1);
    CHECK(chi_dp_exact(complete_bipartite(3, 3), 2) == 3);
}

TEST_CASE("chi_dp_exact is at least the chromatic number")
{
    std::vector<Graph> graphs{cycle(3), cycle(5), cycle(6), complete_bipartite(2, 3), petersen_like(),
        Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    for (auto & g : graphs)
        CHECK(chi_dp_exact(g, 5) >= oracle::chromatic_number(g));
}

TEST_CASE("chi_dp_exact grows with t on K_{2,t}")
{
    int previous = 0;
    for (int t = 1 ; t <= 4 ; ++t) {
        int value = chi_dp_exact(complete_bipartite(2, t), 4);
        CHECK(value >= previous);
        previous = value;
    }
    CHECK(previous == 3);
}

TEST_CASE("hardest_cover_search")
{
    auto c4 = cycle(4);
    auto hard = hardest_cover_search(c4, 2);
    REQUIRE(hard);
    CHECK(! oracle::colourable_by_brute_force(*hard));
    CHECK(normalize(*hard) == *hard);
    CHECK(! hardest_cover_search(c4, 3));
    CHECK(! hardest_cover_search(complete_bipartite(1, 1), 2));
}

TEST_CASE("chi_dp_exact budget and sentinel")
{
    CHECK(chi_dp_exact(cycle(5), 2) == 3);
    CHECK_THROWS_AS(chi_dp_exact(complete_bipartite(3, 4), 3, EnumerationOptions{10, 1}), ResourceLimit);
    try {
        chi_dp_exact(complete_bipartite(3, 4), 3, EnumerationOptions{10, 1});
    }
    catch (const ResourceLimit & e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
        CHECK(e.lo >= 1);
        CHECK(e.hi <= 4);
        CHECK(e.lo <= e.hi);
    }
}

TEST_CASE("enumeration result does not depend on thread count")
{
    auto g = complete_bipartite(2, 3);
    auto one = hardest_cover_search(g, 2, EnumerationOptions{1'000'000, 1});
    auto four = hardest_cover_search(g, 2, EnumerationOptions{1'000'000, 4});
    REQUIRE(one);
    REQUIRE(four);
    CHECK(*one == *four);
    CHECK(chi_dp_exact(cycle(7), 4, EnumerationOptions{1'000'000, 3}) == 3);
}

#include <doctest.h>

#include <dpchroma/bounds.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>

#include "oracle.hpp"

#include <cmath>

using namespace dpchroma;

TEST_CASE("random_cover is reproducible")
{
    CHECK(random_cover(3, 9, 7) == random_cover(3, 9, 7));
    CHECK(random_cover(3, 9, 7) != random_cover(3, 9, 8));

    auto unique = random_cover(1, 1, 123);
    CHECK(unique.fold() == 1);
    CHECK(unique.permutation(0).is_identity());

    auto c = random_cover(2, 4, 1);
    for (auto & col : columns_of(c))
        CHECK(blocked_set(col).count() == 2);

    // Each edge's permutation comes from its own substream.
    auto big = random_cover(3, 5, 42);
    for (auto & e : big.base_graph().edges())
        CHECK(big.matching(e.u, e.v) == edge_permutation(42, e.u, e.v, 3));
}

TEST_CASE("surviving assignments")
{
    auto single = cover_from_columns(2, {make_column({Permutation::identity(2), Permutation::identity(2)})});
    CHECK(surviving_assignments(single).ones() == std::vector<std::size_t>{0, 3});

    for (int k = 1 ; k <= 3 ; ++k)
        for (int t = 1 ; t <= 7 ; ++t)
            for (std::uint64_t seed = 0 ; seed < 8 ; ++seed) {
                auto c = random_cover(k, t, seed);
                auto survivors = surviving_assignments(c);
                CHECK(find_coloring(c).has_value() == survivors.any());
                if (k <= 2 && t <= 4)
                    CHECK(oracle::colourable_by_brute_force(c) == survivors.any());
            }
}

TEST_CASE("expected survivors")
{
    CHECK(expected_survivors(3, 0) == 27.0);
    CHECK(expected_survivors(5, 0) == 3125.0);
    CHECK(expected_survivors(1, 1) == 0.0);
    CHECK(expected_survivors(1, 5) == 0.0);
    CHECK(expected_survivors(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(expected_survivors(3, 9) == doctest::Approx(2.8123122548637).epsilon(1e-12));
    CHECK(expected_survivors(4, 10) == doctest::Approx(95.657749921020013).epsilon(1e-12));
    CHECK(expected_survivors(5, 10) == doctest::Approx(2112.4895451096524).epsilon(1e-12));
    CHECK(std::isfinite(expected_survivors(20, 100)));
}

TEST_CASE("derandomized cover survivor guarantee")
{
    CHECK(surviving_assignments(derandomized_cover(2, 2)).none());
    CHECK(surviving_assignments(derandomized_cover(1, 1)).none());
    CHECK(surviving_assignments(derandomized_cover(3, 9)).count() <= 2);

    for (int k = 1 ; k <= 6 ; ++k) {
        auto run = derandomized_columns(k, k <= 4 ? std::nullopt : std::optional<int>(8));
        std::uint64_t universe = oracle::power(k, k), f = factorial(k);
        REQUIRE(run.survivors.size() == run.columns.size() + 1);
        CHECK(run.survivors[0] == universe);
        for (std::size_t j = 0 ; j + 1 < run.survivors.size() ; ++j)
            CHECK(run.survivors[j + 1] * universe <= run.survivors[j] * (universe - f));
        for (std::size_t t = 1 ; t < run.survivors.size() ; ++t)
            CHECK(static_cast<double>(run.survivors[t]) <= std::floor(expected_survivors(k, t)));
        for (auto & col : run.columns)
            CHECK(col.canonical);
    }
}

TEST_CASE("derandomized cover survivors match a direct recount")
{
    for (int k = 2 ; k <= 5 ; ++k)
        for (int t : {1, 3, 6}) {
            auto c = derandomized_cover(k, t);
            auto run = derandomized_columns(k, t);
            CHECK(surviving_assignments(c).count() == run.survivors.back());
        }
}

TEST_CASE("blocking_column_for")
{
    auto col = blocking_column_for(Assignment::from_colors(2, {0, 0}));
    CHECK(col.perms[0].is_identity());
    CHECK(col.perms[1] == Permutation({1, 0}));
    CHECK(is_bad_for(Assignment::from_colors(2, {0, 0}), col));
    CHECK(is_bad_for(Assignment::from_colors(3, {2, 0, 1}), blocking_column_for(Assignment::from_colors(3, {2, 0, 1}))));

    for (int k = 1 ; k <= 5 ; ++k) {
        std::vector<int> diagonal(k);
        for (int i = 0 ; i < k ; ++i)
            diagonal[i] = i;
        auto d = blocking_column_for(Assignment::from_colors(k, diagonal));
        for (int i = 0 ; i < k ; ++i)
            CHECK(d.perms[i](i) == i);
    }
    for (int k = 1 ; k <= 4 ; ++k)
        for (std::uint64_t x = 0 ; x < assignment_count(k) ; ++x) {
            auto f = Assignment::from_index(k, x);
            CHECK(oracle::blocked_by_definition(blocking_column_for(f), f.colors()));
        }
}

TEST_CASE("extension pipeline is sound")
{
    for (int k = 1 ; k <= 4 ; ++k)
        for (int t = 1 ; t <= (k <= 3 ? 12 : 20) ; ++t) {
            auto base = derandomized_cover(k, t);
            auto survivors = surviving_assignments(base).count();
            auto ext = extend_to_uncolorable(base);
            CHECK(ext.added == static_cast<int>(survivors));
            CHECK(ext.cover.base_graph() == complete_bipartite(k, t + ext.added));
            CHECK(surviving_assignments(ext.cover).none());
            CHECK(! find_coloring(ext.cover));
            CHECK(BigInt(t + ext.added) <= theorem3_m(k, t));
        }

    auto nothing_left = derandomized_cover(2, 2);
    auto same = extend_to_uncolorable(nothing_left);
    CHECK(same.added == 0);
    CHECK(same.cover == nothing_left);

    auto e3 = extend_to_uncolorable(derandomized_cover(3, 9));
    CHECK(9 + e3.added <= 11);

    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto r = extend_to_uncolorable(random_cover(2, 1, seed));
        CHECK(r.added <= 2);
        CHECK(! find_coloring(r.cover));
    }
}

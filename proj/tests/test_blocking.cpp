#include <doctest.h>

#include <dpchroma/blocking.hpp>
#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/rng.hpp>

#include "oracle.hpp"

#include <set>

using namespace dpchroma;

namespace
{
    auto swap2() -> Permutation { return Permutation({1, 0}); }

    auto random_column(int k, std::uint64_t seed) -> ColumnClass
    {
        auto rng = substream(seed, {31});
        std::vector<Permutation> perms;
        for (int i = 0 ; i < k ; ++i)
            perms.push_back(random_permutation(rng, k));
        return make_column(perms);
    }
}

TEST_CASE("is_bad_for examples")
{
    auto idid = make_column({Permutation::identity(2), Permutation::identity(2)});
    CHECK(is_bad_for(Assignment::from_colors(2, {0, 1}), idid));
    CHECK(! is_bad_for(Assignment::from_colors(2, {0, 0}), idid));
    CHECK(is_bad_for(Assignment::from_colors(1, {0}), make_column({Permutation::identity(1)})));
}

TEST_CASE("blocked_set examples")
{
    auto idid = make_column({Permutation::identity(2), Permutation::identity(2)});
    CHECK(blocked_set(idid).ones() == std::vector<std::size_t>{1, 2});
    auto idswap = make_column({Permutation::identity(2), swap2()});
    CHECK(blocked_set(idswap).ones() == std::vector<std::size_t>{0, 3});

    auto id3 = make_column(std::vector<Permutation>(3, Permutation::identity(3)));
    auto b = blocked_set(id3);
    CHECK(b.count() == 6);
    for (auto x : b.ones()) {
        auto f = decode_assignment(3, x);
        std::sort(f.begin(), f.end());
        CHECK(f == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("blocked_set agrees with the definition")
{
    for (int k = 1 ; k <= 4 ; ++k)
        for (std::uint64_t seed = 0 ; seed < 15 ; ++seed) {
            auto col = random_column(k, seed);
            auto b = blocked_set(col);
            std::vector<std::uint64_t> ones;
            for (auto x : b.ones())
                ones.push_back(x);
            CHECK(ones == oracle::blocked_indices(col));
            CHECK(b.count() == factorial(k));
            for (std::uint64_t x = 0 ; x < assignment_count(k) ; ++x) {
                auto f = Assignment::from_index(k, x);
                CHECK(is_bad_for(f, col) == b.test(x));
                CHECK(blocking_permutation(f, col).has_value() == b.test(x));
            }
        }
}

TEST_CASE("canonicalization keeps the blocked set")
{
    for (int k = 1 ; k <= 4 ; ++k)
        for (std::uint64_t seed = 100 ; seed < 110 ; ++seed) {
            auto col = random_column(k, seed);
            auto canon = canonicalize(col);
            CHECK(canon.canonical);
            CHECK(canon.perms[0].is_identity());
            CHECK(blocked_set(canon) == blocked_set(col));
            CHECK(canonicalize(canon) == canon);
        }
}

TEST_CASE("column class enumeration")
{
    CHECK(enumerate_column_classes(1).size() == 1);
    CHECK(enumerate_column_classes(2).size() == 2);
    auto k3 = enumerate_column_classes(3);
    CHECK(k3.size() == 36);
    CHECK(column_class_count(4) == 13824);
    for (std::size_t i = 0 ; i < k3.size() ; ++i) {
        CHECK(k3[i].canonical);
        CHECK(column_index(k3[i]) == i);
        CHECK(column_from_index(3, i) == k3[i]);
        if (i > 0)
            CHECK(std::lexicographical_compare(k3[i - 1].perms.begin(), k3[i - 1].perms.end(),
                        k3[i].perms.begin(), k3[i].perms.end()));
    }
    try {
        enumerate_column_classes(5);
        FAIL("expected resource-limit");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
}

TEST_CASE("every blocked set has exactly k! elements")
{
    for (int k = 1 ; k <= 4 ; ++k) {
        std::uint64_t visited = 0;
        for_each_column_class(k, [&] (const ColumnClass & col) {
            ++visited;
            CHECK(blocked_set(col).count() == factorial(k));
        });
        CHECK(visited == column_class_count(k));
    }
}

TEST_CASE("lemma1 reports")
{
    auto r2 = verify_lemma1_exhaustive(2);
    CHECK(r2.holds());
    CHECK(r2.min_population == 2);
    CHECK(r2.max_population == 2);
    CHECK(r2.columns_checked == 2);

    auto r3 = verify_lemma1_exhaustive(3);
    CHECK(r3.holds());
    CHECK(r3.min_population == 6);
    CHECK(r3.columns_checked == 36);

    auto r5 = verify_lemma1_sampled(5, 1000, 1);
    CHECK(r5.holds());
    CHECK(r5.min_population == 120);
    CHECK(r5.max_population == 120);
    CHECK(r5.columns_checked == 1000);
}

TEST_CASE("blocked assignments are exactly those a single right vertex cannot extend")
{
    for (int k = 1 ; k <= 3 ; ++k)
        for (std::uint64_t seed = 0 ; seed < 6 ; ++seed) {
            auto col = random_column(k, seed + 40);
            auto cover = cover_from_columns(k, {col});
            for (std::uint64_t x = 0 ; x < assignment_count(k) ; ++x) {
                auto f = decode_assignment(k, x);
                bool extendable = false;
                for (int c = 0 ; c < k ; ++c) {
                    auto colouring = f;
                    colouring.push_back(c);
                    extendable = extendable || is_valid_coloring(cover, colouring);
                }
                CHECK(extendable == ! is_bad_for(Assignment::from_index(k, x), col));
            }
        }
}

TEST_CASE("columns_of inverts cover_from_columns")
{
    std::vector<ColumnClass> cols;
    for (std::uint64_t s = 0 ; s < 5 ; ++s)
        cols.push_back(random_column(3, s));
    auto cover = cover_from_columns(3, cols);
    CHECK(cover.base_graph() == complete_bipartite(3, 5));
    CHECK(columns_of(cover) == cols);
}

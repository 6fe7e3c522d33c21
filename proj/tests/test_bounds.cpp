#include <doctest.h>

#include <dpchroma/bounds.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/mu_search.hpp>

#include <cmath>

using namespace dpchroma;

TEST_CASE("bounds report small values")
{
    auto r1 = bounds_report(1);
    CHECK(r1.counting_lower == 1);
    CHECK(r1.bad_prob == 1.0);
    CHECK(r1.chosen_t == 0);
    CHECK(r1.analytic_upper == doctest::Approx(2.0));

    auto r3 = bounds_report(3);
    CHECK(r3.list_threshold == 27);
    CHECK(r3.counting_lower == 5);
    CHECK(r3.bad_prob == doctest::Approx(2.0 / 9.0).epsilon(1e-15));

    CHECK(bounds_report(4).counting_lower == 11);

    CHECK_THROWS_AS(bounds_report(0), Error);
    CHECK_THROWS_AS(bounds_report(21), Error);
}

TEST_CASE("bounds table against precomputed values")
{
    struct Row
    {
        int k;
        int lower;
        std::uint64_t t;
        int m;
        double upper;
    };
    std::vector<Row> rows{
        {1, 1, 0, 1, 2.0},
        {2, 2, 2, 3, 4.3862943611198906},
        {3, 5, 9, 11, 13.562917611526248},
        {4, 11, 34, 43, 45.56590752371142},
        {5, 27, 125, 148, 151.71593080161578},
        {6, 65, 427, 487, 492.13547853825454},
        {7, 164, 1394, 1552, 1557.424595788868},
        {8, 417, 4413, 4823, 4829.6936878369062},
    };
    for (auto & row : rows) {
        CAPTURE(row.k);
        auto r = bounds_report(row.k);
        CHECK(r.counting_lower == row.lower);
        CHECK(r.chosen_t == row.t);
        CHECK(r.theorem3_m_at_chosen_t == row.m);
        CHECK(r.analytic_upper == doctest::Approx(row.upper).epsilon(1e-12));
        CHECK(bound_chain_holds(r));
        CHECK(static_cast<double>(r.theorem3_m_at_chosen_t) <= r.closing_middle);
        CHECK(r.closing_middle <= r.analytic_upper);
    }
}

TEST_CASE("bound chain holds through k = 20")
{
    for (int k = 1 ; k <= 20 ; ++k) {
        CAPTURE(k);
        auto r = bounds_report(k);
        CHECK(bound_chain_holds(r));
        CHECK(static_cast<double>(r.counting_lower) <= r.analytic_upper);
        CHECK(r.bad_prob > 0);
        CHECK(r.bad_prob <= 1);
    }
}

TEST_CASE("theorem3_m")
{
    CHECK(theorem3_m(3, 0) == 27);
    CHECK(theorem3_m(3, 9) == 11);
    CHECK(theorem3_m(2, 2) == 3);
    CHECK(theorem3_m(1, 4) == 4);
    CHECK(theorem3_m(4, 10) == 10 + 95);
    // The exact and floating paths agree where both apply.
    for (std::uint64_t t = 1 ; t < 60 ; ++t)
        CHECK(theorem3_m(4, t) == BigInt(t) + BigInt(static_cast<std::uint64_t>(std::floor(expected_survivors(4, t)))));
}

TEST_CASE("log factorial")
{
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)));
    CHECK(log_factorial(20) == doctest::Approx(std::lgamma(21.0)));
}

TEST_CASE("mu lies between the bounds")
{
    for (int k = 1 ; k <= 6 ; ++k) {
        auto r = bounds_report(k);
        auto g = mu_greedy(k);
        CHECK(r.counting_lower <= g.hi);
        CHECK(g.hi <= r.analytic_upper);
        if (k <= 3) {
            auto e = mu_exact(k);
            CHECK(r.counting_lower <= e.hi);
            CHECK(e.hi <= g.hi);
        }
    }
}

TEST_CASE("exact bad fraction")
{
    for (int k = 1 ; k <= 3 ; ++k) {
        auto f = exact_bad_fraction(k);
        // blocking / total == k! / k^k
        CHECK(f.blocking * assignment_count(k) == f.total * factorial(k));
    }
    auto two = exact_bad_fraction(2);
    CHECK(two.blocking == 2);
    CHECK(two.total == 4);
}

TEST_CASE("monte carlo estimates")
{
    CHECK(monte_carlo_survivors(1, 1, 50, 3).mean == 0.0);
    CHECK(monte_carlo_bad_prob(1, 50, 3).mean == 1.0);
    CHECK_THROWS_AS(monte_carlo_survivors(2, 2, 0, 1), Error);

    auto s = monte_carlo_survivors(2, 2, 20000, 1);
    CHECK(std::abs(s.mean - 1.0) <= 3 * s.standard_error);

    auto b = monte_carlo_bad_prob(4, 20000, 1);
    CHECK(std::abs(b.mean - 0.09375) <= 3 * b.standard_error);
}

TEST_CASE("monte carlo is deterministic and thread independent")
{
    auto a = monte_carlo_survivors(3, 4, 2000, 9, 1);
    auto b = monte_carlo_survivors(3, 4, 2000, 9, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);

    // Sample s is the survivor count of random_cover at the sample's seed.
    auto one = monte_carlo_survivors(3, 4, 1, 9);
    CHECK(one.mean == static_cast<double>(surviving_assignments(random_cover(3, 4, sample_seed(9, 0))).count()));
}

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dpchroma
{
    using BigInt = boost::multiprecision::cpp_int;

    struct BoundsReport
    {
        int k = 0;
        /// k^k: the list-colouring threshold for K_{k,t}.
        BigInt list_threshold;
        /// ceil(k^k / k!)
        BigInt counting_lower;
        /// ceil(k^k log(k!) / k!)
        std::uint64_t chosen_t = 0;
        /// theorem3_m(k, chosen_t)
        BigInt theorem3_m_at_chosen_t;
        /// ceil(k^k log(k!) / k!) + k^k / k!
        double closing_middle = 0;
        /// 1 + (k^k / k!)(log(k!) + 1)
        double analytic_upper = 0;
        /// k! / k^k
        double bad_prob = 0;
    };

    /// ln(k!) as a sum of logs.
    auto log_factorial(int k) -> double;

    /// t + floor(k^k (1 - k!/k^k)^t); exact big-integer arithmetic for
    /// k <= 8, double precision above.
    auto theorem3_m(int k, std::uint64_t t) -> BigInt;

    /// 1 <= k <= 20. Throws invalid-parameter otherwise, and
    /// invalid-parameter if the bound chain fails to hold.
    auto bounds_report(int k) -> BoundsReport;

    /// Whether counting_lower <= theorem3_m(chosen_t) bound chain holds:
    /// theorem3_m(chosen_t) <= closing_middle <= analytic_upper and
    /// counting_lower <= analytic_upper.
    auto bound_chain_holds(const BoundsReport & r) -> bool;

    struct Estimate
    {
        double mean = 0;
        double standard_error = 0;
        std::uint64_t samples = 0;
    };

    /// Mean number of surviving assignments over random covers of K_{k,t};
    /// sample s uses random_cover(k, t, sample_seed(seed, s)). k <= 6.
    auto monte_carlo_survivors(int k, int t, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) -> Estimate;

    /// Fraction of uniform random columns blocking the all-zero assignment.
    /// k <= 8.
    auto monte_carlo_bad_prob(int k, std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) -> Estimate;

    auto sample_seed(std::uint64_t seed, std::uint64_t sample) -> std::uint64_t;

    struct ExactFraction
    {
        std::uint64_t blocking = 0;
        std::uint64_t total = 0;
    };

    /// Counts, over every column (all (k!)^k of them, not just canonical
    /// ones), those blocking the all-zero assignment. k <= 4.
    auto exact_bad_fraction(int k) -> ExactFraction;

    auto to_string(const BigInt & x) -> std::string;
}

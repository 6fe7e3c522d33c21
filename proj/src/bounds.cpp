#include <dpchroma/bounds.hpp>
#include <dpchroma/blocking.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/rng.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

namespace dpchroma
{
    namespace
    {
        auto big_power(int base, std::uint64_t exponent) -> BigInt
        {
            return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
        }

        auto big_factorial(int k) -> BigInt
        {
            BigInt result = 1;
            for (int i = 2 ; i <= k ; ++i)
                result *= i;
            return result;
        }

        void check_k(int k)
        {
            if (k < 1 || k > 20)
                fail(ErrorKind::invalid_parameter, "bounds support 1 <= k <= 20, got " + std::to_string(k));
        }
    }

    auto log_factorial(int k) -> double
    {
        double result = 0;
        for (int i = 2 ; i <= k ; ++i)
            result += std::log(static_cast<double>(i));
        return result;
    }

    auto theorem3_m(int k, std::uint64_t t) -> BigInt
    {
        check_k(k);
        auto universe = big_power(k, k);
        if (t == 0)
            return universe;
        auto f = big_factorial(k);
        if (k <= 8 && t <= 20000) {
            // k^k ((k^k - k!)/k^k)^t = (k^k - k!)^t / (k^k)^(t-1)
            BigInt numerator = boost::multiprecision::pow(BigInt(universe - f), static_cast<unsigned>(t));
            BigInt denominator = boost::multiprecision::pow(universe, static_cast<unsigned>(t - 1));
            return BigInt(t) + numerator / denominator;
        }
        auto e = expected_survivors(k, t);
        return BigInt(t) + BigInt(static_cast<std::uint64_t>(std::floor(e)));
    }

    auto bounds_report(int k) -> BoundsReport
    {
        check_k(k);
        BoundsReport r;
        r.k = k;
        r.list_threshold = big_power(k, k);
        auto f = big_factorial(k);
        r.counting_lower = (r.list_threshold + f - 1) / f;

        double log_universe = k * std::log(static_cast<double>(k));
        double ratio = std::exp(log_universe - log_factorial(k));
        r.bad_prob = 1.0 / ratio;
        double chosen = ratio * log_factorial(k);
        r.chosen_t = static_cast<std::uint64_t>(std::ceil(chosen));
        r.theorem3_m_at_chosen_t = theorem3_m(k, r.chosen_t);
        r.closing_middle = static_cast<double>(r.chosen_t) + ratio;
        r.analytic_upper = 1.0 + ratio * (log_factorial(k) + 1.0);

        if (! bound_chain_holds(r))
            fail(ErrorKind::invalid_parameter, "bound chain fails for k = " + std::to_string(k));
        return r;
    }

    auto bound_chain_holds(const BoundsReport & r) -> bool
    {
        auto m = static_cast<double>(r.theorem3_m_at_chosen_t);
        auto lower = static_cast<double>(r.counting_lower);
        return m <= r.closing_middle && r.closing_middle <= r.analytic_upper && lower <= r.analytic_upper;
    }

    auto sample_seed(std::uint64_t seed, std::uint64_t sample) -> std::uint64_t
    {
        return substream(seed, {sample, 0x5a4d})();
    }

    namespace
    {
        /// Runs per_sample over [0, samples) in contiguous blocks, summing
        /// values and squares in sample order so the result does not depend
        /// on the thread count.
        template <typename F>
        auto estimate(std::uint64_t samples, unsigned threads, F per_sample) -> Estimate
        {
            if (samples == 0)
                fail(ErrorKind::invalid_parameter, "need at least one sample");
            threads = std::max(1u, threads);
            std::vector<double> values(samples);
            auto work = [&] (unsigned id) {
                auto begin = samples * id / threads, end = samples * (id + 1) / threads;
                for (auto s = begin ; s < end ; ++s)
                    values[s] = per_sample(s);
            };
            if (threads == 1)
                work(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned id = 0 ; id < threads ; ++id)
                    pool.emplace_back(work, id);
            }

            double sum = 0;
            for (auto v : values)
                sum += v;
            double mean = sum / static_cast<double>(samples);
            double squares = 0;
            for (auto v : values)
                squares += (v - mean) * (v - mean);
            Estimate result;
            result.mean = mean;
            result.samples = samples;
            if (samples > 1)
                result.standard_error = std::sqrt(squares / static_cast<double>(samples - 1) / static_cast<double>(samples));
            return result;
        }
    }

    auto monte_carlo_survivors(int k, int t, std::uint64_t samples, std::uint64_t seed, unsigned threads) -> Estimate
    {
        if (k < 1 || k > 6)
            fail(ErrorKind::invalid_parameter, "Monte Carlo survivors supports 1 <= k <= 6");
        if (t < 1)
            fail(ErrorKind::invalid_parameter, "t must be positive");
        auto universe = assignment_count(k);
        auto words = (universe + 63) / 64;
        std::vector<std::uint64_t> weight(k, 1);
        for (int i = 1 ; i < k ; ++i)
            weight[i] = weight[i - 1] * k;

        return estimate(samples, threads, [&] (std::uint64_t s) {
            // Same permutations random_cover(k, t, sample_seed(seed, s)) draws.
            auto cover_seed = sample_seed(seed, s);
            std::vector<std::uint64_t> blocked(words, 0);
            std::vector<std::vector<int>> inverses(k);
            std::vector<int> pi(k);
            for (int j = 0 ; j < t ; ++j) {
                for (int i = 0 ; i < k ; ++i)
                    inverses[i] = invert(edge_permutation(cover_seed, i, k + j, k)).image();
                std::iota(pi.begin(), pi.end(), 0);
                do {
                    std::uint64_t index = 0;
                    for (int i = 0 ; i < k ; ++i)
                        index += weight[i] * inverses[i][pi[i]];
                    blocked[index / 64] |= std::uint64_t{1} << (index % 64);
                } while (std::next_permutation(pi.begin(), pi.end()));
            }
            std::uint64_t count = 0;
            for (auto w : blocked)
                count += std::popcount(w);
            return static_cast<double>(universe - count);
        });
    }

    auto monte_carlo_bad_prob(int k, std::uint64_t samples, std::uint64_t seed, unsigned threads) -> Estimate
    {
        if (k < 1 || k > 8)
            fail(ErrorKind::invalid_parameter, "Monte Carlo bad probability supports 1 <= k <= 8");
        auto zero = Assignment::from_colors(k, std::vector<int>(k, 0));
        return estimate(samples, threads, [&] (std::uint64_t s) {
            auto rng = substream(seed, {s});
            std::vector<Permutation> perms;
            for (int i = 0 ; i < k ; ++i)
                perms.push_back(random_permutation(rng, k));
            return is_bad_for(zero, make_column(std::move(perms))) ? 1.0 : 0.0;
        });
    }

    auto exact_bad_fraction(int k) -> ExactFraction
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::invalid_parameter, "exact bad fraction supports 1 <= k <= 4");
        auto perms = all_permutations(k);
        auto zero = Assignment::from_colors(k, std::vector<int>(k, 0));
        ExactFraction result;
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            std::vector<Permutation> column;
            for (int i = 0 ; i < k ; ++i)
                column.push_back(perms[digits[i]]);
            ++result.total;
            if (is_bad_for(zero, make_column(std::move(column))))
                ++result.blocking;
            int i = k - 1;
            for ( ; i >= 0 ; --i) {
                digits[i] = (digits[i] + 1) % perms.size();
                if (digits[i] != 0)
                    break;
            }
            if (i < 0)
                break;
        }
        return result;
    }

    auto to_string(const BigInt & x) -> std::string
    {
        return x.str();
    }
}

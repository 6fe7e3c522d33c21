#include <dpchroma/construct.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/rng.hpp>

#include "set_system.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <bit>
#include <cmath>
#include <map>
#include <string>

namespace dpchroma
{
    auto edge_permutation(std::uint64_t seed, Vertex u, Vertex v, int k) -> Permutation
    {
        if (u > v)
            std::swap(u, v);
        auto rng = substream(seed, {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)});
        return random_permutation(rng, k);
    }

    auto random_cover(int k, int t, std::uint64_t seed) -> MatchingCover
    {
        auto g = complete_bipartite(k, t);
        std::vector<Permutation> perms;
        perms.reserve(g.edge_count());
        for (auto & e : g.edges())
            perms.push_back(edge_permutation(seed, e.u, e.v, k));
        return MatchingCover(std::move(g), k, std::move(perms));
    }

    auto surviving_assignments(const MatchingCover & c) -> BitVector
    {
        auto cols = columns_of(c);
        BitVector blocked(assignment_count(c.fold()));
        for (auto & col : cols)
            blocked |= blocked_set(col);
        return blocked.complement();
    }

    auto expected_survivors(int k, std::uint64_t t) -> double
    {
        if (k < 1 || k > 20)
            fail(ErrorKind::invalid_parameter, "expected_survivors supports 1 <= k <= 20");
        // Fifty digits keep exact integer values such as k^k - k! at t = 1
        // from rounding to just below themselves.
        using Real = boost::multiprecision::cpp_bin_float_50;
        Real universe = 1, f = 1;
        for (int i = 1 ; i <= k ; ++i) {
            universe *= k;
            f *= i;
        }
        if (t == 0)
            return static_cast<double>(universe);
        if (f >= universe)
            return 0.0;
        Real ratio = (universe - f) / universe;
        return static_cast<double>(universe * boost::multiprecision::pow(ratio, Real(t)));
    }

    namespace
    {
        auto exhaustive_greedy(int k, std::optional<int> max_columns) -> GreedyRun
        {
            auto sys = detail::SetSystem::build(k);
            std::vector<std::uint64_t> covered(sys.words, 0);
            GreedyRun run;
            std::uint64_t survivors = sys.universe;
            run.survivors.push_back(survivors);
            while (survivors > 0 && (! max_columns || static_cast<int>(run.columns.size()) < *max_columns)) {
                std::size_t best = 0;
                std::uint64_t best_new = 0;
                for (std::size_t s = 0 ; s < sys.set_count() ; ++s) {
                    std::uint64_t fresh = 0;
                    auto bits = sys.set(s);
                    for (std::size_t w = 0 ; w < sys.words ; ++w)
                        fresh += std::popcount(bits[w] & ~covered[w]);
                    if (fresh > best_new) {
                        best_new = fresh;
                        best = s;
                    }
                }
                auto bits = sys.set(best);
                for (std::size_t w = 0 ; w < sys.words ; ++w)
                    covered[w] |= bits[w];
                survivors -= best_new;
                run.columns.push_back(sys.column(best));
                run.survivors.push_back(survivors);
            }
            return run;
        }

        /// Fixes perms[1..k-1] in turn, each maximising the number of
        /// survivors whose partial image is still injective. That count is
        /// proportional to the conditional expectation of the number of
        /// newly blocked survivors when the later fibres are uniform.
        auto fibrewise_greedy(int k, std::optional<int> max_columns) -> GreedyRun
        {
            auto universe = assignment_count(k);
            auto perms = all_permutations(k);
            std::vector<std::uint32_t> survivors(universe);
            for (std::uint64_t f = 0 ; f < universe ; ++f)
                survivors[f] = static_cast<std::uint32_t>(f);
            std::vector<std::uint8_t> colours(universe * k);
            for (std::uint64_t f = 0 ; f < universe ; ++f) {
                auto c = decode_assignment(k, f);
                for (int i = 0 ; i < k ; ++i)
                    colours[f * k + i] = static_cast<std::uint8_t>(c[i]);
            }

            GreedyRun run;
            run.survivors.push_back(universe);
            std::vector<std::uint32_t> mask;
            std::vector<std::uint64_t> histogram((std::size_t{1} << k) * k);
            while (! survivors.empty() && (! max_columns || static_cast<int>(run.columns.size()) < *max_columns)) {
                std::vector<Permutation> column{perms[0]};
                mask.assign(survivors.size(), 0);
                for (std::size_t s = 0 ; s < survivors.size() ; ++s)
                    mask[s] = 1u << colours[survivors[s] * k];

                for (int j = 1 ; j < k ; ++j) {
                    std::fill(histogram.begin(), histogram.end(), 0);
                    for (std::size_t s = 0 ; s < survivors.size() ; ++s)
                        if (mask[s])
                            ++histogram[mask[s] * k + colours[survivors[s] * k + j]];

                    std::vector<std::pair<std::size_t, std::uint64_t>> nonzero;
                    for (std::size_t h = 0 ; h < histogram.size() ; ++h)
                        if (histogram[h])
                            nonzero.emplace_back(h, histogram[h]);

                    std::size_t best = 0;
                    std::uint64_t best_score = 0;
                    for (std::size_t p = 0 ; p < perms.size() ; ++p) {
                        std::uint64_t score = 0;
                        for (auto [h, count] : nonzero)
                            if (! ((h / k) >> perms[p](static_cast<int>(h % k)) & 1u))
                                score += count;
                        if (p == 0 || score > best_score) {
                            best_score = score;
                            best = p;
                        }
                    }

                    auto & chosen = perms[best];
                    for (std::size_t s = 0 ; s < survivors.size() ; ++s) {
                        if (! mask[s])
                            continue;
                        auto bit = 1u << chosen(colours[survivors[s] * k + j]);
                        mask[s] = (mask[s] & bit) ? 0 : (mask[s] | bit);
                    }
                    column.push_back(chosen);
                }

                std::size_t kept = 0;
                for (std::size_t s = 0 ; s < survivors.size() ; ++s)
                    if (! mask[s])
                        survivors[kept++] = survivors[s];
                survivors.resize(kept);
                run.columns.push_back(make_column(std::move(column)));
                run.survivors.push_back(kept);
            }
            return run;
        }
    }

    auto derandomized_columns(int k, std::optional<int> max_columns) -> GreedyRun
    {
        if (k < 1 || k > 6)
            fail(ErrorKind::invalid_parameter, "derandomized construction supports 1 <= k <= 6");
        if (k <= 4)
            return exhaustive_greedy(k, max_columns);
        return fibrewise_greedy(k, max_columns);
    }

    auto derandomized_cover(int k, int t) -> MatchingCover
    {
        if (t < 1)
            fail(ErrorKind::invalid_parameter, "t must be positive");
        auto run = derandomized_columns(k, t);
        // Once nothing survives any column will do; repeat the last one.
        while (static_cast<int>(run.columns.size()) < t)
            run.columns.push_back(run.columns.back());
        return cover_from_columns(k, run.columns);
    }

    auto blocking_column_for(const Assignment & f) -> ColumnClass
    {
        int k = f.size();
        std::vector<Permutation> perms;
        for (int i = 0 ; i < k ; ++i) {
            std::vector<int> image(k);
            for (int c = 0 ; c < k ; ++c)
                image[c] = ((c - f.color(i) + i) % k + k) % k;
            perms.emplace_back(std::move(image));
        }
        return make_column(std::move(perms));
    }

    auto extend_to_uncolorable(const MatchingCover & c) -> Extension
    {
        int k = c.fold();
        auto cols = columns_of(c);
        auto survivors = surviving_assignments(c).ones();
        for (auto f : survivors)
            cols.push_back(blocking_column_for(Assignment::from_index(k, f)));
        return Extension{cover_from_columns(k, cols), static_cast<int>(survivors.size())};
    }
}

#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>

namespace dpchroma
{
    namespace
    {
        /// Colouring search over a fixed graph and vertex order, with the
        /// permutations supplied as a flat table so many covers can be tried
        /// without rebuilding anything.
        class Colourer
        {
            public:
                Colourer(const Graph & g, int fold) :
                    _fold(fold),
                    _order(smallest_last_order(g)),
                    _position(g.vertex_count()),
                    _earlier(g.vertex_count())
                {
                    for (std::size_t p = 0 ; p < _order.size() ; ++p)
                        _position[_order[p]] = static_cast<int>(p);

                    for (std::size_t i = 0 ; i < g.edge_count() ; ++i) {
                        auto [u, v] = g.edges()[i];
                        // The later endpoint in the order checks the earlier one.
                        if (_position[u] < _position[v])
                            _earlier[_position[v]].push_back({_position[u], i, true});
                        else
                            _earlier[_position[u]].push_back({_position[v], i, false});
                    }
                    for (auto & list : _earlier)
                        std::sort(list.begin(), list.end(), [] (const Earlier & a, const Earlier & b) {
                            return a.position < b.position;
                        });
                }

                /// images[e * fold + c] is the image of c under edge e's
                /// permutation, inverses[...] likewise for its inverse.
                ///
                /// Conflict-directed backjumping: a vertex that runs out of
                /// colours jumps to the latest earlier vertex that ruled one
                /// out, handing over the rest of its conflict set.
                auto solve(const std::vector<int> & images, const std::vector<int> & inverses)
                    -> std::optional<CandidateColoring>
                {
                    int n = static_cast<int>(_order.size());
                    std::size_t words = (n + 63) / 64;
                    std::vector<int> colour(n, -1);
                    std::vector<std::uint64_t> conflicts(n * words, 0);
                    auto conflict_row = [&] (int q) { return conflicts.data() + q * words; };

                    int p = 0;
                    while (p < n) {
                        auto * row = conflict_row(p);
                        int next = colour[p] + 1;
                        for ( ; next < _fold ; ++next) {
                            int culprit = conflicting(p, next, colour, images, inverses);
                            if (culprit < 0)
                                break;
                            row[culprit / 64] |= std::uint64_t{1} << (culprit % 64);
                        }
                        if (next < _fold) {
                            colour[p] = next;
                            ++p;
                            continue;
                        }

                        int h = -1;
                        for (std::size_t w = words ; w-- > 0 ; )
                            if (row[w]) {
                                h = static_cast<int>(w * 64 + 63 - std::countl_zero(row[w]));
                                break;
                            }
                        if (h < 0)
                            return std::nullopt;
                        row[h / 64] &= ~(std::uint64_t{1} << (h % 64));
                        auto * target = conflict_row(h);
                        for (std::size_t w = 0 ; w < words ; ++w)
                            target[w] |= row[w];
                        for (int q = h + 1 ; q <= p ; ++q) {
                            colour[q] = -1;
                            std::fill(conflict_row(q), conflict_row(q) + words, 0);
                        }
                        p = h;
                    }

                    CandidateColoring result(n);
                    for (int q = 0 ; q < n ; ++q)
                        result[_order[q]] = colour[q];
                    return result;
                }

            private:
                struct Earlier
                {
                    int position;
                    std::size_t edge;
                    bool earlier_is_domain;
                };

                /// Earliest coloured neighbour forbidding colour c at p, or -1.
                auto conflicting(int p, int c, const std::vector<int> & colour,
                        const std::vector<int> & images, const std::vector<int> & inverses) const -> int
                {
                    for (auto & e : _earlier[p]) {
                        int other = colour[e.position];
                        // Edge {a, b}, a < b, is violated when sigma(col a) == col b.
                        if (e.earlier_is_domain) {
                            if (images[e.edge * _fold + other] == c)
                                return e.position;
                        }
                        else if (inverses[e.edge * _fold + other] == c)
                            return e.position;
                    }
                    return -1;
                }

                int _fold;
                std::vector<Vertex> _order;
                std::vector<int> _position;
                std::vector<std::vector<Earlier>> _earlier;
        };

        void fill_tables(const MatchingCover & c, std::vector<int> & images, std::vector<int> & inverses)
        {
            int k = c.fold();
            images.assign(c.permutations().size() * k, 0);
            inverses.assign(c.permutations().size() * k, 0);
            for (std::size_t e = 0 ; e < c.permutations().size() ; ++e)
                for (int x = 0 ; x < k ; ++x) {
                    images[e * k + x] = c.permutation(e)(x);
                    inverses[e * k + c.permutation(e)(x)] = x;
                }
        }

        auto checked_power(std::uint64_t base, std::size_t exponent) -> std::uint64_t
        {
            std::uint64_t result = 1;
            for (std::size_t i = 0 ; i < exponent ; ++i) {
                if (result > std::numeric_limits<std::uint64_t>::max() / base)
                    return std::numeric_limits<std::uint64_t>::max();
                result *= base;
            }
            return result;
        }

        /// Enumerates normalized k-fold covers of g in lexicographic order of
        /// the non-tree edge permutations (first non-tree edge most
        /// significant) and returns the index of the first uncolourable one.
        class NormalizedCoverEnumeration
        {
            public:
                NormalizedCoverEnumeration(const Graph & g, int k) :
                    _graph(g),
                    _k(k),
                    _perms(all_permutations(k))
                {
                    if (! is_connected(g))
                        fail(ErrorKind::unsupported_input, "exhaustive DP colouring needs a connected graph");
                    auto tree = spanning_tree_edges(g);
                    std::vector<bool> in_tree(g.edge_count(), false);
                    for (auto i : tree)
                        in_tree[i] = true;
                    for (std::size_t i = 0 ; i < g.edge_count() ; ++i)
                        if (! in_tree[i])
                            _free_edges.push_back(i);
                    _total = checked_power(_perms.size(), _free_edges.size());
                }

                auto total() const -> std::uint64_t { return _total; }

                auto cover_at(std::uint64_t index) const -> MatchingCover
                {
                    std::vector<Permutation> perms(_graph.edge_count(), Permutation::identity(_k));
                    auto digits = decode(index);
                    for (std::size_t j = 0 ; j < _free_edges.size() ; ++j)
                        perms[_free_edges[j]] = _perms[digits[j]];
                    return MatchingCover(_graph, _k, std::move(perms));
                }

                /// First uncolourable index in [begin, end), or end. Stops early
                /// once an index at or below stop_at is known elsewhere.
                auto first_uncolourable(std::uint64_t begin, std::uint64_t end,
                        const std::atomic<std::uint64_t> & stop_at) const -> std::uint64_t
                {
                    Colourer colourer(_graph, _k);
                    std::vector<int> images, inverses;
                    fill_tables(cover_at(begin), images, inverses);
                    auto digits = decode(begin);

                    for (std::uint64_t index = begin ; index < end ; ++index) {
                        if ((index & 0xff) == 0 && stop_at.load(std::memory_order_relaxed) < index)
                            return end;
                        if (! colourer.solve(images, inverses))
                            return index;

                        // Odometer increment, least significant digit last.
                        for (std::size_t j = _free_edges.size() ; j-- > 0 ; ) {
                            digits[j] = (digits[j] + 1) % _perms.size();
                            set_edge(images, inverses, _free_edges[j], _perms[digits[j]]);
                            if (digits[j] != 0)
                                break;
                        }
                    }
                    return end;
                }

            private:
                auto decode(std::uint64_t index) const -> std::vector<std::size_t>
                {
                    std::vector<std::size_t> digits(_free_edges.size());
                    for (std::size_t j = _free_edges.size() ; j-- > 0 ; ) {
                        digits[j] = index % _perms.size();
                        index /= _perms.size();
                    }
                    return digits;
                }

                void set_edge(std::vector<int> & images, std::vector<int> & inverses,
                        std::size_t e, const Permutation & p) const
                {
                    for (int x = 0 ; x < _k ; ++x) {
                        images[e * _k + x] = p(x);
                        inverses[e * _k + p(x)] = x;
                    }
                }

                const Graph & _graph;
                int _k;
                std::vector<Permutation> _perms;
                std::vector<std::size_t> _free_edges;
                std::uint64_t _total = 0;
        };

        auto search_first_uncolourable(const NormalizedCoverEnumeration & e, unsigned threads)
            -> std::optional<std::uint64_t>
        {
            auto total = e.total();
            std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
            threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));

            auto work = [&] (unsigned id) {
                // Contiguous blocks; the smallest hit wins regardless of timing.
                auto begin = total * id / threads;
                auto end = total * (id + 1) / threads;
                auto found = e.first_uncolourable(begin, end, best);
                if (found < end) {
                    auto current = best.load();
                    while (found < current && ! best.compare_exchange_weak(current, found))
                        ;
                }
            };

            if (threads == 1)
                work(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned id = 0 ; id < threads ; ++id)
                    pool.emplace_back(work, id);
            }

            if (best.load() == std::numeric_limits<std::uint64_t>::max())
                return std::nullopt;
            return best.load();
        }
    }

    auto find_coloring(const MatchingCover & c) -> std::optional<CandidateColoring>
    {
        Colourer colourer(c.base_graph(), c.fold());
        std::vector<int> images, inverses;
        fill_tables(c, images, inverses);
        return colourer.solve(images, inverses);
    }

    auto chi_dp_exact(const Graph & g, int max_k, const EnumerationOptions & options) -> int
    {
        if (max_k < 1)
            fail(ErrorKind::invalid_parameter, "max_k must be positive");
        if (! is_connected(g))
            fail(ErrorKind::unsupported_input, "chi_dp_exact needs a connected graph");

        std::uint64_t spent = 0;
        int upper = std::min(max_k + 1, colouring_number(g));
        for (int k = 1 ; k <= max_k ; ++k) {
            if (k > 10)
                throw ResourceLimit("fold above 10 is not enumerable", k, upper);
            NormalizedCoverEnumeration enumeration(g, k);
            if (enumeration.total() > options.budget - spent)
                throw ResourceLimit("normalized cover enumeration for k = " + std::to_string(k)
                        + " exceeds the budget", k, std::max(k, upper));

            auto hit = search_first_uncolourable(enumeration, options.threads);
            // A hit may stop early; charge the whole space so the budget
            // accounting does not depend on where the witness sits.
            spent += enumeration.total();
            if (! hit)
                return k;
        }
        return max_k + 1;
    }

    auto hardest_cover_search(const Graph & g, int k, const EnumerationOptions & options)
        -> std::optional<MatchingCover>
    {
        if (k < 1 || k > 10)
            fail(ErrorKind::invalid_parameter, "fold must be in 1..10");
        NormalizedCoverEnumeration enumeration(g, k);
        if (enumeration.total() > options.budget)
            throw ResourceLimit("normalized cover enumeration exceeds the budget", 0, 0);
        auto hit = search_first_uncolourable(enumeration, options.threads);
        if (! hit)
            return std::nullopt;
        return enumeration.cover_at(*hit);
    }
}

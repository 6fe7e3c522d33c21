#include <dpchroma/mu_search.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/error.hpp>

#include "set_system.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <limits>
#include <numeric>
#include <mutex>
#include <thread>

namespace dpchroma
{
    namespace
    {
        using detail::SetSystem;

        /// Depth-first covering search. At each node the uncovered element
        /// with the fewest usable sets is branched on; a set is usable when
        /// it is not forbidden and covers enough new elements that the
        /// remaining picks could still finish. Siblings already tried are
        /// forbidden in later siblings' subtrees. No two chosen sets may share
        /// more than overlap_cap elements.
        class Searcher
        {
            public:
                Searcher(const SetSystem & sys, std::uint64_t cap, const std::atomic<std::size_t> & decided,
                        std::size_t branch) :
                    _sys(sys),
                    _cap(cap),
                    _decided(decided),
                    _branch(branch),
                    _counts(sys.universe, 0)
                {
                }

                auto run(const std::vector<std::uint64_t> & covered, int remaining, std::vector<std::uint8_t> forbidden,
                        std::uint32_t last, std::int64_t overlap_cap) -> bool
                {
                    _forbidden = std::move(forbidden);
                    _first = last;
                    _overlap_cap = overlap_cap;
                    _covered.assign((remaining + 1) * _sys.words, 0);
                    std::copy(covered.begin(), covered.end(), _covered.begin());
                    _usable.assign(remaining + 1, {});
                    _news.assign(remaining + 1, {});
                    return dfs(0, remaining);
                }

                auto nodes() const -> std::uint64_t { return _nodes; }
                auto capped() const -> bool { return _capped; }
                auto aborted() const -> bool { return _aborted; }
                auto chosen() const -> const std::vector<std::uint32_t> & { return _chosen; }

            private:
                auto dfs(int depth, int remaining) -> bool
                {
                    if (++_nodes > _cap) {
                        _capped = true;
                        return false;
                    }
                    if ((_nodes & 1023) == 0 && _decided.load(std::memory_order_relaxed) < _branch) {
                        _aborted = true;
                        return false;
                    }

                    auto words = _sys.words;
                    const auto * cov = &_covered[depth * words];
                    std::uint64_t covered_count = 0;
                    for (std::size_t w = 0 ; w < words ; ++w)
                        covered_count += std::popcount(cov[w]);
                    auto uncovered = static_cast<std::int64_t>(_sys.universe - covered_count);
                    if (uncovered == 0)
                        return true;
                    auto set_size = static_cast<std::int64_t>(_sys.set_size);
                    if (remaining == 0 || uncovered > remaining * set_size)
                        return false;

                    auto need = std::max<std::int64_t>(1, uncovered - (remaining - 1) * set_size);
                    auto & usable = _usable[depth];
                    auto & news = _news[depth];
                    usable.clear();
                    news.clear();
                    // need never drops and fresh coverage never grows along a
                    // path, so only the parent's usable sets can qualify.
                    auto candidates = depth == 0 ? _sys.set_count() : _usable[depth - 1].size();
                    const auto * last = _sys.set(depth == 0 ? _first : _chosen.back());
                    for (std::size_t i = 0 ; i < candidates ; ++i) {
                        auto s = depth == 0 ? i : _usable[depth - 1][i];
                        if (_forbidden[s])
                            continue;
                        const auto * bits = _sys.set(s);
                        std::int64_t fresh = 0;
                        for (std::size_t w = 0 ; w < words ; ++w)
                            fresh += std::popcount(bits[w] & ~cov[w]);
                        if (fresh < need)
                            continue;
                        std::int64_t shared = 0;
                        for (std::size_t w = 0 ; w < words ; ++w)
                            shared += std::popcount(bits[w] & last[w]);
                        if (shared <= _overlap_cap) {
                            usable.push_back(static_cast<std::uint32_t>(s));
                            news.push_back(static_cast<std::uint32_t>(fresh));
                        }
                    }
                    if (usable.empty())
                        return false;

                    // The best `remaining` sets must be able to cover the rest.
                    if (static_cast<std::size_t>(remaining) < news.size()) {
                        _scratch.assign(news.begin(), news.end());
                        std::nth_element(_scratch.begin(), _scratch.begin() + remaining, _scratch.end(), std::greater<>());
                        std::int64_t best = 0;
                        for (int i = 0 ; i < remaining ; ++i)
                            best += _scratch[i];
                        if (best < uncovered)
                            return false;
                    }
                    else {
                        std::int64_t best = 0;
                        for (auto n : news)
                            best += n;
                        if (best < uncovered)
                            return false;
                    }

                    auto is_covered = [&] (std::uint32_t e) { return (cov[e / 64] >> (e % 64)) & 1u; };
                    for (auto s : usable)
                        for (auto e : _sys.elements[s])
                            if (! is_covered(e))
                                ++_counts[e];

                    std::uint32_t pivot = 0;
                    std::uint32_t pivot_count = std::numeric_limits<std::uint32_t>::max();
                    for (std::uint32_t e = 0 ; e < _sys.universe ; ++e)
                        if (! is_covered(e)) {
                            if (_counts[e] < pivot_count) {
                                pivot_count = _counts[e];
                                pivot = e;
                            }
                            _counts[e] = 0;
                        }
                    if (pivot_count == 0)
                        return false;

                    auto * next = &_covered[(depth + 1) * words];
                    std::size_t undo_from = _undo.size();
                    bool found = false;
                    for (auto s : usable) {
                        const auto * bits = _sys.set(s);
                        if (! ((bits[pivot / 64] >> (pivot % 64)) & 1u))
                            continue;
                        for (std::size_t w = 0 ; w < words ; ++w)
                            next[w] = cov[w] | bits[w];
                        _chosen.push_back(s);
                        if (dfs(depth + 1, remaining - 1)) {
                            found = true;
                            break;
                        }
                        _chosen.pop_back();
                        if (_capped || _aborted)
                            break;
                        _forbidden[s] = 1;
                        _undo.push_back(s);
                    }
                    for (auto i = undo_from ; i < _undo.size() ; ++i)
                        _forbidden[_undo[i]] = 0;
                    _undo.resize(undo_from);
                    return found;
                }

                const SetSystem & _sys;
                std::uint64_t _cap;
                const std::atomic<std::size_t> & _decided;
                std::size_t _branch;
                std::uint32_t _first = 0;
                std::int64_t _overlap_cap = 0;

                std::uint64_t _nodes = 0;
                bool _capped = false;
                bool _aborted = false;
                std::vector<std::uint8_t> _forbidden;
                std::vector<std::uint64_t> _covered;
                std::vector<std::vector<std::uint32_t>> _usable;
                std::vector<std::vector<std::uint32_t>> _news;
                std::vector<std::uint32_t> _scratch;
                std::vector<std::uint32_t> _counts;
                std::vector<std::uint32_t> _undo;
                std::vector<std::uint32_t> _chosen;
        };

        struct BranchOutcome
        {
            bool done = false;
            bool found = false;
            bool capped = false;
            std::uint64_t nodes = 0;
            std::vector<std::uint32_t> chosen;
        };

        auto columns_for(const SetSystem & sys, const std::vector<std::uint32_t> & sets) -> std::vector<ColumnClass>
        {
            std::vector<ColumnClass> result;
            for (auto s : sets)
                result.push_back(sys.column(s));
            return result;
        }
    }

    auto counting_lower_bound(int k) -> int
    {
        auto universe = assignment_count(k);
        auto f = factorial(k);
        return static_cast<int>((universe + f - 1) / f);
    }

    auto search_cover(int k, int t, const SearchOptions & options, std::size_t first_branch) -> DecisionResult
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::invalid_parameter, "exact covering search supports 1 <= k <= 4");

        DecisionResult result;
        if (t < 1) {
            result.decision = Decision::uncoverable;
            return result;
        }
        if (k == 1) {
            result.decision = Decision::coverable;
            result.witness.assign(t, make_column({Permutation::identity(1)}));
            result.nodes = 1;
            return result;
        }

        auto sys = SetSystem::build(k);
        auto set_size = static_cast<std::int64_t>(sys.set_size);
        auto universe = static_cast<std::int64_t>(sys.universe);

        // Any covering can be relabelled on the left so that one of its
        // columns is the identity (set 0).
        std::vector<std::uint64_t> covered(sys.set(0), sys.set(0) + sys.words);
        int remaining = t - 1;
        auto uncovered = universe - set_size;
        if (remaining == 0 || uncovered > remaining * set_size) {
            result.decision = Decision::uncoverable;
            result.nodes = 1;
            return result;
        }

        // Second column: one branch per orbit of the identity's stabiliser,
        // taking the orbit of smallest rank present in the covering. Orbits
        // are ranked by overlap with the identity set, largest first. An
        // orbit is also a class of pairs of sets under the full symmetry
        // group, so in the branch of a representative sharing o elements
        // with the identity no two chosen sets share more than o.
        auto orbit = identity_stabiliser_orbits(sys);
        std::vector<std::int64_t> overlap(sys.set_count());
        for (std::size_t s = 0 ; s < sys.set_count() ; ++s)
            for (std::size_t w = 0 ; w < sys.words ; ++w)
                overlap[s] += std::popcount(sys.set(s)[w] & sys.set(0)[w]);
        {
            std::uint32_t orbit_count = 0;
            for (auto o : orbit)
                orbit_count = std::max(orbit_count, o + 1);
            std::vector<std::int64_t> orbit_overlap(orbit_count);
            for (std::size_t s = 0 ; s < sys.set_count() ; ++s)
                orbit_overlap[orbit[s]] = overlap[s];
            std::vector<std::uint32_t> order(orbit_count);
            std::iota(order.begin(), order.end(), 0u);
            std::stable_sort(order.begin(), order.end(),
                    [&] (auto a, auto b) { return orbit_overlap[a] > orbit_overlap[b]; });
            std::vector<std::uint32_t> rank(orbit_count);
            for (std::uint32_t r = 0 ; r < orbit_count ; ++r)
                rank[order[r]] = r;
            for (auto & o : orbit)
                o = rank[o];
        }
        auto need = std::max<std::int64_t>(1, uncovered - (remaining - 1) * set_size);
        std::vector<std::uint32_t> reps;
        {
            std::vector<std::uint32_t> first_of(sys.set_count(), 0);
            for (std::size_t s = sys.set_count() ; s-- > 1 ;)
                first_of[orbit[s]] = static_cast<std::uint32_t>(s);
            for (std::size_t r = 0 ; r < sys.set_count() ; ++r) {
                auto s = first_of[r];
                if (s == 0)
                    continue;
                std::int64_t fresh = 0;
                for (std::size_t w = 0 ; w < sys.words ; ++w)
                    fresh += std::popcount(sys.set(s)[w] & ~covered[w]);
                if (fresh >= need)
                    reps.push_back(static_cast<std::uint32_t>(s));
            }
        }
        result.branches = reps.size();

        std::vector<BranchOutcome> outcomes(reps.size());
        std::atomic<std::size_t> decided{std::numeric_limits<std::size_t>::max()};
        std::atomic<std::size_t> next_task{first_branch};
        std::mutex mutex;
        std::size_t merged = first_branch;
        std::uint64_t prefix_nodes = 0;
        auto budget = options.budget;

        // Folds finished branches into the in-order prefix; the first branch
        // that finds a covering or runs the prefix past the budget decides.
        auto merge = [&] {
            while (merged < reps.size() && outcomes[merged].done && merged < decided.load()) {
                auto & o = outcomes[merged];
                if (o.capped || prefix_nodes + o.nodes > budget) {
                    decided = merged;
                    break;
                }
                prefix_nodes += o.nodes;
                if (o.found) {
                    decided = merged;
                    break;
                }
                ++merged;
            }
        };

        auto work = [&] {
            while (true) {
                auto b = next_task.fetch_add(1);
                if (b >= reps.size() || b > decided.load())
                    return;
                std::uint64_t cap;
                {
                    std::lock_guard lock(mutex);
                    // Every earlier branch costs at least what is already
                    // merged, so this cap never changes the outcome.
                    cap = budget - std::min(budget, prefix_nodes);
                }
                std::vector<std::uint8_t> forbidden(sys.set_count(), 0);
                for (std::size_t s = 0 ; s < sys.set_count() ; ++s)
                    if (s == 0 || orbit[s] < orbit[reps[b]])
                        forbidden[s] = 1;
                std::vector<std::uint64_t> start = covered;
                for (std::size_t w = 0 ; w < sys.words ; ++w)
                    start[w] |= sys.set(reps[b])[w];

                Searcher searcher(sys, cap, decided, b);
                bool found = searcher.run(start, remaining - 1, std::move(forbidden), reps[b], overlap[reps[b]]);

                std::lock_guard lock(mutex);
                if (searcher.aborted())
                    continue;
                auto & o = outcomes[b];
                o.done = true;
                o.found = found;
                o.capped = searcher.capped();
                o.nodes = searcher.nodes();
                if (found) {
                    o.chosen = {0, reps[b]};
                    o.chosen.insert(o.chosen.end(), searcher.chosen().begin(), searcher.chosen().end());
                }
                merge();
            }
        };

        auto threads = std::max(1u, options.threads);
        if (threads == 1)
            work();
        else {
            std::vector<std::jthread> pool;
            for (unsigned i = 0 ; i < threads ; ++i)
                pool.emplace_back(work);
        }

        auto d = decided.load();
        if (d == std::numeric_limits<std::size_t>::max()) {
            result.decision = Decision::uncoverable;
            result.nodes = prefix_nodes;
            result.settled_nodes = prefix_nodes;
            result.next_branch = reps.size();
        }
        else if (outcomes[d].found && ! outcomes[d].capped) {
            result.decision = Decision::coverable;
            result.nodes = prefix_nodes;
            result.settled_nodes = prefix_nodes;
            result.witness = columns_for(sys, outcomes[d].chosen);
            while (static_cast<int>(result.witness.size()) < t)
                result.witness.push_back(result.witness.back());
            result.next_branch = d;
        }
        else {
            result.decision = Decision::exhausted;
            result.nodes = budget;
            result.settled_nodes = prefix_nodes;
            result.next_branch = d;
        }
        return result;
    }

    auto decide_uncoverable(int k, int t, const SearchOptions & options) -> bool
    {
        auto r = search_cover(k, t, options);
        if (r.decision == Decision::exhausted)
            throw ResourceLimit("covering search for k = " + std::to_string(k) + ", t = " + std::to_string(t)
                    + " exceeded its budget", t, t + 1);
        return r.decision == Decision::coverable;
    }

    auto columns_cover_universe(int k, const std::vector<ColumnClass> & cols) -> bool
    {
        BitVector blocked(assignment_count(k));
        for (auto & c : cols) {
            if (c.size() != k)
                fail(ErrorKind::invalid_parameter, "column size does not match k");
            blocked |= blocked_set(c);
        }
        return blocked.all();
    }

    auto uncolorable_cover_from_columns(int k, const std::vector<ColumnClass> & cols) -> MatchingCover
    {
        if (cols.empty() || ! columns_cover_universe(k, cols))
            fail(ErrorKind::invalid_witness, "columns do not block every assignment");
        return cover_from_columns(k, cols);
    }

    auto mu_greedy(int k) -> MuResult
    {
        auto run = derandomized_columns(k, std::nullopt);
        MuResult result;
        result.k = k;
        result.method = "greedy";
        result.lo = counting_lower_bound(k);
        result.hi = static_cast<int>(run.columns.size());
        result.witness_columns = std::move(run.columns);
        return result;
    }

    auto mu_exact(int k, const SearchOptions & options, const MuResult * resume) -> MuResult
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::invalid_parameter, "exact mu supports 1 <= k <= 4");

        auto result = mu_greedy(k);
        result.method = "exact";
        int start = result.lo;
        std::size_t first_branch = 0;
        std::uint64_t carried = 0;
        if (resume) {
            if (resume->k != k || ! resume->frontier)
                fail(ErrorKind::invalid_parameter, "resume state does not belong to an unfinished exact search for this k");
            result.impossibility_log = resume->impossibility_log;
            result.lo = resume->lo;
            start = resume->frontier->t;
            first_branch = resume->frontier->branch;
            carried = resume->frontier->nodes_in_t;
            if (resume->hi < result.hi) {
                result.hi = resume->hi;
                result.witness_columns = resume->witness_columns;
            }
        }

        std::uint64_t spent = 0;
        for (int t = start ; t < result.hi ; ++t) {
            SearchOptions step = options;
            step.budget = options.budget - spent;
            auto r = search_cover(k, t, step, first_branch);
            spent += r.nodes;
            result.nodes = spent;
            if (r.decision == Decision::coverable) {
                result.lo = result.hi = t;
                result.witness_columns = std::move(r.witness);
                result.frontier.reset();
                return result;
            }
            if (r.decision == Decision::exhausted) {
                result.lo = t;
                result.frontier = SearchFrontier{t, r.next_branch, carried + r.settled_nodes};
                return result;
            }
            result.impossibility_log.push_back({t, carried + r.nodes});
            result.lo = t + 1;
            first_branch = 0;
            carried = 0;
        }
        result.frontier.reset();
        return result;
    }
}

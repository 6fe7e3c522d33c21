#pragma once

#include <dpchroma/blocking.hpp>
#include <dpchroma/cover.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpchroma
{
    struct SearchOptions
    {
        /// Search nodes allowed across the whole call.
        std::uint64_t budget = 2'000'000'000;
        unsigned threads = 1;
    };

    enum class Decision
    {
        coverable,
        uncoverable,
        exhausted
    };

    struct DecisionResult
    {
        Decision decision = Decision::exhausted;
        /// t columns whose blocked sets cover everything, when coverable.
        std::vector<ColumnClass> witness;
        std::uint64_t nodes = 0;
        /// Nodes spent in branches whose outcome is final.
        std::uint64_t settled_nodes = 0;
        /// Top-level branches; those before next_branch are fully refuted.
        std::size_t branches = 0;
        std::size_t next_branch = 0;
    };

    /// Exact search for t canonical columns covering all k^k assignments,
    /// i.e. for an uncolourable k-fold cover of K_{k,t}; 1 <= k <= 4.
    /// Top-level branches before first_branch are taken as already refuted.
    auto search_cover(int k, int t, const SearchOptions & options = {}, std::size_t first_branch = 0) -> DecisionResult;

    /// True iff K_{k,t} has an uncolourable k-fold cover (t >= mu(k)).
    /// Throws ResourceLimit carrying [t, t + 1] as "undecided at t".
    auto decide_uncoverable(int k, int t, const SearchOptions & options = {}) -> bool;

    struct RefutationRecord
    {
        int t;
        std::uint64_t nodes;
    };

    struct SearchFrontier
    {
        int t;
        std::size_t branch;
        std::uint64_t nodes_in_t;
    };

    struct MuResult
    {
        int k = 0;
        std::string method;
        int lo = 0;
        int hi = 0;
        /// hi columns covering every assignment.
        std::vector<ColumnClass> witness_columns;
        /// One entry per t proven to admit no covering.
        std::vector<RefutationRecord> impossibility_log;
        std::uint64_t nodes = 0;
        /// Where an exhausted exact search stopped.
        std::optional<SearchFrontier> frontier;

        auto exact() const -> bool { return lo == hi; }
    };

    /// ceil(k^k / k!)
    auto counting_lower_bound(int k) -> int;

    /// Exact mu(k) by iterated covering searches from the counting bound up
    /// to the greedy value. On budget exhaustion the result is a bracket with
    /// a frontier; passing it back as resume continues from there.
    auto mu_exact(int k, const SearchOptions & options = {}, const MuResult * resume = nullptr) -> MuResult;

    /// Upper bound from derandomized_columns run to completion; 1 <= k <= 6.
    auto mu_greedy(int k) -> MuResult;

    /// Throws invalid-witness unless the columns block every assignment.
    auto uncolorable_cover_from_columns(int k, const std::vector<ColumnClass> & cols) -> MatchingCover;

    /// True iff the blocked sets of cols cover all k^k assignments.
    auto columns_cover_universe(int k, const std::vector<ColumnClass> & cols) -> bool;
}

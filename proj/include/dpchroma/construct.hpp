#pragma once

#include <dpchroma/assignment.hpp>
#include <dpchroma/bitvector.hpp>
#include <dpchroma/blocking.hpp>
#include <dpchroma/cover.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dpchroma
{
    /// The permutation on edge {u, v} of a random cover: Fisher-Yates over
    /// the substream keyed (seed, u, v), so it does not depend on the order
    /// in which edges are drawn.
    auto edge_permutation(std::uint64_t seed, Vertex u, Vertex v, int k) -> Permutation;

    /// Cover of K_{k,t} with an independent uniform perfect matching per edge.
    auto random_cover(int k, int t, std::uint64_t seed) -> MatchingCover;

    /// Bit f set iff no right vertex blocks left assignment f. The cover is
    /// colourable iff any bit is set.
    auto surviving_assignments(const MatchingCover & c) -> BitVector;

    /// k^k (1 - k!/k^k)^t, the expected number of survivors of a random
    /// cover of K_{k,t}.
    auto expected_survivors(int k, std::uint64_t t) -> double;

    struct GreedyRun
    {
        std::vector<ColumnClass> columns;
        /// survivors[j] is the number of unblocked assignments after the
        /// first j columns; survivors[0] == k^k.
        std::vector<std::uint64_t> survivors;
    };

    /// Columns chosen one at a time so that each blocks as many surviving
    /// assignments as possible, stopping after max_columns or when nothing
    /// survives. For k <= 4 every canonical column is scored exactly (ties to
    /// the lexicographically smallest); for k = 5, 6 each column is fixed
    /// one fibre at a time by conditional expectation. Either way each
    /// column blocks at least k!/k^k of the current survivors.
    auto derandomized_columns(int k, std::optional<int> max_columns) -> GreedyRun;

    /// Cover of K_{k,t} with at most floor(expected_survivors(k, t))
    /// surviving assignments; 1 <= k <= 6.
    auto derandomized_cover(int k, int t) -> MatchingCover;

    /// perms[i](c) = (c - f[i] + i) mod k, so the blocking map is i -> i.
    auto blocking_column_for(const Assignment & f) -> ColumnClass;

    struct Extension
    {
        MatchingCover cover;
        int added;
    };

    /// Appends one right vertex per surviving assignment, joined by the
    /// column that blocks it. The result has no surviving assignment.
    auto extend_to_uncolorable(const MatchingCover & c) -> Extension;
}

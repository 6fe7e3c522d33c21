#pragma once

#include <dpchroma/cover.hpp>
#include <dpchroma/graph.hpp>

#include <cstdint>
#include <optional>

namespace dpchroma
{
    /// Backtracking search for a cover colouring, vertices visited in
    /// smallest-last order. Returns nullopt iff no colouring exists.
    auto find_coloring(const MatchingCover & c) -> std::optional<CandidateColoring>;

    struct EnumerationOptions
    {
        /// Maximum number of normalized covers examined across the run.
        std::uint64_t budget = 100'000'000;
        unsigned threads = 1;
    };

    /// Smallest k <= max_k for which every k-fold matching cover of g is
    /// colourable, found by exhausting normalized covers; max_k + 1 when the
    /// threshold is above max_k. Throws ResourceLimit (with the bracket known
    /// so far) when the enumeration would exceed the budget, and
    /// unsupported-input for disconnected graphs.
    auto chi_dp_exact(const Graph & g, int max_k, const EnumerationOptions & options = {}) -> int;

    /// The lexicographically first normalized k-fold cover of g with no
    /// colouring, or nullopt when all are colourable.
    auto hardest_cover_search(const Graph & g, int k, const EnumerationOptions & options = {})
        -> std::optional<MatchingCover>;
}

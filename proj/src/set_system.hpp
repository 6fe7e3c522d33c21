#pragma once

#include <dpchroma/blocking.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dpchroma::detail
{
    /// Distinct blocked sets of all canonical columns for one k, each tagged
    /// with the lexicographically smallest column producing it. Sets are
    /// numbered in order of that column, so set 0 is the all-identity column.
    struct SetSystem
    {
        int k = 0;
        std::size_t universe = 0;
        std::size_t words = 0;
        std::uint64_t set_size = 0;
        std::vector<std::uint64_t> bits;
        std::vector<std::vector<std::uint32_t>> elements;
        std::vector<std::uint64_t> representative;

        auto set_count() const -> std::size_t { return representative.size(); }
        auto set(std::size_t s) const -> const std::uint64_t * { return bits.data() + s * words; }
        auto column(std::size_t s) const -> ColumnClass { return column_from_index(k, representative[s]); }

        /// k <= 4.
        static auto build(int k) -> SetSystem;
    };

    /// Orbit rank of each set under the relabellings (common colour renaming
    /// of all left fibres, together with a reordering of the left vertices)
    /// that fix the identity column's blocked set. Ranks follow the smallest
    /// set id in each orbit.
    auto identity_stabiliser_orbits(const SetSystem & sys) -> std::vector<std::uint32_t>;
}

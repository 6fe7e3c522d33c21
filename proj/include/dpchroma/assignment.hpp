#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dpchroma
{
    /// A colour for each of the k left vertices of K_{k,t}. The index is the
    /// little-endian base-k number whose digit of weight k^i is colors[i].
    class Assignment
    {
        public:
            static auto from_colors(int k, std::vector<int> colors) -> Assignment;
            static auto from_index(int k, std::uint64_t index) -> Assignment;

            auto size() const noexcept -> int { return static_cast<int>(_colors.size()); }
            auto colors() const noexcept -> const std::vector<int> & { return _colors; }
            auto color(int i) const -> int { return _colors[i]; }
            auto index() const noexcept -> std::uint64_t { return _index; }

            auto operator==(const Assignment &) const -> bool = default;

        private:
            Assignment(std::vector<int> colors, std::uint64_t index);

            std::vector<int> _colors;
            std::uint64_t _index = 0;
    };

    /// k^k; throws invalid-parameter when it does not fit in 64 bits.
    auto assignment_count(int k) -> std::uint64_t;

    auto encode_assignment(int k, std::span<const int> colors) -> std::uint64_t;
    auto decode_assignment(int k, std::uint64_t index) -> std::vector<int>;
}

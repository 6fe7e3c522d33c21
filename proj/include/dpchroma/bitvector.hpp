#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dpchroma
{
    /// Fixed-size dense bit vector with word-level access, used for sets of
    /// assignment indices.
    class BitVector
    {
        public:
            BitVector() = default;
            explicit BitVector(std::size_t size, bool value = false);

            auto size() const noexcept -> std::size_t { return _size; }

            auto test(std::size_t i) const -> bool
            {
                return (_words[i / 64] >> (i % 64)) & 1u;
            }

            void set(std::size_t i) { _words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
            void reset(std::size_t i) { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

            auto count() const -> std::size_t;
            auto any() const -> bool;
            auto none() const -> bool { return ! any(); }
            auto all() const -> bool { return count() == _size; }

            /// Number of bits set here but not in other.
            auto count_and_not(const BitVector & other) const -> std::size_t;

            auto operator|=(const BitVector & other) -> BitVector &;
            auto operator&=(const BitVector & other) -> BitVector &;
            auto complement() const -> BitVector;

            auto ones() const -> std::vector<std::size_t>;

            auto words() const noexcept -> std::span<const std::uint64_t> { return _words; }
            auto words() noexcept -> std::span<std::uint64_t> { return _words; }

            auto operator==(const BitVector &) const -> bool = default;

        private:
            void clear_padding();

            std::size_t _size = 0;
            std::vector<std::uint64_t> _words;
    };
}

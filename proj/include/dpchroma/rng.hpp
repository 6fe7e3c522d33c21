#pragma once

#include <dpchroma/permutation.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace dpchroma
{
    /// SplitMix64. Small, seedable, and cheap to split: independent
    /// substreams come from hashing a key path into a fresh state.
    class SplitMix64
    {
        public:
            using result_type = std::uint64_t;

            explicit SplitMix64(std::uint64_t seed) : _state(seed) { }

            auto operator()() -> std::uint64_t
            {
                std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
                z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
                return z ^ (z >> 31);
            }

            static constexpr auto min() -> std::uint64_t { return 0; }
            static constexpr auto max() -> std::uint64_t { return std::numeric_limits<std::uint64_t>::max(); }

        private:
            std::uint64_t _state;
    };

    /// Generator for the substream named by (seed, keys...).
    auto substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) -> SplitMix64;

    /// Unbiased draw from [0, n).
    auto uniform_below(SplitMix64 & rng, std::uint64_t n) -> std::uint64_t;

    /// Fisher-Yates shuffle of the identity.
    auto random_permutation(SplitMix64 & rng, int k) -> Permutation;
}

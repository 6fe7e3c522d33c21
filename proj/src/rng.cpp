#include <dpchroma/rng.hpp>

#include <numeric>
#include <utility>
#include <vector>

namespace dpchroma
{
    auto substream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) -> SplitMix64
    {
        SplitMix64 mixer(seed);
        auto state = mixer();
        for (auto key : keys)
            state = SplitMix64(state ^ (key * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL))();
        return SplitMix64(state);
    }

    auto uniform_below(SplitMix64 & rng, std::uint64_t n) -> std::uint64_t
    {
        // Reject the top partial block so every residue is equally likely.
        std::uint64_t limit = SplitMix64::max() - SplitMix64::max() % n;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= limit);
        return x % n;
    }

    auto random_permutation(SplitMix64 & rng, int k) -> Permutation
    {
        std::vector<int> image(k);
        std::iota(image.begin(), image.end(), 0);
        for (int i = k - 1 ; i > 0 ; --i)
            std::swap(image[i], image[uniform_below(rng, i + 1)]);
        return Permutation(std::move(image));
    }
}

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dpchroma
{
    /// A bijection on {0, ..., k-1}; entry i of the image is where i goes.
    class Permutation
    {
        public:
            Permutation() = default;

            /// Throws invalid-parameter unless image is a bijection.
            explicit Permutation(std::vector<int> image);

            static auto identity(int k) -> Permutation;

            auto size() const noexcept -> int { return static_cast<int>(_image.size()); }
            auto operator()(int i) const -> int { return _image[i]; }
            auto image() const noexcept -> const std::vector<int> & { return _image; }
            auto is_identity() const -> bool;

            auto operator<=>(const Permutation &) const = default;

        private:
            std::vector<int> _image;
    };

    /// compose(p, q)(i) == p(q(i))
    auto compose(const Permutation & p, const Permutation & q) -> Permutation;
    auto invert(const Permutation & p) -> Permutation;

    /// All k! permutations in lexicographic order of their images.
    auto all_permutations(int k) -> std::vector<Permutation>;

    /// Position of p in all_permutations(p.size()).
    auto lex_rank(const Permutation & p) -> std::uint64_t;
    auto permutation_from_rank(int k, std::uint64_t rank) -> Permutation;

    auto factorial(int k) -> std::uint64_t;
    auto to_string(const Permutation & p) -> std::string;
}

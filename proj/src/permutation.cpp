#include <dpchroma/permutation.hpp>
#include <dpchroma/error.hpp>

#include <algorithm>
#include <numeric>

namespace dpchroma
{
    Permutation::Permutation(std::vector<int> image) :
        _image(std::move(image))
    {
        std::vector<bool> seen(_image.size(), false);
        for (int x : _image) {
            if (x < 0 || x >= size() || seen[x])
                fail(ErrorKind::invalid_parameter, "not a permutation: " + to_string(*this));
            seen[x] = true;
        }
    }

    auto Permutation::identity(int k) -> Permutation
    {
        if (k < 0)
            fail(ErrorKind::invalid_parameter, "negative permutation size");
        std::vector<int> image(k);
        std::iota(image.begin(), image.end(), 0);
        return Permutation(std::move(image));
    }

    auto Permutation::is_identity() const -> bool
    {
        for (int i = 0 ; i < size() ; ++i)
            if (_image[i] != i)
                return false;
        return true;
    }

    auto compose(const Permutation & p, const Permutation & q) -> Permutation
    {
        if (p.size() != q.size())
            fail(ErrorKind::invalid_parameter, "composing permutations of different sizes");
        std::vector<int> image(p.size());
        for (int i = 0 ; i < p.size() ; ++i)
            image[i] = p(q(i));
        return Permutation(std::move(image));
    }

    auto invert(const Permutation & p) -> Permutation
    {
        std::vector<int> image(p.size());
        for (int i = 0 ; i < p.size() ; ++i)
            image[p(i)] = i;
        return Permutation(std::move(image));
    }

    auto all_permutations(int k) -> std::vector<Permutation>
    {
        if (k < 0 || k > 10)
            fail(ErrorKind::invalid_parameter, "permutation enumeration supports 0 <= k <= 10");
        std::vector<Permutation> result;
        std::vector<int> image(k);
        std::iota(image.begin(), image.end(), 0);
        do {
            result.emplace_back(image);
        } while (std::next_permutation(image.begin(), image.end()));
        return result;
    }

    auto factorial(int k) -> std::uint64_t
    {
        if (k < 0 || k > 20)
            fail(ErrorKind::invalid_parameter, "factorial supports 0 <= k <= 20");
        std::uint64_t result = 1;
        for (int i = 2 ; i <= k ; ++i)
            result *= i;
        return result;
    }

    auto lex_rank(const Permutation & p) -> std::uint64_t
    {
        // Lehmer code, most significant position first.
        std::uint64_t rank = 0;
        int k = p.size();
        for (int i = 0 ; i < k ; ++i) {
            int smaller_later = 0;
            for (int j = i + 1 ; j < k ; ++j)
                if (p(j) < p(i))
                    ++smaller_later;
            rank += smaller_later * factorial(k - 1 - i);
        }
        return rank;
    }

    auto permutation_from_rank(int k, std::uint64_t rank) -> Permutation
    {
        if (rank >= factorial(k))
            fail(ErrorKind::invalid_parameter, "permutation rank out of range");
        std::vector<int> pool(k);
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> image;
        for (int i = 0 ; i < k ; ++i) {
            auto f = factorial(k - 1 - i);
            auto digit = rank / f;
            rank %= f;
            image.push_back(pool[digit]);
            pool.erase(pool.begin() + digit);
        }
        return Permutation(std::move(image));
    }

    auto to_string(const Permutation & p) -> std::string
    {
        std::string result = "(";
        for (int i = 0 ; i < p.size() ; ++i) {
            if (i != 0)
                result += " ";
            result += std::to_string(p.image()[i]);
        }
        return result + ")";
    }
}

#include <dpchroma/bitvector.hpp>
#include <dpchroma/error.hpp>

#include <bit>

namespace dpchroma
{
    BitVector::BitVector(std::size_t size, bool value) :
        _size(size),
        _words((size + 63) / 64, value ? ~std::uint64_t{0} : 0)
    {
        clear_padding();
    }

    void BitVector::clear_padding()
    {
        if (_size % 64 != 0)
            _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
    }

    auto BitVector::count() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : _words)
            result += std::popcount(w);
        return result;
    }

    auto BitVector::any() const -> bool
    {
        for (auto w : _words)
            if (w)
                return true;
        return false;
    }

    auto BitVector::count_and_not(const BitVector & other) const -> std::size_t
    {
        if (other._size != _size)
            fail(ErrorKind::invalid_parameter, "bit vector size mismatch");
        std::size_t result = 0;
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            result += std::popcount(_words[i] & ~other._words[i]);
        return result;
    }

    auto BitVector::operator|=(const BitVector & other) -> BitVector &
    {
        if (other._size != _size)
            fail(ErrorKind::invalid_parameter, "bit vector size mismatch");
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto BitVector::operator&=(const BitVector & other) -> BitVector &
    {
        if (other._size != _size)
            fail(ErrorKind::invalid_parameter, "bit vector size mismatch");
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto BitVector::complement() const -> BitVector
    {
        BitVector result = *this;
        for (auto & w : result._words)
            w = ~w;
        result.clear_padding();
        return result;
    }

    auto BitVector::ones() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result;
        for (std::size_t i = 0 ; i < _words.size() ; ++i) {
            auto w = _words[i];
            while (w) {
                result.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return result;
    }
}

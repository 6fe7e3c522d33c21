#include <dpchroma/assignment.hpp>
#include <dpchroma/error.hpp>

#include <string>

namespace dpchroma
{
    auto assignment_count(int k) -> std::uint64_t
    {
        if (k < 1 || k > 15)
            fail(ErrorKind::invalid_parameter, "assignment universe supports 1 <= k <= 15, got " + std::to_string(k));
        std::uint64_t result = 1;
        for (int i = 0 ; i < k ; ++i)
            result *= static_cast<std::uint64_t>(k);
        return result;
    }

    auto encode_assignment(int k, std::span<const int> colors) -> std::uint64_t
    {
        if (static_cast<int>(colors.size()) != k)
            fail(ErrorKind::invalid_parameter, "assignment length " + std::to_string(colors.size())
                    + " does not match k = " + std::to_string(k));
        assignment_count(k);
        std::uint64_t index = 0;
        for (int i = k - 1 ; i >= 0 ; --i) {
            if (colors[i] < 0 || colors[i] >= k)
                fail(ErrorKind::invalid_parameter, "assignment colour out of range");
            index = index * k + colors[i];
        }
        return index;
    }

    auto decode_assignment(int k, std::uint64_t index) -> std::vector<int>
    {
        if (index >= assignment_count(k))
            fail(ErrorKind::invalid_parameter, "assignment index out of range");
        std::vector<int> colors(k);
        for (int i = 0 ; i < k ; ++i) {
            colors[i] = static_cast<int>(index % k);
            index /= k;
        }
        return colors;
    }

    Assignment::Assignment(std::vector<int> colors, std::uint64_t index) :
        _colors(std::move(colors)),
        _index(index)
    {
    }

    auto Assignment::from_colors(int k, std::vector<int> colors) -> Assignment
    {
        auto index = encode_assignment(k, colors);
        return Assignment(std::move(colors), index);
    }

    auto Assignment::from_index(int k, std::uint64_t index) -> Assignment
    {
        return Assignment(decode_assignment(k, index), index);
    }
}

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpchroma
{
    enum class ErrorKind
    {
        invalid_parameter,
        malformed_cover,
        unsupported_input,
        resource_limit,
        invalid_witness,
        parse_error
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind { return _kind; }

        private:
            ErrorKind _kind;
    };

    /// Thrown when a search exceeds its operation budget. The bracket
    /// [lo, hi] is what is known about the quantity being searched for.
    class ResourceLimit : public Error
    {
        public:
            ResourceLimit(const std::string & message, int lo, int hi);

            int lo;
            int hi;
    };

    [[noreturn]] void fail(ErrorKind kind, const std::string & message);
}

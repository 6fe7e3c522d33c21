#include <dpchroma/error.hpp>

namespace dpchroma
{
    auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::invalid_parameter: return "invalid-parameter";
            case ErrorKind::malformed_cover: return "malformed-cover";
            case ErrorKind::unsupported_input: return "unsupported-input";
            case ErrorKind::resource_limit: return "resource-limit";
            case ErrorKind::invalid_witness: return "invalid-witness";
            case ErrorKind::parse_error: return "parse-error";
        }
        return "unknown";
    }

    Error::Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind)
    {
    }

    ResourceLimit::ResourceLimit(const std::string & message, int l, int h) :
        Error(ErrorKind::resource_limit, message),
        lo(l),
        hi(h)
    {
    }

    void fail(ErrorKind kind, const std::string & message)
    {
        throw Error(kind, message);
    }
}

#pragma once

#include <stdexcept>
#include <string>

namespace dynparity {

enum class ErrorKind {
    parse,
    invalid_argument,
    width_exceeded,
    materialization_overflow,
    cycle_created,
    edge_absent,
    variant_unsupported,
    extension_explosion,
    path_explosion,
    not_generic,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what)
{
    if (!ok)
        fail(kind, what);
}

} // namespace dynparity

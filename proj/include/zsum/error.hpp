#pragma once

#include <stdexcept>
#include <string>

namespace zsum {

enum class ErrorKind {
    InvalidFactor,
    GroupMismatch,
    UnsupportedGroup,
    ResourceLimit,
    InvalidParams,
    InvalidInput,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace zsum

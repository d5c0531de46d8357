#pragma once

#include <stdexcept>
#include <string>

namespace cycorder {

/// Raised for caller mistakes: malformed set literals, mismatched moduli,
/// out-of-range parameters. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cycorder

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace synthtree {

/// All library failures carry a stable machine-readable kind ("MissingTarget",
/// "DimensionMismatch", ...) next to the human message. The CLI maps kinds to
/// exit codes; tests match on kinds.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
    throw Error(std::move(kind), message);
}

}  // namespace synthtree

#pragma once

#include <stdexcept>
#include <string>

namespace tolspace {

// Error taxonomy mirrors the CLI exit contract: bad_input and size_limit are
// malformed-input conditions (exit 2), precondition carries a mathematical
// witness for a check that cannot proceed (exit 1).
enum class ErrorKind {
    bad_input,
    size_limit,
    precondition,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error input(std::string message) {
        return Error(ErrorKind::bad_input, std::move(message));
    }
    static Error limit(std::string message) {
        return Error(ErrorKind::size_limit, std::move(message));
    }
    static Error precondition(std::string message) {
        return Error(ErrorKind::precondition, std::move(message));
    }

  private:
    ErrorKind kind_;
};

} // namespace tolspace

#pragma once

#include <stdexcept>
#include <string>

namespace raaskit {

// Scenario text could not be parsed; remembers the offending line (1-based,
// 0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A structural invariant of a scenario, instance, or contract is violated.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A design LP came back unbounded. Cannot happen through the standard
// builders (the objective is capped by the IR row) but hand-built problems
// can trigger it, and the CLI maps it to its own exit code.
class UnboundedDesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace raaskit

#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Error raised while reading an external text format (DIMACS, bounds CSV,
// certificate JSON). `line` is 1-based; 0 means "no line information"
// (e.g. the problem is a JSON path rather than a text line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace ramsey

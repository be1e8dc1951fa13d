#ifndef IVPOLY_ERRORS_HPP
#define IVPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivpoly {

// Raised when an input is mathematically fine but exceeds a configured
// effort bound (factoring degree, discriminant trial division, search size).
// Callers can distinguish it from a plain domain error; the CLI maps it to
// exit code 3.
class UnsupportedInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a polynomial or rational expression, with the 0-based
// character position where scanning stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace ivpoly

#endif

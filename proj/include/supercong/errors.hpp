#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supercong {

// Reciprocal of a vanishing Pochhammer factor.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// A verdict would depend on p-adic digits beyond the surviving precision.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Exponent expression evaluated to a non-integer rational.
struct NonIntegerExponent : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
  std::string expected;

  ParseError(std::string message, std::size_t off, int ln, int col,
             std::string expected_summary = {})
      : std::runtime_error(std::move(message)),
        offset(off),
        line(ln),
        column(col),
        expected(std::move(expected_summary)) {}
};

}  // namespace supercong

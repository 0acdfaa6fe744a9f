#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sympow/polynomial.hpp"

namespace sympow {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Grammar: terms joined by '+'/'-'; a term is an optional integer
/// coefficient and '*'-separated variable powers `x^k`. Whitespace is
/// insignificant. Example: `3*x^2*y - z + 1`.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string to_string(const Polynomial& f);
std::string monomial_to_string(const RingPtr& ring, const Exponents& u);

}  // namespace sympow

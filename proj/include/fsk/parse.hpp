#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsk/error.hpp"
#include "fsk/polynomial.hpp"

namespace fsk {

/// Position-tagged parse failure. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Polynomial text: `+ - *` (juxtaposition allowed), `^` powers, parentheses,
/// integer coefficients reduced mod p, variables declared in `ring`.
/// `line`/`column` locate `text` inside an enclosing document for errors.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column = 1);

/// Comma-separated polynomial list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line = 1, std::size_t column = 1);

}  // namespace fsk

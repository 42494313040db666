#ifndef FUNKSPHERE_PARSER_HPP
#define FUNKSPHERE_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "funksphere/polynomial.hpp"

namespace funksphere {

/// Syntax or range error while parsing a polynomial expression; offset is the
/// byte position in the input where the problem was detected.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

/// Recursive-descent parser for the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' uint)*
///   primary:= rational | 'x' uint | '(' expr ')'
/// with 1-based variable indices bounded by m, exponents bounded by 64, and
/// no implicit multiplication.  Whitespace is ignored between tokens.
Polynomial parse_polynomial(const std::string& text, int m);

}  // namespace funksphere

#endif

// Concrete text syntax for formulas.
//
//   formula  := implies
//   implies  := conj ( "->" implies | "<->" conj )?
//   conj     := unary ( ("&" | "|" | "^" | "(+)") unary )*
//   unary    := "~" unary | "B" "[" ident "]" unary
//             | "[" formula ">=" rational "]" unary | atom
//   atom     := "bot" | ident | "(" formula ")" | "(" formula ">=" rational ")"
//   rational := int "/" int | decimal | int
//
// `|`, `^`, `(+)` and `<->` are desugared while parsing. Distinct binary
// operators may not be mixed at one level without parentheses.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "luka/formula.hpp"

namespace luka {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; `parse_formula(print_formula(f)) == f`.
std::string print_formula(const Formula& f);

}  // namespace luka

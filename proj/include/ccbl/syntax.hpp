#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ccbl/formula.hpp"

namespace ccbl {

/// `position` is a 0-based byte offset into the parsed text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::string expected);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Concrete syntax, loosest to tightest binding:
//
//   iff   := imp ( "<->" iff )?          right associative
//   imp   := or ( "->" imp )?             right associative
//   or    := and ( "|" and )*             left associative
//   and   := unary ( "&" unary )*         left associative
//   unary := "~" unary | "(" iff ")" | "t" | "f" | identifier
//
// The Unicode forms ¬ ∧ ∨ → ↔ are accepted as aliases.
Formula parse(std::string_view text);

/// Canonical text. Parentheses appear where precedence requires them and
/// around any -> / <-> operand that is itself a -> / <->.
std::string render(const Formula& f);

}  // namespace ccbl

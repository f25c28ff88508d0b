// Symbols {*,1,2}, finite words, and the symbol-level ≈ relation.

#ifndef ITIN_SYMBOL_HPP_
#define ITIN_SYMBOL_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace itin {

enum class Symbol : std::uint8_t { Star = 0, One = 1, Two = 2 };

using Word = std::vector<Symbol>;

// Depth or index value standing for "no finite answer".
inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

// a ≈ b iff a == b or either is the critical symbol.
constexpr bool approx(Symbol a, Symbol b) noexcept {
  return a == b || a == Symbol::Star || b == Symbol::Star;
}

// 1 <-> 2. Star is returned unchanged; callers reject it beforehand.
constexpr Symbol complement(Symbol s) noexcept {
  switch (s) {
    case Symbol::One:
      return Symbol::Two;
    case Symbol::Two:
      return Symbol::One;
    default:
      return s;
  }
}

constexpr char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::Star:
      return '*';
    case Symbol::One:
      return '1';
    default:
      return '2';
  }
}

// Throws SyntaxError for anything outside {*,1,2}.
Symbol symbol_from_char(char c, std::size_t position = 0);

std::string to_string(const Word& w);

// Parses a bare word such as "1221"; the empty string gives the empty word.
Word word_from_string(std::string_view s);

bool has_star(const Word& w) noexcept;

// Shortest word u with w == u^k.
Word primitive_root(const Word& w);

inline std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

// Mathematical modulus for possibly negative left operands.
inline std::size_t mod(std::ptrdiff_t a, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  const std::ptrdiff_t r = a % sn;
  return static_cast<std::size_t>(r < 0 ? r + sn : r);
}

}  // namespace itin

#endif  // ITIN_SYMBOL_HPP_

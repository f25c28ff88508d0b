#include "itin/symbol.hpp"

#include <algorithm>

#include "itin/error.hpp"

namespace itin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyPeriod: return "EmptyPeriod";
    case ErrorKind::NotPurelyPeriodic: return "NotPurelyPeriodic";
    case ErrorKind::InvalidKneading: return "InvalidKneading";
    case ErrorKind::EqualInputs: return "EqualInputs";
    case ErrorKind::InadmissibleInput: return "InadmissibleInput";
    case ErrorKind::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorKind::BetaUndefined: return "BetaUndefined";
    case ErrorKind::FlipOutOfRange: return "FlipOutOfRange";
    case ErrorKind::EmptyFlip: return "EmptyFlip";
    case ErrorKind::StarInSequence: return "StarInSequence";
    case ErrorKind::Revisit: return "Revisit";
    case ErrorKind::IllegalFold: return "IllegalFold";
    case ErrorKind::MixedResidues: return "MixedResidues";
    case ErrorKind::HorizonMismatch: return "HorizonMismatch";
    case ErrorKind::TauMismatch: return "TauMismatch";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BadFill: return "BadFill";
    case ErrorKind::FoldBudget: return "FoldBudget";
  }
  return "Unknown";
}

Symbol symbol_from_char(char c, std::size_t position) {
  switch (c) {
    case '*': return Symbol::Star;
    case '1': return Symbol::One;
    case '2': return Symbol::Two;
    default:
      throw SyntaxError(position, std::string("unexpected character '") + c + "'");
  }
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(to_char(s));
  return out;
}

Word word_from_string(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) w.push_back(symbol_from_char(s[i], i));
  return w;
}

bool has_star(const Word& w) noexcept {
  return std::find(w.begin(), w.end(), Symbol::Star) != w.end();
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

}  // namespace itin

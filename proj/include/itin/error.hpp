// Error types shared by every itin module.

#ifndef ITIN_ERROR_HPP_
#define ITIN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace itin {

enum class ErrorKind {
  InvalidArgument,
  SyntaxError,
  EmptyPeriod,
  NotPurelyPeriodic,
  InvalidKneading,
  EqualInputs,
  InadmissibleInput,
  AdmissibilityViolation,
  BetaUndefined,
  FlipOutOfRange,
  EmptyFlip,
  StarInSequence,
  Revisit,
  IllegalFold,
  MixedResidues,
  HorizonMismatch,
  TauMismatch,
  BadParams,
  HypothesisFailed,
  BadFill,
  FoldBudget,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Literal parse failure; position is a 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A fold schedule step (1-based) could not be applied.
class IllegalFoldError : public Error {
 public:
  IllegalFoldError(std::size_t step, ErrorKind cause, const std::string& detail)
      : Error(ErrorKind::IllegalFold,
              "illegal fold at step " + std::to_string(step) + " (" +
                  std::string(to_string(cause)) + "): " + detail),
        step_(step),
        cause_(cause) {}

  std::size_t step() const noexcept { return step_; }
  ErrorKind cause() const noexcept { return cause_; }

 private:
  std::size_t step_;
  ErrorKind cause_;
};

}  // namespace itin

#endif  // ITIN_ERROR_HPP_

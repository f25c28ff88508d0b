// Right-infinite eventually periodic sequences and the operations on them:
// ≈, shift, first discrepancy, acceptability, τ-admissibility, μ-process.
//
// Every universally quantified positional check is decided by scanning
// |longest prefix| + lcm(period lengths) positions; past that bound both
// operands are jointly periodic, so any violation would already have occurred.

#ifndef ITIN_FORWARD_HPP_
#define ITIN_FORWARD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "itin/symbol.hpp"

namespace itin {

/// x = prefix · period^∞, kept in canonical form: primitive period and the
/// shortest prefix. Equality is therefore structural.
class ForwardSeq {
 public:
  /// Throws Error(EmptyPeriod) if period is empty.
  ForwardSeq(Word prefix, Word period);

  static ForwardSeq periodic(Word period) { return ForwardSeq({}, std::move(period)); }

  /// Builds the sequence whose value at i is at(i), given that at() is
  /// periodic with period_len from prefix_len on.
  static ForwardSeq from_positions(std::size_t prefix_len, std::size_t period_len,
                                   const std::function<Symbol(std::size_t)>& at);

  Symbol operator[](std::size_t i) const noexcept {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
  }

  const Word& prefix() const noexcept { return prefix_; }
  const Word& period() const noexcept { return period_; }
  bool purely_periodic() const noexcept { return prefix_.empty(); }

  /// Number of positions after which this sequence repeats with its period.
  std::size_t horizon() const noexcept { return prefix_.size() + period_.size(); }

  friend bool operator==(const ForwardSeq&, const ForwardSeq&) = default;
  friend auto operator<=>(const ForwardSeq&, const ForwardSeq&) = default;

 private:
  Word prefix_;
  Word period_;
};

/// A kneading sequence: purely periodic, exact period N, τ_0 = *, τ_1 = 1,
/// τ_1…τ_{N−1} free of *, and acceptable.
class KneadingSeq {
 public:
  /// Throws Error(InvalidKneading) if any invariant fails.
  explicit KneadingSeq(ForwardSeq seq);

  const ForwardSeq& seq() const noexcept { return seq_; }
  std::size_t period() const noexcept { return seq_.period().size(); }

  Symbol operator[](std::size_t i) const noexcept {
    return seq_.period()[i % seq_.period().size()];
  }
  // τ at a residue that may be negative.
  Symbol at_residue(std::ptrdiff_t i) const noexcept {
    return seq_.period()[mod(i, period())];
  }

  friend bool operator==(const KneadingSeq&, const KneadingSeq&) = default;
  friend auto operator<=>(const KneadingSeq&, const KneadingSeq&) = default;

 private:
  ForwardSeq seq_;
};

bool approx(const ForwardSeq& x, const ForwardSeq& y);

ForwardSeq shift(const ForwardSeq& x, std::size_t n);

/// Least i with x_i ≉ y_i, or kInfinity when x ≈ y.
std::size_t first_discrepancy(const ForwardSeq& x, const ForwardSeq& y);

/// Throws Error(NotPurelyPeriodic) for a nonempty prefix.
bool is_acceptable(const ForwardSeq& t);

bool is_admissible(const ForwardSeq& x, const KneadingSeq& tau);

/// The μ-process: the admissible point of the arc (x,y) whose first
/// star sits at the first discrepancy of x and y.
ForwardSeq mu_point(const ForwardSeq& x, const ForwardSeq& y, const KneadingSeq& tau);

std::string to_string(const ForwardSeq& x);

}  // namespace itin

#endif  // ITIN_FORWARD_HPP_

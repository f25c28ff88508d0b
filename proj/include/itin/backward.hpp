// Backward itineraries, two-sided points and the cylinder geometry built on
// them: discrepancy sets, β-matching, shared boundary points, folds, cylinder
// membership and the arc-component criterion.
//
// Positions of a backward itinerary are negative; internally everything is
// indexed by depth j ≥ 1, meaning position −j.

#ifndef ITIN_BACKWARD_HPP_
#define ITIN_BACKWARD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "itin/forward.hpp"
#include "itin/symbol.hpp"

namespace itin {

/// e = period^∞ · suffix, written left to right as in "#(2112)2111": the last
/// suffix symbol sits at position −1. Canonical: primitive period, shortest
/// suffix.
class BackSeq {
 public:
  /// Throws Error(EmptyPeriod) if period is empty.
  BackSeq(Word period, Word suffix);

  static BackSeq periodic(Word period) { return BackSeq(std::move(period), {}); }

  /// Builds the sequence with e_{−j} = at(j), given that at() is periodic
  /// with period_len for depths beyond suffix_len.
  static BackSeq from_depths(std::size_t suffix_len, std::size_t period_len,
                             const std::function<Symbol(std::size_t)>& at);

  /// Symbol at position −j, j ≥ 1.
  Symbol at_depth(std::size_t j) const noexcept {
    const std::size_t s = suffix_.size();
    if (j <= s) return suffix_[s - j];
    const std::size_t p = period_.size();
    return period_[p - 1 - (j - s - 1) % p];
  }

  const Word& period() const noexcept { return period_; }
  const Word& suffix() const noexcept { return suffix_; }
  bool has_star() const noexcept { return itin::has_star(period_) || itin::has_star(suffix_); }

  /// e·a: the word a occupies positions −|a|…−1, e is pushed deeper.
  BackSeq append(const Word& a) const;

  /// Last n symbols (positions −n…−1) in left-to-right order.
  Word last(std::size_t n) const;

  /// a with e·a == *this and |a| == n, if there is one.
  std::optional<Word> strip(const BackSeq& base, std::size_t n) const;

  friend bool operator==(const BackSeq&, const BackSeq&) = default;
  friend auto operator<=>(const BackSeq&, const BackSeq&) = default;

 private:
  Word period_;
  Word suffix_;
};

/// Two-sided sequence …p_{−2}p_{−1}.p_0p_1…
struct BiSeq {
  BackSeq back;
  ForwardSeq fwd;

  Symbol operator[](std::ptrdiff_t i) const noexcept {
    return i < 0 ? back.at_depth(static_cast<std::size_t>(-i)) : fwd[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const BiSeq&, const BiSeq&) = default;
};

/// Eventually periodic subset of {1,2,…}: the explicit head below threshold,
/// then {k ≥ threshold : k mod modulus ∈ residues}. Normalized so that two
/// equal sets compare equal.
class DiscrepancySet {
 public:
  DiscrepancySet() = default;
  DiscrepancySet(std::vector<std::size_t> head, std::size_t threshold, std::size_t modulus,
                 std::vector<std::size_t> residues);

  static DiscrepancySet finite(std::vector<std::size_t> elements);

  bool contains(std::size_t k) const;
  bool empty() const noexcept { return head_.empty() && residues_.empty(); }
  bool is_finite() const noexcept { return residues_.empty(); }

  /// Smallest element, kInfinity if empty.
  std::size_t first() const;

  /// Elements ≤ bound in increasing order.
  std::vector<std::size_t> elements_upto(std::size_t bound) const;

  /// The common residue mod n of all elements, if they share one.
  std::optional<std::size_t> common_residue(std::size_t n) const;

  const std::vector<std::size_t>& head() const noexcept { return head_; }
  std::size_t threshold() const noexcept { return threshold_; }
  std::size_t modulus() const noexcept { return modulus_; }
  const std::vector<std::size_t>& residues() const noexcept { return residues_; }

  friend bool operator==(const DiscrepancySet&, const DiscrepancySet&) = default;

 private:
  void normalize();

  std::vector<std::size_t> head_;
  std::size_t threshold_ = 1;
  std::size_t modulus_ = 1;
  std::vector<std::size_t> residues_;
};

struct BetaResult {
  enum class Kind { Undefined, Finite, Infinite };
  Kind kind = Kind::Undefined;
  std::size_t value = 0;

  static BetaResult undefined() { return {}; }
  static BetaResult finite(std::size_t k) { return {Kind::Finite, k}; }
  static BetaResult infinite() { return {Kind::Infinite, kInfinity}; }

  bool defined() const noexcept { return kind != Kind::Undefined; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_infinite() const noexcept { return kind == Kind::Infinite; }

  friend bool operator==(const BetaResult&, const BetaResult&) = default;
};

/// Which positions of the residue class a fold flips: every admissible one,
/// or an explicit set of depths (position −d for depth d).
struct FlipChoice {
  bool all = false;
  std::vector<std::size_t> depths;

  static FlipChoice every() { return {true, {}}; }
  static FlipChoice at(std::vector<std::size_t> d) { return {false, std::move(d)}; }

  friend bool operator==(const FlipChoice&, const FlipChoice&) = default;
};

DiscrepancySet discrepancies(const BackSeq& e, const BackSeq& f);

/// Largest K with e_{−j} ≈ τ_{(i−j) mod N} for all 1 ≤ j ≤ K (kInfinity if unbounded).
std::size_t match_depth(const BackSeq& e, std::size_t residue, const KneadingSeq& tau);

BetaResult beta(const BackSeq& e, std::size_t residue, const KneadingSeq& tau);

/// The point shared by T(e) and every fold of e across residue i.
BiSeq boundary_point(const BackSeq& e, std::size_t residue, const KneadingSeq& tau);

/// Flips (1 <-> 2) the chosen positions of residue class i within β^i(e).
BackSeq fold_apply(const BackSeq& e, std::size_t residue, const FlipChoice& flips,
                   const KneadingSeq& tau);

bool same_arc_component(const BackSeq& e, const BackSeq& f, const KneadingSeq& tau);

ForwardSeq project(const BiSeq& p, std::ptrdiff_t n);

bool biseq_admissible(const BiSeq& p, const KneadingSeq& tau);

/// p_i ≈ e_i for all i ≤ n; n must be negative.
bool in_cylinder(const BiSeq& p, const BackSeq& e, std::ptrdiff_t n);

std::string to_string(const BackSeq& e);
std::string to_string(const BiSeq& p);
std::string to_string(const DiscrepancySet& d);
std::string to_string(const BetaResult& b);
std::string to_string(const FlipChoice& f);

}  // namespace itin

#endif  // ITIN_BACKWARD_HPP_

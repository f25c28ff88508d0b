// Asymptotic pairs of backward itineraries: kneading enumeration, hypothesis
// scan, the three constructions with their fold-cycle programs, verification,
// the k-fan and fill variants.

#ifndef ITIN_THEOREMS_HPP_
#define ITIN_THEOREMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "itin/ray.hpp"

namespace itin {

enum class TheoremCase { Case1, Case2, Case3 };

std::string to_string(TheoremCase c);

/// ν_1…ν_N with ν_i = τ_i below N and a free last symbol.
struct NuWord {
  Word word;  // word[0] is ν_1

  /// Throws Error(InvalidArgument) unless word agrees with τ_1…τ_{N−1} and is star-free.
  NuWord(Word w, const KneadingSeq& tau);

  Symbol operator()(std::size_t i) const { return word[i - 1]; }  // 1-based
  std::size_t size() const { return word.size(); }
};

struct HypothesisEntry {
  TheoremCase theorem;
  std::size_t k;
  Word nu;

  friend bool operator==(const HypothesisEntry&, const HypothesisEntry&) = default;
};

struct HypothesisReport {
  KneadingSeq tau;
  std::vector<HypothesisEntry> entries;
  bool case1 = false;
};

struct TheoremInstance;

struct GeneratedPair {
  FoldSchedule e;
  FoldSchedule f;
  std::vector<std::size_t> cycle_ends;  // fold counts at which a cycle closed
  std::vector<Word> appended;           // A_1, A_2, … at those points
};

struct TheoremInstance {
  TheoremCase theorem;
  KneadingSeq tau;
  std::size_t l = 0;  // case 1
  std::size_t k = 0;  // cases 2 and 3
  Word nu;            // cases 2 and 3
  BackSeq e;
  BackSeq etilde;
  std::vector<DeepPair> program;  // deep folds of one cycle, relative to |A|

  /// Runs whole cycles, at least one, until at least `folds` folds exist.
  /// Throws Error(HypothesisFailed) if a cycle does not close on e·A, ẽ·A.
  GeneratedPair schedules(std::size_t folds, const Word& fill = {Symbol::One}) const;

  /// The folds of cycles [0, count).
  GeneratedPair cycles(std::size_t count, const Word& fill = {Symbol::One}) const;

  std::string label() const;
};

// Serial reference and OpenMP version; both sorted by (N, word).
std::vector<KneadingSeq> enumerate_kneading_serial(std::size_t max_n);
std::vector<KneadingSeq> enumerate_kneading(std::size_t max_n);

HypothesisReport scan_hypotheses(const KneadingSeq& tau);

/// ν_{k+j} = τ_j for j = 1..N−k, the form of the selection rule used in the proofs.
bool selection_rule_holds(const Word& nu, std::size_t k, const KneadingSeq& tau);

/// Throws Error(BadParams).
TheoremInstance build_case1(std::size_t n, std::size_t l);
/// Throws Error(HypothesisFailed) when (case, k) is not in scan_hypotheses(tau).
TheoremInstance build_case2(const KneadingSeq& tau, std::size_t k);
TheoremInstance build_case3(const KneadingSeq& tau, std::size_t k);

/// An instance of the given schema with explicitly chosen e and ẽ, for
/// checking printed variants against the construction's fold program.
TheoremInstance with_itineraries(TheoremInstance inst, BackSeq e, BackSeq etilde);

struct VerificationReport {
  bool distinct_components = false;
  AsymptoticReport asymptotic;
  std::size_t cycles = 0;                    // closed cycles within the horizon
  std::vector<std::size_t> d_growth;         // d at cycle boundaries
  std::size_t certificate_cycles = 0;        // cycles up to n1, plus the replay
  std::optional<std::string> error;          // generator failure, if any

  bool ok() const;
};

/// Folds per ray a verification may generate before the row is reported failed.
/// Cycle lengths grow geometrically with the period; every row up to period 7 fits.
inline constexpr std::size_t kDefaultFoldBudget = 250'000;

/// Generates whole cycles until the horizon is reached, and never fewer than two.
/// Generation past `budget` folds (0: unlimited) is reported as an error.
/// Throws Error(InvalidArgument) for horizon 0; IllegalFoldError propagates.
VerificationReport verify_instance(const TheoremInstance& inst, std::size_t horizon,
                                   const Word& fill = {Symbol::One}, std::size_t budget = kDefaultFoldBudget);

struct Fan {
  std::vector<TheoremInstance> instances;  // l = 1 … N−2
  FoldSchedule shared;                     // the common e-side
  std::vector<FoldSchedule> partners;      // one ẽ^l side per instance
  std::vector<AsymptoticReport> reports;   // shared vs each partner
  bool e_sides_coincide = false;
  bool pairwise_matched = false;           // every pair of rays has equal C at every step
};

/// Throws Error(BadParams) for n < 3.
Fan build_fan(std::size_t n, std::size_t cycles = 3);

/// Cycle model for a partner ray following a shared e-side by lockstep
/// matching. One model step runs `cycles` program cycles: in case 1, d gains
/// N−1 per cycle, so a certified window needs two.
CycleModel fan_model(const TheoremInstance& shared_side, const Word& fill = {Symbol::One}, std::size_t cycles = 1);

/// Counterpart folds for f given the e-side folds: mirror a fold while it stays
/// above the first discrepancy, otherwise pick the legal single flip of the
/// same residue that pushes the first discrepancy deepest.
std::vector<FoldSpec> match_partner(const BackSeq& e, const BackSeq& f, const std::vector<FoldSpec>& e_folds,
                                    const KneadingSeq& tau);

/// One schedule pair per fill, each over the given number of cycles.
/// Throws Error(BadFill) for an empty or starred fill.
std::vector<GeneratedPair> variant_schedules(const TheoremInstance& inst, const std::vector<Word>& fills,
                                             std::size_t cycles = 3);

}  // namespace itin

#endif  // ITIN_THEOREMS_HPP_

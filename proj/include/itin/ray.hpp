// Rays as fold schedules: replaying folds, folding patterns, first-discrepancy
// growth between two rays, and self-similarity certificates.

#ifndef ITIN_RAY_HPP_
#define ITIN_RAY_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "itin/backward.hpp"

namespace itin {

struct FoldSpec {
  std::size_t residue = 0;
  FlipChoice flips;

  friend bool operator==(const FoldSpec&, const FoldSpec&) = default;
};

/// A horizon-truncated ray. fill records the symbols the generator used for
/// stars of τ inside V-blocks; it only matters for certificate replay.
struct FoldSchedule {
  BackSeq start;
  std::vector<FoldSpec> folds;
  KneadingSeq tau;
  Word fill{Symbol::One};
};

using FoldingPattern = std::vector<DiscrepancySet>;

struct RayTrace {
  std::vector<BackSeq> itineraries;  // R^0 e … R^L e
  FoldingPattern alphas;             // α_1 … α_L
};

/// Throws IllegalFoldError for a bad step, Error(StarInSequence) for a start
/// containing *.
RayTrace schedule_apply(const FoldSchedule& s);

/// Throws Error(MixedResidues) if the elements are not congruent mod n.
std::size_t c_class(const DiscrepancySet& a, std::size_t n);

/// First discrepancy depth of two backward itineraries (kInfinity if equal).
std::size_t first_back_discrepancy(const BackSeq& e, const BackSeq& f);

// ---------------------------------------------------------------------------
// Transports and paired cycles.

/// V_w ≈ τ_1…τ_w written left to right (so depth j carries τ_{w−j+1}); the
/// stars of τ are replaced by fill symbols taken cyclically from the left.
Word v_block(std::size_t w, const KneadingSeq& tau, const Word& fill);

/// A shortest sequence of legal folds turning the last |target| symbols of e
/// into target while leaving deeper symbols alone and never stepping onto a
/// state listed in avoid. Deterministic.
std::vector<FoldSpec> transport(const BackSeq& e, const Word& target, const KneadingSeq& tau,
                                const std::vector<BackSeq>& avoid = {});

/// A pair of single flips at depths shift+e_depth and shift+f_depth, preceded
/// by a common transport of the window shift+min(e_depth,f_depth)−1 to V.
struct DeepPair {
  std::size_t e_depth;
  std::size_t f_depth;

  friend bool operator==(const DeepPair&, const DeepPair&) = default;
};

struct PairedFolds {
  std::vector<FoldSpec> e;
  std::vector<FoldSpec> f;
};

/// States visited so far on each side of a pair of rays.
struct RayHistory {
  std::vector<BackSeq> e;
  std::vector<BackSeq> f;
  std::size_t max_states = 0;  // run_cycle throws FoldBudget beyond this; 0 for no limit
};

/// Runs the deep pairs at the given shift from (e, f), advancing both.
/// Transports avoid the states in history, which is extended as the cycle
/// runs; without one, only the cycle's own states are avoided.
/// Throws IllegalFoldError when a fold is not legal on either side.
PairedFolds run_cycle(BackSeq& e, BackSeq& f, std::size_t shift, const std::vector<DeepPair>& pairs,
                      const Word& fill, const KneadingSeq& tau, RayHistory* history = nullptr);

/// The e-side folds of run_cycle when no partner ray is tracked.
std::vector<FoldSpec> run_cycle_single(BackSeq& e, std::size_t shift, const std::vector<DeepPair>& pairs,
                                       const Word& fill, const KneadingSeq& tau,
                                       std::vector<BackSeq>* history = nullptr);

/// A with en == e0·A and fn == f0·A, the shortest such, if any.
std::optional<Word> common_append(const BackSeq& e0, const BackSeq& en, const BackSeq& f0, const BackSeq& fn);

// ---------------------------------------------------------------------------
// Asymptotic certificates.

/// Produces the folds of one cycle for a pair of states at a common shift.
/// Certification replays cycles through a model; without one, the model is
/// the deep pairs read off the schedules, run through run_cycle.
using CycleModel = std::function<PairedFolds(const BackSeq& e, const BackSeq& f, std::size_t shift)>;

struct SelfSimilarCertificate {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  Word a0;  // R^{n0} e = e·a0, R^{n0} ẽ = ẽ·a0
  Word a1;  // R^{n1} e = e·a1, R^{n1} ẽ = ẽ·a1
  Word a2;  // reached by the replayed cycle
  std::vector<DeepPair> deep;  // relative to |a0|
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::size_t replay_folds = 0;
  std::optional<bool> next_window_matches;  // vs. the schedules, if long enough
};

struct AsymptoticReport {
  std::size_t horizon = 0;
  std::vector<bool> c_matched;              // one per fold
  std::vector<std::size_t> d_values;        // d_0 … d_L
  std::vector<std::size_t> boundaries;      // n with R^n e = e·A, R^n ẽ = ẽ·A
  std::vector<std::size_t> cycle_boundaries;  // those where |A| sets a new record
  bool d_increasing = false;                // strictly, across cycle boundaries
  std::optional<SelfSimilarCertificate> certificate;
  bool identical = false;                   // both rays coincide
  bool verdict = false;

  /// "certified", "suggestive" (matched and growing, no certificate) or "failed".
  std::string status() const;
};

/// Throws Error(HorizonMismatch) or Error(TauMismatch).
AsymptoticReport check_asymptotic(const FoldSchedule& a, const FoldSchedule& b, const CycleModel& model = {});

std::optional<SelfSimilarCertificate> certify_self_similar(const FoldSchedule& a, const FoldSchedule& b,
                                                           const CycleModel& model = {});

std::string to_string(const FoldSpec& f);

}  // namespace itin

#endif  // ITIN_RAY_HPP_

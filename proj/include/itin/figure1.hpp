// The table of asymptotic pairs for periods up to 5: an embedded
// transcription, regeneration from the constructions, verification of every
// row and a keyed diff between the two.

#ifndef ITIN_FIGURE1_HPP_
#define ITIN_FIGURE1_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "itin/theorems.hpp"

namespace itin {

enum class Provenance {
  Transcribed,     // copied from the table, expected to regenerate exactly
  KnownDeviation,  // copied from the table, known to differ from the formulas
};

struct TranscribedRow {
  std::string tau;
  std::string nu;
  std::size_t k;
  std::string e;
  std::string etilde;
  TheoremCase theorem;
  Provenance provenance;
  std::string note;
};

/// The 24 rows in table order.
const std::vector<TranscribedRow>& figure1_transcription();

/// Kneading sequences the enumeration finds that the table leaves out.
const std::vector<std::string>& figure1_known_extras();

enum class RowStatus {
  Reproduced,  // matches a transcribed row
  Deviation,   // differs from a row flagged KnownDeviation, or is its printed variant
  Extra,       // generated for a kneading sequence listed in figure1_known_extras
  Regression,  // any other difference
};

std::string to_string(RowStatus s);

struct Figure1Row {
  std::string tau;
  std::string nu;
  std::size_t k = 0;
  TheoremCase theorem = TheoremCase::Case2;
  std::string e;               // the pair this row verifies
  std::string etilde;
  std::string formula_e;       // what the construction gives for (τ, k, ν)
  std::string formula_etilde;
  bool printed_variant = false;  // e, ẽ taken from the table instead of the formulas
  bool verified = false;
  bool distinct_components = false;
  std::size_t certificate_cycles = 0;
  std::string verdict;         // certified, suggestive or failed
  std::string detail;          // failure detail, empty when certified
  RowStatus status = RowStatus::Reproduced;
  std::string note;
};

struct Figure1Result {
  std::size_t max_n = 0;
  std::size_t horizon = 0;
  std::vector<Figure1Row> rows;
  std::vector<std::string> missing;  // transcribed rows with no generated counterpart

  std::size_t count(RowStatus s) const;
  bool all_verified() const;
  /// 0 when every row certifies and the diff has no regressions, else 1.
  int exit_status() const;
};

inline constexpr std::size_t kMinFigureHorizon = 8;

/// Throws Error(InvalidArgument) for horizon < kMinFigureHorizon or max_n outside 2..8.
Figure1Result figure1(std::size_t max_n, std::size_t horizon, bool parallel = true);

std::string render_table(const Figure1Result& r);
std::string render_csv(const Figure1Result& r);
std::string render_json(const Figure1Result& r);

}  // namespace itin

#endif  // ITIN_FIGURE1_HPP_

// Acceptance report: one PASS/FAIL line per criterion.
//
// By default the exit status is 0 whenever every criterion could be evaluated,
// so the report can run under ctest alongside known red results; --strict
// makes any FAIL line a nonzero exit.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

#include "itin/figure1.hpp"
#include "itin/literal.hpp"
#include "itin/ray.hpp"
#include "itin/theorems.hpp"
#include "support.hpp"

using namespace itin;

namespace {

struct Line {
  bool pass;
  std::string detail;
};

using Key = std::tuple<std::string, std::size_t, std::string>;

std::string key_text(const Key& k) {
  return std::get<0>(k) + " k=" + std::to_string(std::get<1>(k)) + " nu=" + std::get<2>(k);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

Line figure1_reproduction(const Figure1Result& r, double seconds) {
  const Key documented{"(*112)#", 3, "1121"};
  std::vector<std::string> deviations, regressions, extras;
  std::size_t reproduced = 0, documented_variants = 0, documented_checked = 0;
  for (const auto& row : r.rows) {
    const Key k{row.tau, row.k, row.nu};
    if (row.printed_variant) {
      if (k == documented) ++documented_variants;
      continue;
    }
    switch (row.status) {
      case RowStatus::Reproduced: ++reproduced; break;
      case RowStatus::Deviation:
        deviations.push_back(key_text(k));
        if (k == documented) ++documented_checked;
        break;
      case RowStatus::Extra:
        if (extras.empty() || extras.back() != row.tau) extras.push_back(row.tau);
        break;
      case RowStatus::Regression: regressions.push_back(key_text(k)); break;
    }
  }
  const bool only_documented = deviations.size() == 1 && documented_checked == 1 && documented_variants == 1;
  const bool pass = reproduced == 23 && only_documented && extras == std::vector<std::string>{"(*1212)#"} &&
                    regressions.empty() && r.missing.empty() && seconds < 10.0;
  std::ostringstream d;
  d << reproduced << "/24 table rows reproduced exactly; deviations: " << (deviations.empty() ? "none" : join(deviations, ", "))
    << "; extra: " << (extras.empty() ? "none" : join(extras, ", ")) << "; regressions: " << regressions.size()
    << "; missing: " << r.missing.size() << "; " << seconds << " s";
  return {pass, d.str()};
}

// Counted twice: with the table's own pairs, and with the formula pairs for
// the rows where the two differ.
Line verification(const Figure1Result& r) {
  auto ok = [](const Figure1Row& row) {
    return row.verified && row.distinct_components && row.certificate_cycles <= 3;
  };
  std::size_t printed_total = 0, printed_ok = 0, formula_total = 0, formula_ok = 0;
  std::vector<std::string> failed;
  for (const auto& row : r.rows) {
    if (row.status == RowStatus::Extra) continue;
    const bool has_variant = std::any_of(r.rows.begin(), r.rows.end(), [&](const Figure1Row& x) {
      return x.printed_variant && x.tau == row.tau && x.k == row.k && x.nu == row.nu;
    });
    if (!row.printed_variant) {
      ++formula_total;
      formula_ok += ok(row);
    }
    if (has_variant && !row.printed_variant) continue;
    ++printed_total;
    if (ok(row)) ++printed_ok;
    else failed.push_back(key_text({row.tau, row.k, row.nu}) + (row.printed_variant ? " (as printed)" : ""));
  }
  std::ostringstream d;
  d << printed_ok << "/" << printed_total << " table rows certified at horizon " << r.horizon << " (" << formula_ok
    << "/" << formula_total << " with the formula pairs)";
  if (!failed.empty()) d << "; failing: " << join(failed, ", ");
  return {printed_total == 24 && printed_ok == printed_total, d.str()};
}

Line worked_examples() {
  std::vector<std::string> bad;
  const KneadingSeq tau = parse_kneading("(*112)#");
  const BackSeq ones = parse_back("#(1)");
  if (beta(ones, 1, tau) != BetaResult::finite(1)) bad.push_back("beta^1");
  if (beta(ones, 2, tau) != BetaResult::finite(2)) bad.push_back("beta^2");
  if (beta(ones, 3, tau) != BetaResult::finite(3)) bad.push_back("beta^3");
  if (beta(ones, 0, tau).defined()) bad.push_back("beta^0");
  if (boundary_point(ones, 1, tau) != parse_biseq("#(1)*.(112*)#")) bad.push_back("boundary point");

  const BackSeq e = parse_back("#(1112)");
  const BiSeq common = parse_biseq("#(*112).(*112)#");
  if (!beta(e, 0, tau).is_infinite() || boundary_point(e, 0, tau) != common) bad.push_back("infinite beta point");
  Word block;
  for (int n = 0; n < 8; ++n) {
    if (!in_cylinder(common, e.append(block), -1)) bad.push_back("intersection membership");
    block.insert(block.end(), {Symbol::Two, Symbol::One, Symbol::One, Symbol::Two});
  }

  const FoldSchedule s{e, {{0, FlipChoice::every()}, {1, FlipChoice::at({1})}, {3, FlipChoice::at({3})}}, tau};
  const RayTrace t = schedule_apply(s);
  const bool pattern = t.alphas.size() == 3 && t.alphas[0] == DiscrepancySet({}, 1, 4, {0}) &&
                       t.alphas[1] == DiscrepancySet::finite({1}) && t.alphas[2] == DiscrepancySet::finite({3});
  if (!pattern) bad.push_back("folding pattern");
  return {bad.empty(), bad.empty() ? "beta table, boundary point 1^inf*, (*112)^inf.(*112)^inf in every T(e^n), "
                                     "alpha = {4n}, {1}, {3}"
                                   : "mismatch: " + join(bad, ", ")};
}

Line oracle_equivalence() {
  testsupport::Gen g(2024);
  const std::vector<KneadingSeq> taus = enumerate_kneading(5);
  std::size_t beta_n = 0, adm_n = 0, arc_n = 0, disagree = 0;
  for (int t = 0; t < 1500; ++t) {
    const KneadingSeq& tau = g.pick(taus);
    const BackSeq e = g.coin(0.2) ? BackSeq(tau.seq().period(), g.word(g.range(0, 8))) : g.back(8, 6, 0.05);
    for (std::size_t i = 0; i < tau.period(); ++i) {
      const std::size_t naive = testsupport::naive_beta(e, i, tau);
      const BetaResult b = beta(e, i, tau);
      const BetaResult want = naive == 201 ? BetaResult::infinite()
                              : naive == 0 ? BetaResult::undefined()
                                           : BetaResult::finite(naive);
      ++beta_n;
      if (b != want) ++disagree;
    }

    const ForwardSeq x = g.coin(0.3) ? ForwardSeq(g.word(g.range(0, 8), 0.1), tau.seq().period())
                                     : g.forward(8, 6, 0.1);
    ++adm_n;
    if (is_admissible(x, tau) != testsupport::naive_admissible(x, tau)) ++disagree;

    const BackSeq f = g.coin(0.5) ? e.append(g.word(g.range(0, 3))) : g.back(8, 6);
    const BackSeq e2 = e.has_star() ? g.back(8, 6) : e;
    ++arc_n;
    if (same_arc_component(e2, f, tau) != testsupport::naive_same_arc(e2, f, tau)) ++disagree;
  }
  std::ostringstream d;
  d << beta_n << " beta, " << adm_n << " admissibility, " << arc_n << " arc-component comparisons; " << disagree
    << " disagreements";
  return {disagree == 0 && adm_n >= 1000 && arc_n >= 1000, d.str()};
}

// The property suites live in the test binaries; run them filtered to their
// property and invariant cases.
Line property_suites(const std::string& bin_dir) {
  const std::vector<std::string> bins = {"test_seqcore", "test_backcore", "test_rayengine", "test_theorems",
                                         "test_figure1", "test_cli"};
  std::vector<std::string> failed;
  std::size_t cases = 0;
  for (const auto& b : bins) {
    const std::string cmd = bin_dir + "/" + b +
                            " --test-case='property:*,cli: literals*,figure1: serial*' --no-colors 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
      failed.push_back(b);
      continue;
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int raw = pclose(p);
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) failed.push_back(b);
    const auto at = out.find("test cases:");
    if (at != std::string::npos) {
      std::size_t k = 0;
      if (std::sscanf(out.c_str() + at, "test cases: %zu", &k) == 1) cases += k;
    }
  }
  std::ostringstream d;
  d << cases << " property cases across " << bins.size() << " suites";
  if (!failed.empty()) d << "; failing suites: " << join(failed, ", ");
  return {failed.empty() && cases > 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::string bin_dir = ".";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") strict = true;
    else if (a == "--test-bin-dir" && i + 1 < argc) bin_dir = argv[++i];
    else {
      std::cerr << "usage: acceptance [--strict] [--test-bin-dir DIR]\n";
      return 2;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const Figure1Result fig = figure1(5, 12);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::vector<std::pair<std::string, Line>> lines = {
      {"1 figure1 reproduction", figure1_reproduction(fig, seconds)},
      {"2 verification suite", verification(fig)},
      {"3 worked examples", worked_examples()},
      {"4 oracle equivalence", oracle_equivalence()},
      {"5 property suites", property_suites(bin_dir)},
  };
  std::size_t passed = 0;
  for (const auto& [name, line] : lines) {
    std::cout << (line.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << line.detail << "\n";
    passed += line.pass;
  }
  std::cout << passed << "/" << lines.size() << " criteria pass\n";
  return strict && passed != lines.size() ? 1 : 0;
}

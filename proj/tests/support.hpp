// Random generators and naive reference scans shared by the test binaries.
// The oracles index sequences position by position and never call the
// library's decision procedures.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "itin/backward.hpp"
#include "itin/forward.hpp"
#include "itin/literal.hpp"

namespace testsupport {

using itin::BackSeq;
using itin::ForwardSeq;
using itin::KneadingSeq;
using itin::Symbol;
using itin::Word;

inline const std::vector<std::string>& small_taus() {
  static const std::vector<std::string> v = {"(*12)#",   "(*122)#",  "(*112)#",  "(*1222)#", "(*1221)#",
                                             "(*1211)#", "(*1122)#", "(*1121)#", "(*1112)#", "(*1212)#"};
  return v;
}

inline std::vector<KneadingSeq> small_kneading() {
  std::vector<KneadingSeq> out;
  for (const auto& s : small_taus()) out.push_back(itin::parse_kneading(s));
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::size_t range(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Word word(std::size_t len, double star_p = 0.0) {
    Word w(len);
    for (auto& s : w) s = coin(star_p) ? Symbol::Star : (coin() ? Symbol::One : Symbol::Two);
    return w;
  }

  ForwardSeq forward(std::size_t max_prefix = 8, std::size_t max_period = 6, double star_p = 0.0) {
    return ForwardSeq(word(range(0, max_prefix), star_p), word(range(1, max_period), star_p));
  }

  BackSeq back(std::size_t max_suffix = 8, std::size_t max_period = 6, double star_p = 0.0) {
    return BackSeq(word(range(1, max_period), star_p), word(range(0, max_suffix), star_p));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[range(0, v.size() - 1)];
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Value at position i of an eventually periodic forward sequence, read off
// the raw prefix/period words.
inline Symbol fwd_at(const ForwardSeq& x, std::size_t i) {
  const Word& pre = x.prefix();
  const Word& per = x.period();
  return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
}

// Value at depth j (position −j) of a backward sequence.
inline Symbol back_at(const BackSeq& e, std::size_t j) {
  const Word& suf = e.suffix();
  const Word& per = e.period();
  if (j <= suf.size()) return suf[suf.size() - j];
  const std::size_t m = (j - suf.size()) % per.size();
  return per[(per.size() - m) % per.size()];
}

inline bool sym_approx(Symbol a, Symbol b) { return a == b || a == Symbol::Star || b == Symbol::Star; }

inline std::size_t naive_first_discrepancy(const ForwardSeq& x, const ForwardSeq& y, std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i)
    if (!sym_approx(fwd_at(x, i), fwd_at(y, i))) return i;
  return itin::kInfinity;
}

inline bool naive_tail_equals_tau(const ForwardSeq& x, std::size_t n, const KneadingSeq& tau, std::size_t depth) {
  const Word& t = tau.seq().period();
  for (std::size_t m = 0; m < depth; ++m)
    if (fwd_at(x, n + m) != t[m % t.size()]) return false;
  return true;
}

inline bool naive_tail_approx_tau(const ForwardSeq& x, std::size_t n, const KneadingSeq& tau, std::size_t depth) {
  const Word& t = tau.seq().period();
  for (std::size_t m = 0; m < depth; ++m)
    if (!sym_approx(fwd_at(x, n + m), t[m % t.size()])) return false;
  return true;
}

inline std::size_t scan_depth(const ForwardSeq& x, const KneadingSeq& tau) {
  return 4 * (x.prefix().size() + std::lcm(x.period().size(), tau.period()));
}

inline bool naive_admissible(const ForwardSeq& x, const KneadingSeq& tau) {
  const std::size_t depth = scan_depth(x, tau);
  for (std::size_t n = 0; n < depth; ++n) {
    const bool eq = naive_tail_equals_tau(x, n, tau, depth);
    if (fwd_at(x, n) == Symbol::Star && !eq) return false;
    if (naive_tail_approx_tau(x, n, tau, depth) && !eq) return false;
  }
  return true;
}

inline bool naive_acceptable(const ForwardSeq& t) {
  const Word& p = t.period();
  const std::size_t depth = 4 * p.size();
  for (std::size_t s = 1; s < p.size(); ++s) {
    bool all = true;
    for (std::size_t i = 0; i < depth && all; ++i) all = sym_approx(p[(s + i) % p.size()], p[i % p.size()]);
    if (all) return false;
  }
  return true;
}

// β by direct comparison of e_{−k}…e_{−1} with τ_0…τ_{k−1} for each k ≤ limit.
// Returns 0 for undefined and limit+1 when the deepest candidate k ≤ limit
// in the residue class still matches.
inline std::size_t naive_beta(const BackSeq& e, std::size_t residue, const KneadingSeq& tau, std::size_t limit = 200) {
  const Word& t = tau.seq().period();
  const std::size_t n = t.size();
  std::size_t best = 0;
  std::size_t last_candidate = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (k % n != residue) continue;
    last_candidate = k;
    bool ok = true;
    for (std::size_t m = 0; m < k && ok; ++m) ok = sym_approx(back_at(e, k - m), t[m % n]);
    if (ok) best = k;
  }
  return best == last_candidate && best != 0 ? limit + 1 : best;
}

// Arc-component test straight from the definition: list the discrepancies up
// to a depth covering several joint tail periods, and check that beyond the
// eventual regime they share a residue with τ-blocks between consecutive ones.
inline bool naive_same_arc(const BackSeq& e, const BackSeq& f, const KneadingSeq& tau) {
  const std::size_t n = tau.period();
  const std::size_t t0 = std::max(e.suffix().size(), f.suffix().size());
  const std::size_t l = std::lcm(std::lcm(e.period().size(), f.period().size()), n);
  const std::size_t depth = t0 + 3 * l;
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= depth; ++k)
    if (back_at(e, k) != back_at(f, k)) ks.push_back(k);
  std::vector<std::size_t> tail;
  for (std::size_t k : ks)
    if (k > t0 + l) tail.push_back(k);
  if (tail.empty()) return true;
  const Word& t = tau.seq().period();
  for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
    const std::size_t a = tail[i], b = tail[i + 1];
    if ((b - a) % n != 0) return false;
    // Block x_{−b}…x_{−(a+1)} read left to right against (τ_0…τ_{N−1})^{(b−a)/N}.
    for (std::size_t m = 0; m < b - a; ++m) {
      const std::size_t depth_m = b - m;
      if (!sym_approx(back_at(e, depth_m), t[m % n]) || !sym_approx(back_at(f, depth_m), t[m % n])) return false;
    }
  }
  return true;
}

}  // namespace testsupport

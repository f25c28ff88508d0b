#include "itin/backward.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "itin/error.hpp"

namespace itin {

BackSeq::BackSeq(Word period, Word suffix) : period_(std::move(period)), suffix_(std::move(suffix)) {
  if (period_.empty()) throw Error(ErrorKind::EmptyPeriod, "period must be nonempty");
  period_ = primitive_root(period_);
  // p0…p_{m−1} followed by p0 is the same tail as (p1…p_{m−1}p0)^∞.
  std::size_t drop = 0;
  while (drop < suffix_.size() && suffix_[drop] == period_.front()) {
    ++drop;
    std::rotate(period_.begin(), period_.begin() + 1, period_.end());
  }
  suffix_.erase(suffix_.begin(), suffix_.begin() + static_cast<std::ptrdiff_t>(drop));
}

BackSeq BackSeq::from_depths(std::size_t suffix_len, std::size_t period_len,
                             const std::function<Symbol(std::size_t)>& at) {
  Word suffix(suffix_len);
  Word period(period_len);
  for (std::size_t j = 1; j <= suffix_len; ++j) suffix[suffix_len - j] = at(j);
  for (std::size_t m = 1; m <= period_len; ++m) period[period_len - m] = at(suffix_len + m);
  return BackSeq(std::move(period), std::move(suffix));
}

BackSeq BackSeq::append(const Word& a) const {
  Word s = suffix_;
  s.insert(s.end(), a.begin(), a.end());
  return BackSeq(period_, std::move(s));
}

Word BackSeq::last(std::size_t n) const {
  Word w(n);
  for (std::size_t j = 1; j <= n; ++j) w[n - j] = at_depth(j);
  return w;
}

std::optional<Word> BackSeq::strip(const BackSeq& base, std::size_t n) const {
  Word a = last(n);
  if (base.append(a) != *this) return std::nullopt;
  return a;
}

// ---------------------------------------------------------------------------

DiscrepancySet::DiscrepancySet(std::vector<std::size_t> head, std::size_t threshold,
                               std::size_t modulus, std::vector<std::size_t> residues)
    : head_(std::move(head)),
      threshold_(std::max<std::size_t>(threshold, 1)),
      modulus_(std::max<std::size_t>(modulus, 1)),
      residues_(std::move(residues)) {
  normalize();
}

DiscrepancySet DiscrepancySet::finite(std::vector<std::size_t> elements) {
  std::size_t t = 1;
  for (std::size_t k : elements) t = std::max(t, k + 1);
  return DiscrepancySet(std::move(elements), t, 1, {});
}

void DiscrepancySet::normalize() {
  std::erase_if(head_, [&](std::size_t k) { return k == 0 || k >= threshold_; });
  std::sort(head_.begin(), head_.end());
  head_.erase(std::unique(head_.begin(), head_.end()), head_.end());
  for (auto& r : residues_) r %= modulus_;
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());

  if (residues_.empty()) {
    threshold_ = head_.empty() ? 1 : head_.back() + 1;
    modulus_ = 1;
    return;
  }

  for (std::size_t d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    const std::set<std::size_t> have(residues_.begin(), residues_.end());
    bool ok = true;
    for (std::size_t r = 0; r < modulus_ && ok; ++r) ok = have.contains(r) == have.contains(r % d);
    if (!ok) continue;
    std::vector<std::size_t> reduced;
    for (std::size_t r : residues_)
      if (r < d) reduced.push_back(r);
    residues_ = std::move(reduced);
    modulus_ = d;
    break;
  }

  auto in_tail = [&](std::size_t k) {
    return std::binary_search(residues_.begin(), residues_.end(), k % modulus_);
  };
  while (threshold_ > 1) {
    const std::size_t k = threshold_ - 1;
    const bool in_head = !head_.empty() && head_.back() == k;
    if (in_head != in_tail(k)) break;
    if (in_head) head_.pop_back();
    --threshold_;
  }
}

bool DiscrepancySet::contains(std::size_t k) const {
  if (k == 0) return false;
  if (k < threshold_) return std::binary_search(head_.begin(), head_.end(), k);
  return std::binary_search(residues_.begin(), residues_.end(), k % modulus_);
}

std::size_t DiscrepancySet::first() const {
  if (!head_.empty()) return head_.front();
  if (residues_.empty()) return kInfinity;
  for (std::size_t k = threshold_;; ++k)
    if (contains(k)) return k;
}

std::vector<std::size_t> DiscrepancySet::elements_upto(std::size_t bound) const {
  std::vector<std::size_t> out;
  for (std::size_t k : head_)
    if (k <= bound) out.push_back(k);
  if (!residues_.empty())
    for (std::size_t k = threshold_; k <= bound; ++k)
      if (contains(k)) out.push_back(k);
  return out;
}

std::optional<std::size_t> DiscrepancySet::common_residue(std::size_t n) const {
  std::set<std::size_t> seen;
  for (std::size_t k : head_) seen.insert(k % n);
  if (!residues_.empty()) {
    const std::size_t span = lcm(modulus_, n);
    for (std::size_t k = threshold_; k < threshold_ + span; ++k)
      if (contains(k)) seen.insert(k % n);
  }
  if (seen.size() != 1) return std::nullopt;
  return *seen.begin();
}

// ---------------------------------------------------------------------------

namespace {

void check_residue(std::size_t residue, const KneadingSeq& tau) {
  if (residue >= tau.period())
    throw Error(ErrorKind::InvalidArgument, "residue " + std::to_string(residue) + " is not below N = " +
                                                std::to_string(tau.period()));
}

Symbol tau_at_depth(const KneadingSeq& tau, std::size_t residue, std::size_t j) {
  return tau.at_residue(static_cast<std::ptrdiff_t>(residue) - static_cast<std::ptrdiff_t>(j));
}

}  // namespace

DiscrepancySet discrepancies(const BackSeq& e, const BackSeq& f) {
  const std::size_t t0 = std::max(e.suffix().size(), f.suffix().size());
  const std::size_t l = lcm(e.period().size(), f.period().size());
  std::vector<std::size_t> head;
  std::vector<std::size_t> residues;
  for (std::size_t k = 1; k <= t0; ++k)
    if (e.at_depth(k) != f.at_depth(k)) head.push_back(k);
  for (std::size_t k = t0 + 1; k <= t0 + l; ++k)
    if (e.at_depth(k) != f.at_depth(k)) residues.push_back(k % l);
  return DiscrepancySet(std::move(head), t0 + 1, l, std::move(residues));
}

std::size_t match_depth(const BackSeq& e, std::size_t residue, const KneadingSeq& tau) {
  check_residue(residue, tau);
  const std::size_t n = tau.period();
  const std::size_t bound = e.suffix().size() + lcm(e.period().size(), n) + n;
  for (std::size_t j = 1; j <= bound; ++j)
    if (!approx(e.at_depth(j), tau_at_depth(tau, residue, j))) return j - 1;
  return kInfinity;
}

BetaResult beta(const BackSeq& e, std::size_t residue, const KneadingSeq& tau) {
  const std::size_t k = match_depth(e, residue, tau);
  if (k == kInfinity) return BetaResult::infinite();
  const std::size_t n = tau.period();
  const std::size_t back = (k + n - residue % n) % n;
  if (back >= k) return BetaResult::undefined();
  return BetaResult::finite(k - back);
}

BiSeq boundary_point(const BackSeq& e, std::size_t residue, const KneadingSeq& tau) {
  const BetaResult b = beta(e, residue, tau);
  if (!b.defined())
    throw Error(ErrorKind::BetaUndefined, "beta^" + std::to_string(residue) + "(" + to_string(e) + ") is undefined");
  ForwardSeq fwd = shift(tau.seq(), residue);
  if (b.is_infinite())
    return {BackSeq::from_depths(0, tau.period(), [&](std::size_t j) { return tau_at_depth(tau, residue, j); }),
            std::move(fwd)};
  const std::size_t depth = std::max(b.value, e.suffix().size());
  BackSeq back = BackSeq::from_depths(depth, e.period().size(), [&](std::size_t j) {
    return j <= b.value ? tau_at_depth(tau, residue, j) : e.at_depth(j);
  });
  return {std::move(back), std::move(fwd)};
}

BackSeq fold_apply(const BackSeq& e, std::size_t residue, const FlipChoice& flips, const KneadingSeq& tau) {
  const BetaResult b = beta(e, residue, tau);
  if (!b.defined())
    throw Error(ErrorKind::BetaUndefined, "beta^" + std::to_string(residue) + "(" + to_string(e) + ") is undefined");
  const std::size_t n = tau.period();
  const std::size_t s = e.suffix().size();
  auto star_check = [&](std::size_t j) {
    if (e.at_depth(j) == Symbol::Star)
      throw Error(ErrorKind::StarInSequence, "cannot flip * at position -" + std::to_string(j));
  };

  if (flips.all && b.is_infinite()) {
    const std::size_t l = lcm(e.period().size(), n);
    for (std::size_t j = 1; j <= s + l; ++j)
      if (j % n == residue) star_check(j);
    return BackSeq::from_depths(s, l, [&](std::size_t j) {
      return j % n == residue ? complement(e.at_depth(j)) : e.at_depth(j);
    });
  }

  std::set<std::size_t> chosen;
  if (flips.all) {
    for (std::size_t j = residue == 0 ? n : residue; j <= b.value; j += n) chosen.insert(j);
  } else {
    if (flips.depths.empty()) throw Error(ErrorKind::EmptyFlip, "flip set is empty");
    for (std::size_t j : flips.depths) {
      if (j == 0 || j % n != residue || (b.is_finite() && j > b.value))
        throw Error(ErrorKind::FlipOutOfRange,
                    "position -" + std::to_string(j) + " is outside residue " + std::to_string(residue) +
                        " up to beta = " + to_string(b));
      chosen.insert(j);
    }
  }
  for (std::size_t j : chosen) star_check(j);
  const std::size_t depth = std::max(s, *chosen.rbegin());
  return BackSeq::from_depths(depth, e.period().size(), [&](std::size_t j) {
    return chosen.contains(j) ? complement(e.at_depth(j)) : e.at_depth(j);
  });
}

bool same_arc_component(const BackSeq& e, const BackSeq& f, const KneadingSeq& tau) {
  const DiscrepancySet d = discrepancies(e, f);
  if (d.is_finite()) return true;
  const std::size_t n = tau.period();
  const std::size_t t0 = std::max(e.suffix().size(), f.suffix().size());
  const std::size_t l = lcm(lcm(e.period().size(), f.period().size()), n);
  std::optional<std::size_t> r;
  for (std::size_t k = t0 + 1; k <= t0 + l; ++k) {
    if (!d.contains(k)) continue;
    if (r && *r != k % n) return false;
    r = k % n;
  }
  for (std::size_t j = t0 + 1; j <= t0 + l; ++j) {
    const Symbol t = tau_at_depth(tau, *r, j);
    if (!approx(e.at_depth(j), t) || !approx(f.at_depth(j), t)) return false;
  }
  return true;
}

ForwardSeq project(const BiSeq& p, std::ptrdiff_t n) {
  if (n >= 0) return shift(p.fwd, static_cast<std::size_t>(n));
  Word prefix = p.back.last(static_cast<std::size_t>(-n));
  prefix.insert(prefix.end(), p.fwd.prefix().begin(), p.fwd.prefix().end());
  return ForwardSeq(std::move(prefix), p.fwd.period());
}

bool biseq_admissible(const BiSeq& p, const KneadingSeq& tau) {
  // Past depth |suffix| + 2·lcm the backward part is periodic and any tail
  // check there repeats one made closer to the origin.
  const std::size_t l = lcm(p.back.period().size(), tau.period());
  const std::size_t w = p.back.suffix().size() + 2 * l;
  return is_admissible(project(p, -static_cast<std::ptrdiff_t>(w)), tau);
}

bool in_cylinder(const BiSeq& p, const BackSeq& e, std::ptrdiff_t n) {
  if (n >= 0) throw Error(ErrorKind::InvalidArgument, "cylinder index must be negative");
  const std::size_t from = static_cast<std::size_t>(-n);
  const std::size_t span = std::max(p.back.suffix().size(), e.suffix().size()) +
                           lcm(p.back.period().size(), e.period().size());
  for (std::size_t j = from; j < from + span; ++j)
    if (!approx(p.back.at_depth(j), e.at_depth(j))) return false;
  return true;
}

std::string to_string(const BackSeq& e) {
  return "#(" + to_string(e.period()) + ")" + to_string(e.suffix());
}

std::string to_string(const BiSeq& p) { return to_string(p.back) + "." + to_string(p.fwd); }

std::string to_string(const DiscrepancySet& d) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < d.head().size(); ++i) out << (i ? "," : "") << d.head()[i];
  if (!d.is_finite()) {
    if (!d.head().empty()) out << ',';
    out << "k>=" << d.threshold() << ":k%" << d.modulus() << " in [";
    for (std::size_t i = 0; i < d.residues().size(); ++i) out << (i ? "," : "") << d.residues()[i];
    out << ']';
  }
  out << '}';
  return out.str();
}

std::string to_string(const BetaResult& b) {
  switch (b.kind) {
    case BetaResult::Kind::Undefined: return "undefined";
    case BetaResult::Kind::Infinite: return "inf";
    case BetaResult::Kind::Finite: break;
  }
  return std::to_string(b.value);
}

std::string to_string(const FlipChoice& f) {
  if (f.all) return "ALL";
  std::string out = "[";
  for (std::size_t i = 0; i < f.depths.size(); ++i)
    out += (i ? "," : "") + std::string("-") + std::to_string(f.depths[i]);
  return out + "]";
}

}  // namespace itin

#include "itin/forward.hpp"

#include <algorithm>
#include <utility>

#include "itin/error.hpp"

namespace itin {

ForwardSeq::ForwardSeq(Word prefix, Word period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::EmptyPeriod, "period must be nonempty");
  period_ = primitive_root(period_);
  // prefix·p0…p_{m−1} ending in p_{m−1} equals prefix'·(p_{m−1}p0…p_{m−2})^∞
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
  }
}

ForwardSeq ForwardSeq::from_positions(std::size_t prefix_len, std::size_t period_len,
                                      const std::function<Symbol(std::size_t)>& at) {
  Word prefix(prefix_len);
  Word period(period_len);
  for (std::size_t i = 0; i < prefix_len; ++i) prefix[i] = at(i);
  for (std::size_t i = 0; i < period_len; ++i) period[i] = at(prefix_len + i);
  return ForwardSeq(std::move(prefix), std::move(period));
}

KneadingSeq::KneadingSeq(ForwardSeq seq) : seq_(std::move(seq)) {
  const Word& p = seq_.period();
  if (!seq_.purely_periodic())
    throw Error(ErrorKind::InvalidKneading, "kneading sequence must be purely periodic");
  if (p.size() < 2 || p[0] != Symbol::Star || p[1] != Symbol::One)
    throw Error(ErrorKind::InvalidKneading, "kneading sequence must begin *1");
  if (std::find(p.begin() + 1, p.end(), Symbol::Star) != p.end())
    throw Error(ErrorKind::InvalidKneading, "kneading sequence has a second * per period");
  if (!is_acceptable(seq_))
    throw Error(ErrorKind::InvalidKneading, to_string(seq_) + " is not acceptable");
}

namespace {

std::size_t joint_bound(const ForwardSeq& x, const ForwardSeq& y) {
  return std::max(x.prefix().size(), y.prefix().size()) +
         lcm(x.period().size(), y.period().size());
}

}  // namespace

bool approx(const ForwardSeq& x, const ForwardSeq& y) {
  return first_discrepancy(x, y) == kInfinity;
}

ForwardSeq shift(const ForwardSeq& x, std::size_t n) {
  const Word& pre = x.prefix();
  const Word& per = x.period();
  if (n <= pre.size()) return ForwardSeq(Word(pre.begin() + static_cast<std::ptrdiff_t>(n), pre.end()), per);
  const std::size_t r = (n - pre.size()) % per.size();
  Word rotated(per.size());
  for (std::size_t i = 0; i < per.size(); ++i) rotated[i] = per[(r + i) % per.size()];
  return ForwardSeq::periodic(std::move(rotated));
}

std::size_t first_discrepancy(const ForwardSeq& x, const ForwardSeq& y) {
  const std::size_t bound = joint_bound(x, y);
  for (std::size_t i = 0; i < bound; ++i)
    if (!approx(x[i], y[i])) return i;
  return kInfinity;
}

bool is_acceptable(const ForwardSeq& t) {
  if (!t.purely_periodic())
    throw Error(ErrorKind::NotPurelyPeriodic, "acceptability is defined for purely periodic sequences");
  const std::size_t n = t.period().size();
  for (std::size_t s = 1; s < n; ++s)
    if (approx(shift(t, s), t)) return false;
  return true;
}

bool is_admissible(const ForwardSeq& x, const KneadingSeq& tau) {
  const std::size_t bound = x.prefix().size() + lcm(x.period().size(), tau.period());
  for (std::size_t n = 0; n < bound; ++n) {
    const ForwardSeq tail = shift(x, n);
    if (tail == tau.seq()) continue;
    if (x[n] == Symbol::Star || approx(tail, tau.seq())) return false;
  }
  return true;
}

ForwardSeq mu_point(const ForwardSeq& x, const ForwardSeq& y, const KneadingSeq& tau) {
  if (x == y) throw Error(ErrorKind::EqualInputs, "mu_point needs distinct inputs");
  if (!is_admissible(x, tau) || !is_admissible(y, tau))
    throw Error(ErrorKind::InadmissibleInput, "mu_point inputs must be admissible");
  const std::size_t n = first_discrepancy(x, y);
  if (n == kInfinity)
    throw Error(ErrorKind::InadmissibleInput, "distinct inputs with x ≈ y cannot both be admissible");

  Word head(n);
  for (std::size_t i = 0; i < n; ++i) head[i] = x[i] != Symbol::Star ? x[i] : y[i];
  const Word& period = tau.seq().period();
  ForwardSeq mu(head, period);
  if (!is_admissible(mu, tau))
    throw Error(ErrorKind::AdmissibilityViolation, "constructed point " + to_string(mu) + " is not admissible");
  return mu;
}

std::string to_string(const ForwardSeq& x) {
  return to_string(x.prefix()) + "(" + to_string(x.period()) + ")#";
}

}  // namespace itin

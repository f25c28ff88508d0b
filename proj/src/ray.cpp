#include "itin/ray.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "itin/error.hpp"

namespace itin {

RayTrace schedule_apply(const FoldSchedule& s) {
  if (s.start.has_star())
    throw Error(ErrorKind::StarInSequence, "ray start " + to_string(s.start) + " contains *");
  RayTrace out;
  out.itineraries.push_back(s.start);
  std::set<BackSeq> seen{s.start};
  for (std::size_t step = 1; step <= s.folds.size(); ++step) {
    const FoldSpec& f = s.folds[step - 1];
    const BackSeq& cur = out.itineraries.back();
    BackSeq next = cur;
    try {
      next = fold_apply(cur, f.residue, f.flips, s.tau);
    } catch (const Error& e) {
      throw IllegalFoldError(step, e.kind(), e.what());
    }
    if (!seen.insert(next).second)
      throw IllegalFoldError(step, ErrorKind::Revisit, to_string(next) + " was already visited");
    out.alphas.push_back(discrepancies(cur, next));
    out.itineraries.push_back(std::move(next));
  }
  return out;
}

std::size_t c_class(const DiscrepancySet& a, std::size_t n) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "C is undefined for an empty set");
  const auto r = a.common_residue(n);
  if (!r) throw Error(ErrorKind::MixedResidues, to_string(a) + " mixes residues mod " + std::to_string(n));
  return *r;
}

std::size_t first_back_discrepancy(const BackSeq& e, const BackSeq& f) { return discrepancies(e, f).first(); }

// ---------------------------------------------------------------------------

Word v_block(std::size_t w, const KneadingSeq& tau, const Word& fill) {
  if (fill.empty() || has_star(fill)) throw Error(ErrorKind::BadFill, "fill must be a nonempty word over {1,2}");
  Word v(w);
  std::size_t stars = 0;
  for (std::size_t t = 0; t < w; ++t) {
    const Symbol s = tau[t + 1];
    v[t] = s == Symbol::Star ? fill[stars++ % fill.size()] : s;
  }
  return v;
}

namespace {

// Windows of depths 1..w packed into bits: bit j−1 set iff depth j holds 2.
using Window = std::uint64_t;

Window pack(const Word& display) {
  Window m = 0;
  const std::size_t w = display.size();
  for (std::size_t j = 1; j <= w; ++j)
    if (display[w - j] == Symbol::Two) m |= Window{1} << (j - 1);
  return m;
}

// Breadth-first search over windows. A move flips depth p once depths
// 1..p−1 match τ aligned at residue p, together with any subset of the star
// slots below p; moves are tried by p, then by subset, so the path found is
// the first shortest one in that order.
std::vector<FoldSpec> shortest_transport(Window from, Window to, std::size_t w, const KneadingSeq& tau,
                                         const std::unordered_set<Window>& blocked) {
  const std::size_t n = tau.period();
  struct Step {
    Window prev;
    std::size_t p;
    Window slots;
  };
  std::unordered_map<Window, Step> seen{{from, {from, 0, 0}}};
  for (Window b : blocked)
    if (b != from) seen.emplace(b, Step{b, 0, 0});
  if (from == to) return {};
  if (blocked.count(to)) throw Error(ErrorKind::InvalidArgument, "transport target was already visited");
  std::deque<Window> queue{from};
  while (!queue.empty() && !seen.count(to)) {
    const Window s = queue.front();
    queue.pop_front();
    for (std::size_t p = 1; p <= w; ++p) {
      bool aligned = true;
      for (std::size_t j = 1; j < p && aligned; ++j)
        aligned = approx((s >> (j - 1)) & 1 ? Symbol::Two : Symbol::One, tau[(p - j) % n]);
      if (!aligned) continue;
      std::vector<std::size_t> slots;
      for (std::size_t j = p % n == 0 ? n : p % n; j < p; j += n) slots.push_back(j);
      for (Window m = 0; m < (Window{1} << slots.size()); ++m) {
        Window mask = 0;
        for (std::size_t b = 0; b < slots.size(); ++b)
          if ((m >> b) & 1) mask |= Window{1} << (slots[b] - 1);
        const Window t = s ^ mask ^ (Window{1} << (p - 1));
        if (seen.emplace(t, Step{s, p, mask}).second) queue.push_back(t);
      }
    }
  }
  if (!seen.count(to)) throw Error(ErrorKind::InvalidArgument, "transport target is unreachable");
  std::vector<FoldSpec> out;
  for (Window s = to; s != from;) {
    const Step& st = seen.at(s);
    std::vector<std::size_t> flips{st.p};
    for (std::size_t j = 1; j < st.p; ++j)
      if ((st.slots >> (j - 1)) & 1) flips.push_back(j);
    std::sort(flips.begin(), flips.end());
    out.push_back({st.p % n, FlipChoice::at(std::move(flips))});
    s = st.prev;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Windows of earlier states that agree with cur below depth w; stepping onto
// one of them would revisit that state.
void block_visited(const BackSeq& cur, const std::vector<BackSeq>& visited, std::size_t w,
                   std::unordered_set<Window>& out) {
  for (const BackSeq& v : visited) {
    const DiscrepancySet d = discrepancies(v, cur);
    if (d.is_finite() && (d.empty() || d.head().back() <= w)) out.insert(pack(v.last(w)));
  }
}

std::vector<FoldSpec> window_transport(const BackSeq& e, const Word& target, const KneadingSeq& tau,
                                       const std::unordered_set<Window>& blocked) {
  if (has_star(target)) throw Error(ErrorKind::StarInSequence, "transport target contains *");
  const std::size_t w = target.size();
  if (w >= 64) throw Error(ErrorKind::InvalidArgument, "transport window too wide");
  return shortest_transport(pack(e.last(w)), pack(target), w, tau, blocked);
}

BackSeq apply_or_throw(const BackSeq& e, const FoldSpec& f, const KneadingSeq& tau, std::size_t step) {
  try {
    return fold_apply(e, f.residue, f.flips, tau);
  } catch (const Error& err) {
    throw IllegalFoldError(step, err.kind(), err.what());
  }
}

}  // namespace

std::vector<FoldSpec> transport(const BackSeq& e, const Word& target, const KneadingSeq& tau,
                                const std::vector<BackSeq>& avoid) {
  std::unordered_set<Window> blocked;
  block_visited(e, avoid, target.size(), blocked);
  return window_transport(e, target, tau, blocked);
}

PairedFolds run_cycle(BackSeq& e, BackSeq& f, std::size_t shift, const std::vector<DeepPair>& pairs,
                      const Word& fill, const KneadingSeq& tau, RayHistory* history) {
  const std::size_t n = tau.period();
  RayHistory local;
  RayHistory& h = history ? *history : local;
  if (h.e.empty()) h.e.push_back(e);
  if (h.f.empty()) h.f.push_back(f);
  auto record = [&h](const BackSeq& x, const BackSeq& y) {
    h.e.push_back(x);
    h.f.push_back(y);
    if (h.max_states && h.e.size() > h.max_states)
      throw Error(ErrorKind::FoldBudget, "fold budget of " + std::to_string(h.max_states - 1) + " exceeded");
  };
  PairedFolds out;
  std::size_t step = 0;
  for (const DeepPair& dp : pairs) {
    const std::size_t w = shift + std::min(dp.e_depth, dp.f_depth) - 1;
    if (w > 0) {
      if (first_back_discrepancy(e, f) <= w)
        throw Error(ErrorKind::InvalidArgument, "transport window " + std::to_string(w) +
                                                    " reaches the first discrepancy of the pair");
      std::unordered_set<Window> blocked;
      block_visited(e, h.e, w, blocked);
      block_visited(f, h.f, w, blocked);
      for (const FoldSpec& fs : window_transport(e, v_block(w, tau, fill), tau, blocked)) {
        ++step;
        e = apply_or_throw(e, fs, tau, step);
        f = apply_or_throw(f, fs, tau, step);
        record(e, f);
        out.e.push_back(fs);
        out.f.push_back(fs);
      }
    }
    const std::size_t pe = shift + dp.e_depth, pf = shift + dp.f_depth;
    const FoldSpec fe{pe % n, FlipChoice::at({pe})}, ff{pf % n, FlipChoice::at({pf})};
    ++step;
    e = apply_or_throw(e, fe, tau, step);
    f = apply_or_throw(f, ff, tau, step);
    record(e, f);
    out.e.push_back(fe);
    out.f.push_back(ff);
  }
  return out;
}

std::vector<FoldSpec> run_cycle_single(BackSeq& e, std::size_t shift, const std::vector<DeepPair>& pairs,
                                       const Word& fill, const KneadingSeq& tau, std::vector<BackSeq>* history) {
  const std::size_t n = tau.period();
  std::vector<BackSeq> local;
  std::vector<BackSeq>& h = history ? *history : local;
  if (h.empty()) h.push_back(e);
  std::vector<FoldSpec> out;
  for (const DeepPair& dp : pairs) {
    const std::size_t w = shift + std::min(dp.e_depth, dp.f_depth) - 1;
    if (w > 0)
      for (const FoldSpec& fs : transport(e, v_block(w, tau, fill), tau, h)) {
        e = apply_or_throw(e, fs, tau, out.size() + 1);
        h.push_back(e);
        out.push_back(fs);
      }
    const std::size_t pe = shift + dp.e_depth;
    const FoldSpec fe{pe % n, FlipChoice::at({pe})};
    e = apply_or_throw(e, fe, tau, out.size() + 1);
    h.push_back(e);
    out.push_back(fe);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Word> common_append(const BackSeq& e0, const BackSeq& en, const BackSeq& f0, const BackSeq& fn) {
  const std::size_t bound = std::max(en.suffix().size() + e0.period().size(), fn.suffix().size() + f0.period().size()) +
                            lcm(e0.period().size(), f0.period().size());
  for (std::size_t m = 0; m <= bound; ++m) {
    auto a = en.strip(e0, m);
    if (a && f0.append(*a) == fn) return a;
  }
  return std::nullopt;
}

namespace {

struct Boundary {
  std::size_t n;
  Word a;
};

std::vector<Boundary> find_boundaries(const RayTrace& ra, const RayTrace& rb, std::size_t len) {
  std::vector<Boundary> out;
  for (std::size_t n = 0; n <= len; ++n)
    if (auto a = common_append(ra.itineraries[0], ra.itineraries[n], rb.itineraries[0], rb.itineraries[n]))
      out.push_back({n, std::move(*a)});
  return out;
}

bool classes_match(const DiscrepancySet& x, const DiscrepancySet& y, std::size_t n) {
  try {
    return c_class(x, n) == c_class(y, n);
  } catch (const Error&) {
    return false;
  }
}

std::optional<SelfSimilarCertificate> try_window(const FoldSchedule& a, const FoldSchedule& b, const RayTrace& ra,
                                                 const RayTrace& rb, const std::vector<Boundary>& bounds,
                                                 std::size_t i0, std::size_t i1, const CycleModel& given) {
  const KneadingSeq& tau = a.tau;
  const std::size_t n = tau.period();
  const Boundary& b0 = bounds[i0];
  const Boundary& b1 = bounds[i1];
  const std::size_t s0 = b0.a.size(), s1 = b1.a.size();
  if (s1 <= s0) return std::nullopt;

  SelfSimilarCertificate cert;
  cert.n0 = b0.n;
  cert.n1 = b1.n;
  cert.a0 = b0.a;
  cert.a1 = b1.a;
  cert.d0 = first_back_discrepancy(ra.itineraries[b0.n], rb.itineraries[b0.n]);
  cert.d1 = first_back_discrepancy(ra.itineraries[b1.n], rb.itineraries[b1.n]);
  if (cert.d1 == kInfinity || cert.d1 < cert.d0 + n) return std::nullopt;

  // Steps where the two rays fold differently; with no model they must be
  // single flips of one residue, and every shared step must stay above d.
  for (std::size_t t = b0.n; t < b1.n; ++t) {
    const FoldSpec& fa = a.folds[t];
    const FoldSpec& fb = b.folds[t];
    if (fa == fb) {
      if (given) continue;
      if (fa.flips.all) return std::nullopt;
      const std::size_t d = first_back_discrepancy(ra.itineraries[t], rb.itineraries[t]);
      if (*std::max_element(fa.flips.depths.begin(), fa.flips.depths.end()) >= d) return std::nullopt;
      continue;
    }
    const bool single = !fa.flips.all && !fb.flips.all && fa.flips.depths.size() == 1 && fb.flips.depths.size() == 1;
    if (!single || fa.residue != fb.residue || fa.flips.depths[0] <= s0 || fb.flips.depths[0] <= s0) {
      if (given) continue;
      return std::nullopt;
    }
    cert.deep.push_back({fa.flips.depths[0] - s0, fb.flips.depths[0] - s0});
  }
  if (cert.deep.empty()) return std::nullopt;

  const std::vector<DeepPair> deep = cert.deep;
  const Word fill = a.fill;
  const CycleModel model = given ? given : CycleModel([&deep, &fill, &tau](const BackSeq& e, const BackSeq& f,
                                                                           std::size_t shift) {
    BackSeq x = e, y = f;
    return run_cycle(x, y, shift, deep, fill, tau);
  });

  try {
    // The window must be what the model generates from its own start.
    const PairedFolds again = model(ra.itineraries[b0.n], rb.itineraries[b0.n], s0);
    const RayTrace wa = schedule_apply({ra.itineraries[b0.n], again.e, tau, a.fill});
    const RayTrace wb = schedule_apply({rb.itineraries[b0.n], again.f, tau, b.fill});
    if (wa.itineraries.back() != ra.itineraries[b1.n] || wb.itineraries.back() != rb.itineraries[b1.n])
      return std::nullopt;

    // One further cycle from the end of the window, shifted by |a1|.
    const PairedFolds next = model(ra.itineraries[b1.n], rb.itineraries[b1.n], s1);
    if (next.e.size() != next.f.size()) return std::nullopt;
    const RayTrace ta = schedule_apply({ra.itineraries[b1.n], next.e, tau, a.fill});
    const RayTrace tb = schedule_apply({rb.itineraries[b1.n], next.f, tau, b.fill});
    for (std::size_t k = 0; k < ta.alphas.size(); ++k)
      if (!classes_match(ta.alphas[k], tb.alphas[k], n)) return std::nullopt;
    const BackSeq& e = ta.itineraries.back();
    const BackSeq& f = tb.itineraries.back();
    auto a2 = common_append(ra.itineraries[0], e, rb.itineraries[0], f);
    if (!a2 || a2->size() <= s1 || a2->size() - s1 != s1 - s0) return std::nullopt;
    cert.a2 = std::move(*a2);
    cert.d2 = first_back_discrepancy(e, f);
    cert.replay_folds = next.e.size();
    if (cert.d2 == kInfinity || cert.d2 < cert.d1 + n) return std::nullopt;

    const std::size_t n2 = b1.n + next.e.size();
    if (n2 < ra.itineraries.size() && n2 < rb.itineraries.size()) {
      cert.next_window_matches = ra.itineraries[n2] == e && rb.itineraries[n2] == f;
      if (!*cert.next_window_matches) return std::nullopt;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return cert;
}

}  // namespace

std::optional<SelfSimilarCertificate> certify_self_similar(const FoldSchedule& a, const FoldSchedule& b,
                                                           const CycleModel& model) {
  const RayTrace ra = schedule_apply(a);
  const RayTrace rb = schedule_apply(b);
  const std::size_t len = std::min(a.folds.size(), b.folds.size());
  const std::vector<Boundary> bounds = find_boundaries(ra, rb, len);
  for (std::size_t i0 = 0; i0 < bounds.size(); ++i0)
    for (std::size_t i1 = i0 + 1; i1 < bounds.size(); ++i1)
      if (auto c = try_window(a, b, ra, rb, bounds, i0, i1, model)) return c;
  return std::nullopt;
}

AsymptoticReport check_asymptotic(const FoldSchedule& a, const FoldSchedule& b, const CycleModel& model) {
  if (a.folds.size() != b.folds.size())
    throw Error(ErrorKind::HorizonMismatch, "schedules have " + std::to_string(a.folds.size()) + " and " +
                                                std::to_string(b.folds.size()) + " folds");
  if (a.tau != b.tau) throw Error(ErrorKind::TauMismatch, "schedules use different kneading sequences");
  const std::size_t n = a.tau.period();
  const RayTrace ra = schedule_apply(a);
  const RayTrace rb = schedule_apply(b);

  AsymptoticReport r;
  r.horizon = a.folds.size();
  for (std::size_t k = 0; k < r.horizon; ++k) r.c_matched.push_back(classes_match(ra.alphas[k], rb.alphas[k], n));
  for (std::size_t k = 0; k <= r.horizon; ++k)
    r.d_values.push_back(first_back_discrepancy(ra.itineraries[k], rb.itineraries[k]));
  r.identical = std::all_of(r.d_values.begin(), r.d_values.end(), [](std::size_t d) { return d == kInfinity; });

  // Cycle ends are the boundaries where the common appended word grows; d is
  // compared across those only, since a cycle may pass shorter shifted copies.
  std::size_t record = 0;
  for (const Boundary& bd : find_boundaries(ra, rb, r.horizon)) {
    r.boundaries.push_back(bd.n);
    if (bd.n == 0 || bd.a.size() > record) {
      record = bd.a.size();
      r.cycle_boundaries.push_back(bd.n);
    }
  }
  r.d_increasing = r.cycle_boundaries.size() >= 2;
  for (std::size_t i = 1; i < r.cycle_boundaries.size(); ++i)
    r.d_increasing = r.d_increasing && r.d_values[r.cycle_boundaries[i]] > r.d_values[r.cycle_boundaries[i - 1]];

  const bool matched = std::all_of(r.c_matched.begin(), r.c_matched.end(), [](bool x) { return x; });
  if (!r.identical) r.certificate = certify_self_similar(a, b, model);
  r.verdict = matched && (r.identical || (r.d_increasing && r.certificate.has_value()));
  return r;
}

std::string AsymptoticReport::status() const {
  if (verdict) return "certified";
  const bool matched = std::all_of(c_matched.begin(), c_matched.end(), [](bool x) { return x; });
  if (matched && d_increasing) return "suggestive";
  return "failed";
}

std::string to_string(const FoldSpec& f) {
  std::ostringstream out;
  out << "(" << f.residue << "," << to_string(f.flips) << ")";
  return out.str();
}

}  // namespace itin

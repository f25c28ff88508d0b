#include "itin/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "itin/error.hpp"

namespace itin {

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::Case1:
      return "case1";
    case TheoremCase::Case2:
      return "case2";
    default:
      return "case3";
  }
}

NuWord::NuWord(Word w, const KneadingSeq& tau) : word(std::move(w)) {
  const std::size_t n = tau.period();
  if (word.size() != n || has_star(word))
    throw Error(ErrorKind::InvalidArgument, "ν must be a star-free word of length " + std::to_string(n));
  for (std::size_t i = 1; i < n; ++i)
    if (word[i - 1] != tau[i]) throw Error(ErrorKind::InvalidArgument, "ν must agree with τ below N");
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

std::optional<KneadingSeq> candidate(std::size_t n, std::size_t code) {
  Word p{Symbol::Star, Symbol::One};
  for (std::size_t i = n - 2; i-- > 0;) p.push_back((code >> i) & 1u ? Symbol::Two : Symbol::One);
  ForwardSeq seq = ForwardSeq::periodic(std::move(p));
  if (seq.period().size() != n) return std::nullopt;
  try {
    return KneadingSeq(std::move(seq));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::size_t candidates(std::size_t n) { return std::size_t{1} << (n - 2); }

}  // namespace

std::vector<KneadingSeq> enumerate_kneading_serial(std::size_t max_n) {
  std::vector<KneadingSeq> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t c = 0; c < candidates(n); ++c)
      if (auto t = candidate(n, c)) out.push_back(std::move(*t));
  return out;
}

std::vector<KneadingSeq> enumerate_kneading(std::size_t max_n) {
  std::vector<KneadingSeq> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto total = static_cast<std::ptrdiff_t>(candidates(n));
    std::vector<std::optional<KneadingSeq>> slots(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t c = 0; c < total; ++c)
      slots[static_cast<std::size_t>(c)] = candidate(n, static_cast<std::size_t>(c));
    for (auto& s : slots)
      if (s) out.push_back(std::move(*s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hypotheses.

HypothesisReport scan_hypotheses(const KneadingSeq& tau) {
  const std::size_t n = tau.period();
  HypothesisReport r{tau, {}, false};
  Word base;
  for (std::size_t i = 1; i < n; ++i) base.push_back(tau[i]);

  std::vector<HypothesisEntry> c2, c3;
  for (std::size_t k = n / 2 + 1; k < n; ++k) {
    if (first_discrepancy(shift(tau.seq(), k), tau.seq()) < n - k) continue;
    Word nu = base;
    nu.push_back(base[n - k - 1]);
    c2.push_back({TheoremCase::Case2, k, nu});
    nu.back() = complement(nu.back());
    c3.push_back({TheoremCase::Case3, k, std::move(nu)});
  }
  r.entries = std::move(c2);
  r.entries.insert(r.entries.end(), c3.begin(), c3.end());

  r.case1 = n >= 3 && std::all_of(base.begin() + 1, base.end(), [](Symbol s) { return s == Symbol::Two; });
  return r;
}

bool selection_rule_holds(const Word& nu, std::size_t k, const KneadingSeq& tau) {
  const std::size_t n = nu.size();
  for (std::size_t j = 1; j <= n - k; ++j)
    if (nu[k + j - 1] != tau[j]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructions.

namespace {

Word repeat(Symbol s, std::size_t n) { return Word(n, s); }

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ν_i…ν_j, 1-based and inclusive; empty when j < i.
Word slice(const Word& nu, std::size_t i, std::size_t j) {
  if (j < i) return {};
  return Word(nu.begin() + static_cast<std::ptrdiff_t>(i - 1), nu.begin() + static_cast<std::ptrdiff_t>(j));
}

Word flipped(Word w, std::size_t i) {
  w[i - 1] = complement(w[i - 1]);
  return w;
}

HypothesisEntry require_entry(const KneadingSeq& tau, TheoremCase c, std::size_t k) {
  for (const HypothesisEntry& h : scan_hypotheses(tau).entries)
    if (h.theorem == c && h.k == k) return h;
  throw Error(ErrorKind::HypothesisFailed, "no " + to_string(c) + " hypothesis at k=" + std::to_string(k) +
                                               " for " + to_string(tau.seq()));
}

}  // namespace

TheoremInstance build_case1(std::size_t n, std::size_t l) {
  if (n < 3 || l < 1 || l > n - 2)
    throw Error(ErrorKind::BadParams, "case1 needs N ≥ 3 and 1 ≤ l ≤ N−2");
  const Word one{Symbol::One};
  const KneadingSeq tau(ForwardSeq::periodic(cat({{Symbol::Star}, one, repeat(Symbol::Two, n - 2)})));
  const Word period = cat({one, repeat(Symbol::Two, n - 3), one});
  const Word suffix = cat({one, repeat(Symbol::Two, n - 2), one});
  const BackSeq e(period, suffix);
  return {TheoremCase::Case1, tau, l, 0, {}, e, e.append(repeat(Symbol::Two, l)),
          {{n + 1, 1}, {l + 1, n + l + 1}}};
}

TheoremInstance build_case2(const KneadingSeq& tau, std::size_t k) {
  const Word nu = require_entry(tau, TheoremCase::Case2, k).nu;
  const std::size_t n = tau.period();
  const BackSeq e(flipped(slice(nu, 1, k), k), nu);
  const Word tail = flipped(flipped(nu, n - k), n);
  const BackSeq et(flipped(slice(nu, 1, k), n - k), tail);
  return {TheoremCase::Case2, tau, 0, k, nu, e, et, {{n + 1, 1}, {n + k + 1, k + 1}}};
}

TheoremInstance build_case3(const KneadingSeq& tau, std::size_t k) {
  const Word nu = require_entry(tau, TheoremCase::Case3, k).nu;
  const std::size_t n = tau.period();
  Word head = slice(nu, n - k + 1, k);
  head.back() = complement(head.back());
  const BackSeq e(cat({head, nu}), {});
  const BackSeq et = e.append(flipped(slice(nu, n - k + 1, n), k));
  return {TheoremCase::Case3, tau, 0, k, nu, e, et, {{n + 1, 1}, {k + 1, n + k + 1}}};
}

TheoremInstance with_itineraries(TheoremInstance inst, BackSeq e, BackSeq etilde) {
  if (e == etilde) throw Error(ErrorKind::InvalidArgument, "e and ẽ coincide");
  if (e.has_star() || etilde.has_star()) throw Error(ErrorKind::StarInSequence, "itineraries must be star-free");
  inst.e = std::move(e);
  inst.etilde = std::move(etilde);
  return inst;
}

std::string TheoremInstance::label() const {
  std::ostringstream out;
  out << to_string(theorem) << " τ=" << to_string(tau.seq());
  if (theorem == TheoremCase::Case1)
    out << " l=" << l;
  else
    out << " k=" << k << " ν=" << to_string(nu);
  return out.str();
}

// ---------------------------------------------------------------------------
// Schedules.

namespace {

void check_fill(const Word& fill) {
  if (fill.empty() || has_star(fill)) throw Error(ErrorKind::BadFill, "fill must be a nonempty word over {1,2}");
}

// Runs cycles while keep_going(pair) holds.
template <class Pred>
GeneratedPair generate(const TheoremInstance& inst, const Word& fill, Pred keep_going, std::size_t budget = 0) {
  check_fill(fill);
  GeneratedPair g{{inst.e, {}, inst.tau, fill}, {inst.etilde, {}, inst.tau, fill}, {}, {}};
  BackSeq e = inst.e, f = inst.etilde;
  std::size_t shift = 0;
  RayHistory seen;
  seen.max_states = budget ? budget + 1 : 0;
  while (keep_going(g)) {
    PairedFolds pf = run_cycle(e, f, shift, inst.program, fill, inst.tau, &seen);
    g.e.folds.insert(g.e.folds.end(), pf.e.begin(), pf.e.end());
    g.f.folds.insert(g.f.folds.end(), pf.f.begin(), pf.f.end());
    auto a = common_append(inst.e, e, inst.etilde, f);
    if (!a || a->size() <= shift)
      throw Error(ErrorKind::HypothesisFailed, inst.label() + ": cycle " + std::to_string(g.cycle_ends.size() + 1) +
                                                   " does not return to shifted copies of e and ẽ");
    shift = a->size();
    g.cycle_ends.push_back(g.e.folds.size());
    g.appended.push_back(std::move(*a));
  }
  return g;
}

}  // namespace

GeneratedPair TheoremInstance::cycles(std::size_t count, const Word& fill) const {
  return generate(*this, fill, [count](const GeneratedPair& g) { return g.cycle_ends.size() < count; });
}

GeneratedPair TheoremInstance::schedules(std::size_t folds, const Word& fill) const {
  return generate(*this, fill, [folds](const GeneratedPair& g) {
    return g.cycle_ends.empty() || g.e.folds.size() < folds;
  });
}

// ---------------------------------------------------------------------------
// Verification.

bool VerificationReport::ok() const {
  return !error && distinct_components && asymptotic.verdict && asymptotic.certificate.has_value();
}

VerificationReport verify_instance(const TheoremInstance& inst, std::size_t horizon, const Word& fill,
                                   std::size_t budget) {
  VerificationReport r;
  r.distinct_components = !same_arc_component(inst.e, inst.etilde, inst.tau);
  if (horizon == 0) throw Error(ErrorKind::InvalidArgument, "horizon must be positive");
  std::optional<GeneratedPair> made;
  try {
    // Whole cycles only, and at least two so that the certificate's replay
    // can be compared against a generated cycle.
    made = generate(inst, fill, [horizon](const GeneratedPair& g) {
      return g.cycle_ends.size() < 2 || g.e.folds.size() < horizon;
    }, budget);
  } catch (const Error& err) {
    r.error = err.what();
    return r;
  }
  const GeneratedPair& g = *made;
  r.cycles = g.cycle_ends.size();
  r.asymptotic = check_asymptotic(g.e, g.f);
  r.d_growth.push_back(r.asymptotic.d_values.front());
  for (std::size_t c : g.cycle_ends) r.d_growth.push_back(r.asymptotic.d_values[c]);
  if (const auto& cert = r.asymptotic.certificate) {
    r.certificate_cycles = 1;  // the replayed cycle
    for (std::size_t c : g.cycle_ends)
      if (c <= cert->n1) ++r.certificate_cycles;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fan.

std::vector<FoldSpec> match_partner(const BackSeq& e, const BackSeq& f, const std::vector<FoldSpec>& e_folds,
                                    const KneadingSeq& tau) {
  const std::size_t n = tau.period();
  BackSeq x = e, y = f;
  std::vector<FoldSpec> out;
  for (std::size_t step = 1; step <= e_folds.size(); ++step) {
    const FoldSpec& fs = e_folds[step - 1];
    const BackSeq nx = fold_apply(x, fs.residue, fs.flips, tau);
    const std::size_t d = first_back_discrepancy(x, y);
    std::optional<std::pair<FoldSpec, BackSeq>> pick;
    std::size_t top = 0;
    if (!fs.flips.all) {
      top = *std::max_element(fs.flips.depths.begin(), fs.flips.depths.end());
      if (top < d) {
        try {
          pick.emplace(fs, fold_apply(y, fs.residue, fs.flips, tau));
        } catch (const Error&) {
        }
      }
    }
    if (!pick) {
      std::size_t best = 0;
      const std::size_t limit = std::max(top, d == kInfinity ? top : d) + 2 * n;
      for (std::size_t q = fs.residue == 0 ? n : fs.residue; q <= limit; q += n) {
        const FoldSpec cand{fs.residue, FlipChoice::at({q})};
        try {
          BackSeq ny = fold_apply(y, cand.residue, cand.flips, tau);
          const std::size_t nd = first_back_discrepancy(nx, ny);
          if (nd == kInfinity) continue;
          if (!pick || nd > best) {
            best = nd;
            pick.emplace(cand, std::move(ny));
          }
        } catch (const Error&) {
        }
      }
    }
    if (!pick)
      throw IllegalFoldError(step, ErrorKind::HypothesisFailed, "no partner fold at residue " +
                                                                    std::to_string(fs.residue));
    out.push_back(pick->first);
    x = nx;
    y = std::move(pick->second);
  }
  return out;
}

CycleModel fan_model(const TheoremInstance& shared_side, const Word& fill, std::size_t cycles) {
  return [inst = shared_side, fill, cycles](const BackSeq& e, const BackSeq& f, std::size_t shift) {
    BackSeq x = e;
    std::vector<BackSeq> seen;
    PairedFolds pf;
    for (std::size_t c = 0; c < cycles; ++c) {
      const std::vector<FoldSpec> part = run_cycle_single(x, shift, inst.program, fill, inst.tau, &seen);
      pf.e.insert(pf.e.end(), part.begin(), part.end());
      const auto a = common_append(inst.e, x, inst.e, x);
      if (!a || a->size() <= shift) throw Error(ErrorKind::HypothesisFailed, "shared side did not grow");
      shift = a->size();
    }
    pf.f = match_partner(e, f, pf.e, inst.tau);
    return pf;
  };
}

Fan build_fan(std::size_t n, std::size_t cycles) {
  if (n < 3) throw Error(ErrorKind::BadParams, "a fan needs N ≥ 3");
  std::vector<TheoremInstance> instances;
  for (std::size_t l = 1; l <= n - 2; ++l) instances.push_back(build_case1(n, l));
  const GeneratedPair base = instances.back().cycles(cycles);
  Fan fan{std::move(instances), base.e, {}, {}, false, false};
  const TheoremInstance& lead = fan.instances.back();
  const CycleModel model = fan_model(lead, fan.shared.fill, 2);

  std::vector<RayTrace> traces{schedule_apply(fan.shared)};
  fan.e_sides_coincide = true;
  for (const TheoremInstance& inst : fan.instances) {
    FoldSchedule partner{inst.etilde, match_partner(inst.e, inst.etilde, fan.shared.folds, inst.tau), inst.tau,
                         fan.shared.fill};
    FoldSchedule own_e{inst.e, fan.shared.folds, inst.tau, fan.shared.fill};
    fan.e_sides_coincide = fan.e_sides_coincide && inst.e == lead.e && own_e.folds == fan.shared.folds;
    fan.reports.push_back(check_asymptotic(own_e, partner, model));
    traces.push_back(schedule_apply(partner));
    fan.partners.push_back(std::move(partner));
  }

  fan.pairwise_matched = true;
  for (std::size_t step = 0; step < fan.shared.folds.size(); ++step) {
    std::optional<std::size_t> c;
    for (const RayTrace& t : traces) {
      try {
        const std::size_t ci = c_class(t.alphas[step], n);
        if (c && *c != ci) fan.pairwise_matched = false;
        c = ci;
      } catch (const Error&) {
        fan.pairwise_matched = false;
      }
    }
  }
  return fan;
}

// ---------------------------------------------------------------------------

std::vector<GeneratedPair> variant_schedules(const TheoremInstance& inst, const std::vector<Word>& fills,
                                             std::size_t cycles) {
  for (const Word& f : fills) check_fill(f);
  std::vector<GeneratedPair> out;
  out.reserve(fills.size());
  for (const Word& f : fills) out.push_back(inst.cycles(cycles, f));
  return out;
}

}  // namespace itin

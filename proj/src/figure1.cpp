#include "itin/figure1.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "itin/error.hpp"
#include "itin/literal.hpp"

namespace itin {

namespace {

constexpr auto kT = Provenance::Transcribed;
constexpr auto kD = Provenance::KnownDeviation;
constexpr auto C2 = TheoremCase::Case2;
constexpr auto C3 = TheoremCase::Case3;
constexpr std::size_t kTablePeriod = 5;

}  // namespace

const std::vector<TranscribedRow>& figure1_transcription() {
  static const std::vector<TranscribedRow> rows = {
      {"(*12)#", "121", 2, "#(1)21", "#(2)", C2, kT, ""},
      {"(*12)#", "122", 2, "#(1122)", "#(1122)21", C3, kT, ""},
      {"(*122)#", "1221", 3, "#(121)1221", "#(2)", C2, kT, ""},
      {"(*122)#", "1222", 3, "#(211222)", "#(211222)221", C3, kT, ""},
      {"(*112)#", "1121", 3, "#(112)1112", "#(212)2122", C2, kD,
       "printed e differs from the formula's 1^inf121"},
      {"(*112)#", "1122", 3, "#(111122)", "#(111122)121", C3, kT, ""},
      {"(*1222)#", "12221", 4, "#(1221)12221", "#(2)", C2, kT, ""},
      {"(*1222)#", "12222", 4, "#(22112222)", "#(22112222)2221", C3, kT, ""},
      {"(*1221)#", "12211", 4, "#(1222)12211", "#(2221)2", C2, kT, ""},
      {"(*1221)#", "12212", 3, "#(121)12212", "#(112)11", C2, kT, ""},
      {"(*1221)#", "12211", 3, "#(112211)", "#(112211)212", C3, kT, ""},
      {"(*1221)#", "12212", 4, "#(22212212)", "#(22212212)2211", C3, kT, ""},
      {"(*1211)#", "12111", 4, "#(12)111", "#(2211)2", C2, kT, ""},
      {"(*1211)#", "12112", 3, "#(122)12112", "#(1)", C2, kT, ""},
      {"(*1211)#", "12111", 3, "#(212111)", "#(212111)112", C3, kT, ""},
      {"(*1211)#", "12112", 4, "#(21212112)", "#(21212112)2111", C3, kT, ""},
      {"(*1122)#", "11221", 4, "#(12111221)", "#(12111221)1222", C3, kD,
       "labelled case3, but the selection rule makes nu=11221 a case2 word"},
      {"(*1122)#", "11222", 4, "#(12111222)", "#(12111222)1221", C3, kT, ""},
      {"(*1121)#", "11211", 3, "#(1)211", "#(122)12", C2, kT, ""},
      {"(*1121)#", "11211", 4, "#(1122)11211", "#(212)12", C2, kD,
       "printed etilde differs from the formula's (12)^inf"},
      {"(*1121)#", "11212", 3, "#(111212)", "#(111212)211", C3, kT, ""},
      {"(*1121)#", "11212", 4, "#(12211212)", "#(12211212)1211", C3, kT, ""},
      {"(*1112)#", "11121", 4, "#(1)21", "#(2112)2", C2, kT, ""},
      {"(*1112)#", "11122", 4, "#(11111122)", "#(11111122)1121", C3, kT, ""},
  };
  return rows;
}

const std::vector<std::string>& figure1_known_extras() {
  static const std::vector<std::string> extras = {"(*1212)#"};
  return extras;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Reproduced: return "reproduced";
    case RowStatus::Deviation: return "deviation";
    case RowStatus::Extra: return "extra";
    case RowStatus::Regression: return "regression";
  }
  return "?";
}

std::size_t Figure1Result::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const Figure1Row& r) { return r.status == s; }));
}

bool Figure1Result::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const Figure1Row& r) { return r.verified; });
}

int Figure1Result::exit_status() const {
  return all_verified() && count(RowStatus::Regression) == 0 && missing.empty() ? 0 : 1;
}

namespace {

struct Job {
  TheoremInstance inst;
  Figure1Row row;
};

TheoremInstance build(const KneadingSeq& tau, TheoremCase c, std::size_t k) {
  return c == TheoremCase::Case2 ? build_case2(tau, k) : build_case3(tau, k);
}

Figure1Row skeleton(const TheoremInstance& inst) {
  Figure1Row r;
  r.tau = to_string(inst.tau.seq());
  r.nu = to_string(inst.nu);
  r.k = inst.k;
  r.theorem = inst.theorem;
  r.e = r.formula_e = to_string(inst.e);
  r.etilde = r.formula_etilde = to_string(inst.etilde);
  return r;
}

// The table's own pair, run through the program of the case it is labelled with.
Job printed_variant(const KneadingSeq& tau, const TheoremInstance& generated, const TranscribedRow& t) {
  TheoremInstance base = generated;
  if (t.theorem != generated.theorem) base = build(tau, t.theorem, t.k);
  base.nu = word_from_string(t.nu);
  base.theorem = t.theorem;
  TheoremInstance inst = with_itineraries(base, parse_back(t.e), parse_back(t.etilde));
  Figure1Row row = skeleton(generated);
  row.theorem = t.theorem;
  row.nu = t.nu;
  row.e = to_string(inst.e);
  row.etilde = to_string(inst.etilde);
  row.printed_variant = true;
  row.status = RowStatus::Deviation;
  row.note = "pair as printed; " + t.note;
  return {std::move(inst), std::move(row)};
}

void run(Job& job, std::size_t horizon) {
  Figure1Row& r = job.row;
  try {
    const VerificationReport v = verify_instance(job.inst, horizon);
    r.distinct_components = v.distinct_components;
    r.verified = v.ok();
    r.certificate_cycles = v.certificate_cycles;
    r.verdict = v.error ? "failed" : v.asymptotic.status();
    if (v.error)
      r.detail = *v.error;
    else if (!v.distinct_components)
      r.detail = "e and etilde share an arc-component";
    else if (!r.verified)
      r.detail = "no certificate";
  } catch (const Error& err) {
    r.distinct_components = !same_arc_component(job.inst.e, job.inst.etilde, job.inst.tau);
    r.verified = false;
    r.verdict = "failed";
    r.detail = err.what();
  }
}

// N ascending, then τ in decreasing word order, as the table lists them.
bool table_order(const KneadingSeq& a, const KneadingSeq& b) {
  if (a.period() != b.period()) return a.period() < b.period();
  return b.seq().period() < a.seq().period();
}

}  // namespace

Figure1Result figure1(std::size_t max_n, std::size_t horizon, bool parallel) {
  if (horizon < kMinFigureHorizon)
    throw Error(ErrorKind::InvalidArgument, "horizon " + std::to_string(horizon) +
                                                " is below the certification minimum of " +
                                                std::to_string(kMinFigureHorizon));
  if (max_n < 2 || max_n > 8) throw Error(ErrorKind::InvalidArgument, "max period must lie in 2..8");

  std::vector<KneadingSeq> taus = parallel ? enumerate_kneading(max_n) : enumerate_kneading_serial(max_n);
  std::stable_sort(taus.begin(), taus.end(), table_order);

  const auto& table = figure1_transcription();
  const auto& extras = figure1_known_extras();
  std::vector<bool> matched(table.size(), false);
  std::vector<Job> jobs;
  for (const KneadingSeq& tau : taus) {
    const std::string ts = to_string(tau.seq());
    for (const HypothesisEntry& h : scan_hypotheses(tau).entries) {
      TheoremInstance inst = build(tau, h.theorem, h.k);
      Figure1Row row = skeleton(inst);
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < table.size() && !hit; ++i)
        if (table[i].tau == ts && table[i].k == h.k && table[i].nu == row.nu) hit = i;

      std::optional<Job> variant;
      if (hit) {
        const TranscribedRow& t = table[*hit];
        matched[*hit] = true;
        const bool same = t.theorem == h.theorem && parse_back(t.e) == inst.e && parse_back(t.etilde) == inst.etilde;
        if (same) {
          row.status = RowStatus::Reproduced;
        } else if (t.provenance == Provenance::KnownDeviation) {
          row.status = RowStatus::Deviation;
          row.note = t.note;
          variant = printed_variant(tau, inst, t);
        } else {
          row.status = RowStatus::Regression;
          row.note = "differs from the transcribed row";
        }
      } else if (std::find(extras.begin(), extras.end(), ts) != extras.end()) {
        row.status = RowStatus::Extra;
        row.note = "acceptable kneading sequence absent from the table";
      } else if (tau.period() > kTablePeriod) {
        row.status = RowStatus::Extra;
        row.note = "period beyond the table";
      } else {
        row.status = RowStatus::Regression;
        row.note = "not in the transcribed table";
      }
      jobs.push_back({std::move(inst), std::move(row)});
      if (variant) jobs.push_back(std::move(*variant));
    }
  }

  const auto total = static_cast<std::ptrdiff_t>(jobs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < total; ++i) run(jobs[static_cast<std::size_t>(i)], horizon);
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) run(jobs[static_cast<std::size_t>(i)], horizon);
  }

  Figure1Result out;
  out.max_n = max_n;
  out.horizon = horizon;
  for (Job& j : jobs) out.rows.push_back(std::move(j.row));
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t n = table[i].nu.size();
    if (!matched[i] && n <= max_n)
      out.missing.push_back(table[i].tau + " k=" + std::to_string(table[i].k) + " nu=" + table[i].nu);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering. All three formats carry the same fields.

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Code points, which is what a terminal column count needs for these strings.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::vector<std::string> fields(const Figure1Row& r) {
  return {r.tau,
          r.nu,
          std::to_string(r.k),
          to_string(r.theorem),
          r.e,
          r.etilde,
          r.formula_e,
          r.formula_etilde,
          yes_no(r.printed_variant),
          yes_no(r.verified),
          yes_no(r.distinct_components),
          std::to_string(r.certificate_cycles),
          r.verdict,
          to_string(r.status)};
}

std::string summary(const Figure1Result& r) {
  std::ostringstream out;
  const auto verified = std::count_if(r.rows.begin(), r.rows.end(), [](const Figure1Row& x) { return x.verified; });
  out << r.rows.size() << " rows: " << r.count(RowStatus::Reproduced) << " reproduced, "
      << r.count(RowStatus::Deviation) << " deviation, " << r.count(RowStatus::Extra) << " extra, "
      << r.count(RowStatus::Regression) << " regression, " << r.missing.size() << " missing; " << verified << "/"
      << r.rows.size() << " certified at horizon " << r.horizon;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string render_table(const Figure1Result& r) {
  const std::vector<std::string> head = {"tau",      "nu",       "k",        "theorem",  "e",
                                         "etilde",   "formula_e", "formula_etilde", "variant", "verified",
                                         "distinct", "cert",     "verdict",  "status"};
  std::vector<std::vector<std::string>> body;
  for (const Figure1Row& row : r.rows) body.push_back(fields(row));
  std::vector<std::size_t> w(head.size() + 1, 1);
  w[0] = std::to_string(body.size()).size();
  for (std::size_t c = 0; c < head.size(); ++c) {
    w[c + 1] = width(head[c]);
    for (const auto& b : body) w[c + 1] = std::max(w[c + 1], width(b[c]));
  }
  std::ostringstream out;
  auto line = [&](const std::string& idx, const std::vector<std::string>& cells) {
    out << idx << std::string(w[0] - width(idx), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) out << "  " << cells[c] << std::string(w[c + 1] - width(cells[c]), ' ');
    out << "\n";
  };
  line("#", head);
  for (std::size_t i = 0; i < body.size(); ++i) line(std::to_string(i + 1), body[i]);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const Figure1Row& row = r.rows[i];
    if (!row.note.empty()) out << "[" << i + 1 << "] note: " << row.note << "\n";
    if (!row.detail.empty()) out << "[" << i + 1 << "] detail: " << row.detail << "\n";
  }
  for (const std::string& m : r.missing) out << "missing: " << m << "\n";
  out << summary(r) << "\n";
  return out.str();
}

std::string render_csv(const Figure1Result& r) {
  std::ostringstream out;
  out << "tau,nu,k,theorem,e,etilde,formula_e,formula_etilde,printed_variant,verified,distinct_components,"
         "certificate_cycles,verdict,status,note,detail\n";
  for (const Figure1Row& row : r.rows) {
    std::vector<std::string> f = fields(row);
    f.push_back(row.note);
    f.push_back(row.detail);
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_field(f[i]);
    out << "\n";
  }
  for (const std::string& m : r.missing) out << "# missing: " << m << "\n";
  return out.str();
}

std::string render_json(const Figure1Result& r) {
  nlohmann::ordered_json j;
  j["max_period"] = r.max_n;
  j["horizon"] = r.horizon;
  j["rows"] = nlohmann::ordered_json::array();
  for (const Figure1Row& row : r.rows) {
    nlohmann::ordered_json x;
    x["tau"] = row.tau;
    x["nu"] = row.nu;
    x["k"] = row.k;
    x["theorem"] = to_string(row.theorem);
    x["e"] = row.e;
    x["etilde"] = row.etilde;
    x["formula_e"] = row.formula_e;
    x["formula_etilde"] = row.formula_etilde;
    x["printed_variant"] = row.printed_variant;
    x["verified"] = row.verified;
    x["distinct_components"] = row.distinct_components;
    x["certificate_cycles"] = row.certificate_cycles;
    x["verdict"] = row.verdict;
    x["status"] = to_string(row.status);
    x["note"] = row.note;
    x["detail"] = row.detail;
    j["rows"].push_back(std::move(x));
  }
  j["missing"] = r.missing;
  j["summary"] = summary(r);
  j["exit_status"] = r.exit_status();
  return j.dump(2) + "\n";
}

}  // namespace itin

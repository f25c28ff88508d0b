// itin: command-line front end to the itinerary library.
//
// Exit status: 0 on success (or a true answer), 1 when the answer is negative
// or a verification fails, 2 on usage and parse errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "itin/error.hpp"
#include "itin/figure1.hpp"
#include "itin/literal.hpp"
#include "itin/ray.hpp"
#include "itin/theorems.hpp"

using namespace itin;

namespace {

enum class Format { Table, Csv, Json };

// A uniform result shape so that every subcommand renders in all three formats.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
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

std::string render(const Table& t, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Table: {
      std::vector<std::size_t> w;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        w.push_back(width(t.columns[c]));
        for (const auto& r : t.rows) w[c] = std::max(w[c], width(r[c]));
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) s += "  ";
          s += cells[c];
          if (c + 1 < cells.size()) s += std::string(w[c] - width(cells[c]), ' ');
        }
        out << s << "\n";
      };
      line(t.columns);
      for (const auto& r : t.rows) line(r);
      for (const auto& n : t.notes) out << n << "\n";
      break;
    }
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
        out << "\n";
      };
      line(t.columns);
      for (const auto& r : t.rows) line(r);
      for (const auto& n : t.notes) out << "# " << n << "\n";
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json j;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : t.rows) {
        nlohmann::ordered_json x;
        for (std::size_t c = 0; c < r.size(); ++c) x[t.columns[c]] = r[c];
        j["rows"].push_back(std::move(x));
      }
      j["notes"] = t.notes;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int usage_or_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::EmptyPeriod:
    case ErrorKind::NotPurelyPeriodic:
    case ErrorKind::InvalidKneading:
    case ErrorKind::InvalidArgument:
    case ErrorKind::BadParams:
    case ErrorKind::BadFill:
      return 2;
    default:
      return 1;
  }
}

// "ALL" or a list of negative positions −q, one per flipped depth q.
FlipChoice flips_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "ALL") throw Error(ErrorKind::InvalidArgument, "flips must be \"ALL\" or a list");
    return FlipChoice::every();
  }
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "flips must be \"ALL\" or a list");
  std::vector<std::size_t> depths;
  for (const auto& p : j) {
    if (!p.is_number_integer() || p.get<long long>() >= 0)
      throw Error(ErrorKind::InvalidArgument, "flip positions are negative integers, got " + p.dump());
    depths.push_back(static_cast<std::size_t>(-p.get<long long>()));
  }
  return FlipChoice::at(std::move(depths));
}

FlipChoice flips_from_text(const std::string& s) {
  if (s == "ALL") return FlipChoice::every();
  nlohmann::json j = nlohmann::json::array();
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      j.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad flip position '" + item + "'");
    }
  }
  return flips_from_json(j);
}

std::vector<FoldSpec> read_schedule(const std::string& path) {
  nlohmann::json j;
  try {
    if (path == "-") {
      j = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream f(path);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open schedule file " + path);
      j = nlohmann::json::parse(f);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("schedule: ") + e.what());
  }
  if (j.is_object() && j.contains("folds")) j = j["folds"];
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "schedule must be a list of folds");
  std::vector<FoldSpec> out;
  for (const auto& f : j) {
    if (!f.is_object() || !f.contains("residue") || !f.contains("flips") || !f["residue"].is_number_unsigned())
      throw Error(ErrorKind::InvalidArgument, "each fold needs a residue and flips: " + f.dump());
    out.push_back({f["residue"].get<std::size_t>(), flips_from_json(f["flips"])});
  }
  return out;
}

std::string label(const TheoremInstance& inst) {
  std::ostringstream out;
  out << to_string(inst.theorem) << " tau=" << to_string(inst.tau.seq());
  if (inst.theorem == TheoremCase::Case1) out << " l=" << inst.l;
  else out << " k=" << inst.k << " nu=" << to_string(inst.nu);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Itinerary calculus for inverse limits of tentish dendrite maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "itin 1.0");

  std::string fmt_name = "table";
  app.add_option("--format", fmt_name, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();

  std::string tau_s, x_s, y_s, e_s, f_s, flips_s = "ALL", schedule_path, fill_s = "1";
  std::size_t residue = 0, max_period = 5, horizon = 12, k = 0, n = 0, l = 0, max_depth = 0;
  std::string case_s;
  bool serial = false;
  std::optional<std::size_t> residue_opt;
  std::optional<std::string> e_override, f_override;

  auto add_tau = [&](CLI::App* c) { c->add_option("--tau", tau_s, "Kneading sequence, e.g. (*112)#")->required(); };

  auto* acc = app.add_subcommand("check-acceptable", "Decide whether a forward sequence is an acceptable kneading sequence");
  acc->add_option("tau", tau_s, "Forward sequence literal")->required();

  auto* adm = app.add_subcommand("admissible", "Decide τ-admissibility of a forward or two-sided sequence");
  adm->add_option("x", x_s, "Forward or two-sided literal")->required();
  add_tau(adm);

  auto* mu = app.add_subcommand("mu", "Point between x and y produced by the μ-process");
  mu->add_option("x", x_s)->required();
  mu->add_option("y", y_s)->required();
  add_tau(mu);

  auto* bet = app.add_subcommand("beta", "β of a backward itinerary at one residue or all of them");
  bet->add_option("e", e_s, "Backward itinerary, e.g. #(1)")->required();
  bet->add_option("--residue", residue_opt, "Residue mod N (default: all)");
  add_tau(bet);

  auto* nb = app.add_subcommand("neighbors", "Itineraries one legal single-depth fold away");
  nb->add_option("e", e_s)->required();
  nb->add_option("--max-depth", max_depth, "Depth cap when β is infinite (default 3N)");
  add_tau(nb);

  auto* bnd = app.add_subcommand("boundary", "Shared boundary point of the cylinder at a residue");
  bnd->add_option("e", e_s)->required();
  bnd->add_option("--residue", residue, "Residue mod N")->required();
  add_tau(bnd);

  auto* arc = app.add_subcommand("arc-equiv", "Decide whether two backward itineraries share an arc-component");
  arc->add_option("e", e_s)->required();
  arc->add_option("f", f_s)->required();
  add_tau(arc);

  auto* fold = app.add_subcommand("fold", "Apply one fold");
  fold->add_option("e", e_s)->required();
  fold->add_option("--residue", residue, "Residue mod N")->required();
  fold->add_option("--flips", flips_s, "ALL or comma-separated negative positions, e.g. -1,-5")->capture_default_str();
  add_tau(fold);

  auto* ray = app.add_subcommand("ray", "Run a fold schedule from a start itinerary");
  ray->add_option("--start", e_s, "Start itinerary")->required();
  ray->add_option("--schedule", schedule_path, "JSON schedule file, - for stdin")->required();
  add_tau(ray);

  auto* thm = app.add_subcommand("theorem", "Build and verify a theorem instance");
  thm->add_option("--case", case_s, "1, 2 or 3")->required()->check(CLI::IsMember({"1", "2", "3"}));
  thm->add_option("--tau", tau_s, "Kneading sequence (cases 2 and 3)");
  thm->add_option("--k", k, "k (cases 2 and 3)");
  thm->add_option("--n", n, "Period N (case 1)");
  thm->add_option("--l", l, "l (case 1)");
  thm->add_option("--e", e_override, "Replace e");
  thm->add_option("--etilde", f_override, "Replace ẽ");
  thm->add_option("--fill", fill_s, "Fill word for the V-blocks")->capture_default_str();
  thm->add_option("--horizon", horizon, "Minimum folds to generate")->capture_default_str();

  auto* en = app.add_subcommand("enumerate", "Acceptable kneading sequences and their theorem hypotheses");
  en->add_option("--max-period", max_period, "Largest period")->capture_default_str();
  en->add_flag("--serial", serial, "Use the serial reference");

  auto* fig = app.add_subcommand("figure1", "Regenerate, verify and diff the table of asymptotic pairs");
  fig->add_option("--max-period", max_period, "Largest period, 2..8")->capture_default_str();
  fig->add_option("--horizon", horizon, "Minimum folds per row")->capture_default_str();
  fig->add_flag("--serial", serial, "Verify rows serially");

  for (auto* c : {acc, adm, mu, bet, nb, bnd, arc, fold, ray, thm, en, fig})
    c->add_option("--format", fmt_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const Format fmt = fmt_name == "csv" ? Format::Csv : fmt_name == "json" ? Format::Json : Format::Table;

  try {
    Table t;
    int status = 0;
    if (*acc) {
      const ForwardSeq s = parse_forward(tau_s);
      const bool ok = is_acceptable(s);
      t.columns = {"tau", "acceptable"};
      t.rows.push_back({to_string(s), yes_no(ok)});
      status = ok ? 0 : 1;
    } else if (*adm) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const Literal lit = parse_literal(x_s);
      bool ok = false;
      if (const auto* fw = std::get_if<ForwardSeq>(&lit)) ok = is_admissible(*fw, tau);
      else if (const auto* bi = std::get_if<BiSeq>(&lit)) ok = biseq_admissible(*bi, tau);
      else throw Error(ErrorKind::InvalidArgument, "admissible takes a forward or two-sided literal");
      t.columns = {"x", "tau", "admissible"};
      t.rows.push_back({to_string(lit), to_string(tau.seq()), yes_no(ok)});
      status = ok ? 0 : 1;
    } else if (*mu) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const ForwardSeq x = parse_forward(x_s), y = parse_forward(y_s);
      t.columns = {"x", "y", "mu"};
      t.rows.push_back({to_string(x), to_string(y), to_string(mu_point(x, y, tau))});
    } else if (*bet) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const BackSeq e = parse_back(e_s);
      t.columns = {"residue", "match_depth", "beta"};
      for (std::size_t i = 0; i < tau.period(); ++i) {
        if (residue_opt && *residue_opt % tau.period() != i) continue;
        const std::size_t m = match_depth(e, i, tau);
        t.rows.push_back({std::to_string(i), m == kInfinity ? "inf" : std::to_string(m), to_string(beta(e, i, tau))});
      }
    } else if (*nb) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const BackSeq e = parse_back(e_s);
      const std::size_t cap = max_depth ? max_depth : 3 * tau.period();
      t.columns = {"residue", "position", "itinerary"};
      for (std::size_t i = 0; i < tau.period(); ++i) {
        const BetaResult b = beta(e, i, tau);
        if (!b.defined()) continue;
        const std::size_t top = b.is_finite() ? std::min(b.value, cap) : cap;
        for (std::size_t q = i == 0 ? tau.period() : i; q <= top; q += tau.period()) {
          try {
            const BackSeq g = fold_apply(e, i, FlipChoice::at({q}), tau);
            t.rows.push_back({std::to_string(i), "-" + std::to_string(q), to_string(g)});
          } catch (const Error&) {
          }
        }
      }
    } else if (*bnd) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const BackSeq e = parse_back(e_s);
      t.columns = {"e", "residue", "boundary_point"};
      t.rows.push_back({to_string(e), std::to_string(residue), to_string(boundary_point(e, residue, tau))});
    } else if (*arc) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const BackSeq e = parse_back(e_s), f = parse_back(f_s);
      const bool same = same_arc_component(e, f, tau);
      t.columns = {"e", "f", "discrepancies", "same_arc_component"};
      t.rows.push_back({to_string(e), to_string(f), to_string(discrepancies(e, f)), yes_no(same)});
      status = same ? 0 : 1;
    } else if (*fold) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const BackSeq e = parse_back(e_s);
      const FlipChoice fc = flips_from_text(flips_s);
      t.columns = {"e", "fold", "result"};
      t.rows.push_back({to_string(e), to_string(FoldSpec{residue, fc}), to_string(fold_apply(e, residue, fc, tau))});
    } else if (*ray) {
      const KneadingSeq tau = parse_kneading(tau_s);
      const FoldSchedule s{parse_back(e_s), read_schedule(schedule_path), tau};
      const RayTrace r = schedule_apply(s);
      t.columns = {"n", "itinerary", "fold", "alpha", "C"};
      for (std::size_t i = 0; i < r.itineraries.size(); ++i) {
        if (i == 0) {
          t.rows.push_back({"0", to_string(r.itineraries[0]), "", "", ""});
          continue;
        }
        const DiscrepancySet& a = r.alphas[i - 1];
        t.rows.push_back({std::to_string(i), to_string(r.itineraries[i]), to_string(s.folds[i - 1]), to_string(a),
                          std::to_string(c_class(a, tau.period()))});
      }
    } else if (*thm) {
      TheoremInstance inst = [&] {
        if (case_s == "1") return build_case1(n, l);
        if (tau_s.empty() || k == 0) throw Error(ErrorKind::InvalidArgument, "cases 2 and 3 need --tau and --k");
        const KneadingSeq tau = parse_kneading(tau_s);
        return case_s == "2" ? build_case2(tau, k) : build_case3(tau, k);
      }();
      if (e_override || f_override)
        inst = with_itineraries(inst, e_override ? parse_back(*e_override) : inst.e,
                                f_override ? parse_back(*f_override) : inst.etilde);
      const VerificationReport v = verify_instance(inst, horizon, word_from_string(fill_s));
      t.columns = {"instance", "e", "etilde", "distinct_components", "cycles", "verdict", "certificate_cycles"};
      t.rows.push_back({label(inst), to_string(inst.e), to_string(inst.etilde), yes_no(v.distinct_components),
                        std::to_string(v.cycles), v.error ? "failed" : v.asymptotic.status(),
                        std::to_string(v.certificate_cycles)});
      if (v.error) t.notes.push_back("detail: " + *v.error);
      status = v.ok() ? 0 : 1;
    } else if (*en) {
      if (max_period < 2 || max_period > 12) throw Error(ErrorKind::InvalidArgument, "max period must lie in 2..12");
      const auto taus = serial ? enumerate_kneading_serial(max_period) : enumerate_kneading(max_period);
      t.columns = {"tau", "N", "theorem", "k", "nu"};
      for (const KneadingSeq& tau : taus) {
        const HypothesisReport h = scan_hypotheses(tau);
        if (h.entries.empty()) t.rows.push_back({to_string(tau.seq()), std::to_string(tau.period()), "", "", ""});
        for (const HypothesisEntry& x : h.entries)
          t.rows.push_back({to_string(tau.seq()), std::to_string(tau.period()), to_string(x.theorem),
                            std::to_string(x.k), to_string(x.nu)});
      }
    } else if (*fig) {
      const Figure1Result r = figure1(max_period, horizon, !serial);
      std::cout << (fmt == Format::Csv ? render_csv(r) : fmt == Format::Json ? render_json(r) : render_table(r));
      return r.exit_status();
    }
    std::cout << render(t, fmt);
    return status;
  } catch (const IllegalFoldError& e) {
    std::cerr << "itin: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "itin: " << e.what() << "\n";
    return usage_or_failure(e.kind());
  }
}

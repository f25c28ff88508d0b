#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <json.hpp>

#include "doctest.h"
#include "itin/error.hpp"
#include "itin/figure1.hpp"
#include "itin/literal.hpp"

using namespace itin;

namespace {

const Figure1Result& result5() {
  static const Figure1Result r = figure1(5, 12);
  return r;
}

using Key = std::tuple<std::string, std::size_t, std::string>;

Key key(const Figure1Row& r) { return {r.tau, r.k, r.nu}; }

const Figure1Row* find_row(const Figure1Result& r, const Key& k, bool variant) {
  for (const auto& row : r.rows)
    if (key(row) == k && row.printed_variant == variant) return &row;
  return nullptr;
}

// Minimal RFC 4180 reader, enough to check the writer's quoting.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("transcription: 24 rows over the nine table sequences") {
  const auto& t = figure1_transcription();
  CHECK(t.size() == 24);
  std::set<std::string> taus;
  std::set<Key> keys;
  for (const auto& row : t) {
    taus.insert(row.tau);
    keys.insert({row.tau, row.k, row.nu});
    CHECK_NOTHROW(parse_kneading(row.tau));
    CHECK_NOTHROW(parse_back(row.e));
    CHECK_NOTHROW(parse_back(row.etilde));
    CHECK(row.nu.size() == parse_kneading(row.tau).period());
    CHECK((row.provenance == Provenance::KnownDeviation) == !row.note.empty());
  }
  CHECK(taus.size() == 9);
  CHECK(keys.size() == 24);
  // Every acceptable sequence of period ≤ 5 is in the table or the extras list.
  for (const auto& tau : enumerate_kneading(5)) {
    const std::string s = to_string(tau.seq());
    const auto& ex = figure1_known_extras();
    CHECK((taus.count(s) == 1) != (std::find(ex.begin(), ex.end(), s) != ex.end()));
  }
}

TEST_CASE("figure1: diff against the transcription") {
  const Figure1Result& r = result5();
  CHECK(r.missing.empty());
  CHECK(r.count(RowStatus::Regression) == 0);
  CHECK(r.count(RowStatus::Reproduced) == 21);
  CHECK(r.count(RowStatus::Extra) == 2);
  CHECK(r.count(RowStatus::Deviation) == 6);
  CHECK(r.rows.size() == 29);

  // Every transcribed row that is not a known deviation regenerates exactly.
  for (const auto& t : figure1_transcription()) {
    const Figure1Row* row = find_row(r, {t.tau, t.k, t.nu}, false);
    REQUIRE(row != nullptr);
    if (t.provenance == Provenance::Transcribed) {
      CHECK(row->status == RowStatus::Reproduced);
      CHECK(row->theorem == t.theorem);
      CHECK(parse_back(row->e) == parse_back(t.e));
      CHECK(parse_back(row->etilde) == parse_back(t.etilde));
    } else {
      CHECK(row->status == RowStatus::Deviation);
      const Figure1Row* printed = find_row(r, {t.tau, t.k, t.nu}, true);
      REQUIRE(printed != nullptr);
      CHECK(printed->theorem == t.theorem);
      CHECK(parse_back(printed->e) == parse_back(t.e));
      CHECK(parse_back(printed->etilde) == parse_back(t.etilde));
      CHECK(printed->formula_e == row->e);
      CHECK_FALSE(printed->verified);
      CHECK(row->verified);
    }
  }

  // Variant rows come right after the generated row they belong to.
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    if (r.rows[i].printed_variant) {
      REQUIRE(i > 0);
      CHECK(key(r.rows[i - 1]) == key(r.rows[i]));
      CHECK_FALSE(r.rows[i - 1].printed_variant);
    }

  for (const auto& row : r.rows)
    if (row.status == RowStatus::Extra) CHECK(row.tau == "(*1212)#");
}

TEST_CASE("figure1: verification outcome at horizon 12") {
  const Figure1Result& r = result5();
  const std::set<Key> certified = {
      {"(*12)#", 2, "121"},      {"(*122)#", 3, "1221"},    {"(*112)#", 3, "1121"},   {"(*1222)#", 4, "12221"},
      {"(*1221)#", 3, "12212"},  {"(*1221)#", 4, "12212"},  {"(*1212)#", 4, "12121"}, {"(*1211)#", 4, "12111"},
      {"(*1211)#", 3, "12111"},  {"(*1122)#", 4, "11221"},  {"(*1121)#", 3, "11211"}, {"(*1121)#", 4, "11211"},
      {"(*1112)#", 4, "11121"},
  };
  for (const auto& row : r.rows) {
    CAPTURE(row.tau);
    CAPTURE(row.nu);
    CAPTURE(row.k);
    CHECK(row.distinct_components);
    const bool expect = !row.printed_variant && certified.count(key(row)) == 1;
    CHECK(row.verified == expect);
    if (row.verified) {
      CHECK(row.verdict == "certified");
      CHECK(row.certificate_cycles == 2);
      CHECK(row.detail.empty());
    } else {
      CHECK(row.verdict == "failed");
      CHECK_FALSE(row.detail.empty());
    }
  }
  CHECK_FALSE(r.all_verified());
  CHECK(r.exit_status() == 1);
}

TEST_CASE("figure1: serial and parallel agree byte for byte") {
  const Figure1Result serial = figure1(5, 12, false);
  CHECK(render_json(serial) == render_json(result5()));
  CHECK(render_table(serial) == render_table(result5()));
  CHECK(render_csv(figure1(5, 12)) == render_csv(result5()));
}

TEST_CASE("figure1: smaller periods and argument errors") {
  const Figure1Result r = figure1(3, 8);
  CHECK(r.rows.size() == 2);
  CHECK(r.missing.empty());
  CHECK(r.rows[0].verified);
  CHECK_FALSE(r.rows[1].verified);
  CHECK(figure1(2, 8).rows.empty());

  for (std::size_t h : {0u, 1u, 7u}) {
    try {
      figure1(5, h);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }
  CHECK_THROWS_AS(figure1(1, 12), Error);
  CHECK_THROWS_AS(figure1(9, 12), Error);
}

TEST_CASE("renderers carry the same fields") {
  const Figure1Result& r = result5();

  std::istringstream csv(render_csv(r));
  std::string line;
  std::getline(csv, line);
  const auto head = split_csv(line);
  CHECK(head.size() == 16);
  std::size_t i = 0;
  while (std::getline(csv, line)) {
    if (line.rfind("# ", 0) == 0) continue;
    REQUIRE(i < r.rows.size());
    const auto f = split_csv(line);
    REQUIRE(f.size() == head.size());
    const Figure1Row& row = r.rows[i++];
    CHECK(f[0] == row.tau);
    CHECK(f[4] == row.e);
    CHECK(f[9] == (row.verified ? "yes" : "no"));
    CHECK(f[13] == to_string(row.status));
    CHECK(f[14] == row.note);
    CHECK(f[15] == row.detail);
  }
  CHECK(i == r.rows.size());

  const auto j = nlohmann::json::parse(render_json(r));
  REQUIRE(j["rows"].size() == r.rows.size());
  CHECK(j["horizon"] == 12);
  CHECK(j["exit_status"] == r.exit_status());
  for (std::size_t n = 0; n < r.rows.size(); ++n) {
    const auto& x = j["rows"][n];
    const Figure1Row& row = r.rows[n];
    CHECK(x["tau"] == row.tau);
    CHECK(x["etilde"] == row.etilde);
    CHECK(x["formula_etilde"] == row.formula_etilde);
    CHECK(x["verified"] == row.verified);
    CHECK(x["certificate_cycles"] == row.certificate_cycles);
    CHECK(x["detail"] == row.detail);
  }

  const std::string table = render_table(r);
  for (const auto& row : r.rows) CHECK(table.find(row.formula_etilde) != std::string::npos);
  CHECK(table.find("29 rows: 21 reproduced, 6 deviation, 2 extra, 0 regression, 0 missing") != std::string::npos);
}

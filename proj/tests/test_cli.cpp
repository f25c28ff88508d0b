#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "doctest.h"
#include "itin/literal.hpp"
#include "support.hpp"

using namespace itin;
using testsupport::Gen;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the itin binary with the given arguments, stderr merged into stdout.
Run itin_cli(const std::string& args) {
  const std::string cmd = std::string(ITIN_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string q(const std::string& s) { return "'" + s + "'"; }

// Second line, first cell: the echoed canonical literal.
std::string echoed(const std::string& out) {
  const auto a = out.find('\n') + 1;
  return out.substr(a, out.find(' ', a) - a);
}

// The period written out once more and rotated into the prefix, to feed the
// parser something that is not already canonical.
std::string unrolled(const ForwardSeq& x) {
  std::string pre = to_string(x.prefix()), per = to_string(x.period());
  return pre + per + per.substr(0, 1) + "(" + per.substr(1) + per.substr(0, 1) + ")#";
}

std::string unrolled(const BackSeq& e) {
  std::string per = to_string(e.period()), suf = to_string(e.suffix());
  const std::string last = per.substr(per.size() - 1);
  return "#(" + last + per.substr(0, per.size() - 1) + ")" + last + per + suf;
}

}  // namespace

TEST_CASE("cli: literals round-trip through the binary") {
  Gen g(101);
  for (int t = 0; t < 1000; ++t) {
    CAPTURE(t);
    switch (t % 3) {
      case 0: {
        const ForwardSeq x = ForwardSeq::periodic(g.word(g.range(1, 6), 0.2));
        const Run a = itin_cli("check-acceptable " + q(to_string(x)));
        CHECK(echoed(a.out) == to_string(x));
        const Run b = itin_cli("check-acceptable " + q(unrolled(x)));
        CHECK(echoed(b.out) == to_string(x));
        break;
      }
      case 1: {
        const BackSeq e = g.back(8, 6);
        const Run a = itin_cli("arc-equiv " + q(to_string(e)) + " " + q(unrolled(e)) + " --tau '(*112)#'");
        CHECK(echoed(a.out) == to_string(e));
        CHECK(a.status == 0);
        break;
      }
      default: {
        const ForwardSeq x = g.forward(8, 6);
        const Run a = itin_cli("admissible " + q(unrolled(x)) + " --tau '(*1221)#'");
        CHECK(echoed(a.out) == to_string(x));
        CHECK((a.status == 0 || a.status == 1));
      }
    }
  }
}

TEST_CASE("cli: ray on the worked example") {
  const std::string dir = TEST_TMP_DIR;
  auto write = [&](const std::string& name, const std::string& body) {
    const std::string path = dir + "/" + name;
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(body.c_str(), f);
    fclose(f);
    return path;
  };
  const std::string good =
      write("good.json", R"([{"residue":0,"flips":"ALL"},{"residue":1,"flips":[-1]},{"residue":3,"flips":[-3]}])");
  const Run r = itin_cli("--format csv ray --start '#(1112)' --tau '(*112)#' --schedule " + good);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "n,itinerary,fold,alpha,C\n"
        "0,#(1112),,,\n"
        "1,#(2112),\"(0,ALL)\",{k>=1:k%4 in [0]},0\n"
        "2," + to_string(parse_back("#(2112)2111")) + ",\"(1,[-1])\",{1},1\n"
        "3," + to_string(parse_back("#(2112)2211")) + ",\"(3,[-3])\",{3},3\n");

  const Run empty = itin_cli("ray --start '#(1112)' --tau '(*112)#' --schedule " + write("empty.json", "[]"));
  CHECK(empty.status == 0);
  CHECK(empty.out.find("#(1112)") != std::string::npos);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 2);

  const Run bad = itin_cli("ray --start '#(1112)' --tau '(*112)#' --schedule " +
                           write("bad.json", R"([{"residue":0,"flips":"ALL"},{"residue":1,"flips":[-5]}])"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("step 2") != std::string::npos);

  const Run garbled = itin_cli("ray --start '#(1112)' --tau '(*112)#' --schedule " + write("garbled.json", "[{"));
  CHECK(garbled.status == 2);
}

TEST_CASE("cli: worked-example queries") {
  const Run b = itin_cli("--format json beta '#(1)' --tau '(*112)#'");
  CHECK(b.status == 0);
  const auto j = nlohmann::json::parse(b.out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["beta"] == "undefined");
  CHECK(j["rows"][1]["beta"] == "1");
  CHECK(j["rows"][2]["beta"] == "2");
  CHECK(j["rows"][3]["beta"] == "3");

  const Run p = itin_cli("boundary '#(1)' --residue 1 --tau '(*112)#'");
  CHECK(p.status == 0);
  CHECK(p.out.find(to_string(parse_biseq("#(1)*.(112*)#"))) != std::string::npos);

  CHECK(itin_cli("boundary '#(1)' --residue 0 --tau '(*112)#'").status == 1);
  CHECK(itin_cli("check-acceptable '(*112)#'").status == 0);
  CHECK(itin_cli("check-acceptable '(*121)#'").status == 1);
  CHECK(itin_cli("fold '#(1)' --residue 1 --flips -1 --tau '(*112)#'").out.find("#(1)2") != std::string::npos);
  CHECK(itin_cli("neighbors '#(1)' --tau '(*112)#'").status == 0);
  CHECK(itin_cli("mu '(1)#' '(2)#' --tau '(*112)#'").status <= 1);
}

TEST_CASE("cli: theorem and enumerate") {
  const Run t = itin_cli("theorem --case 2 --tau '(*12)#' --k 2");
  CHECK(t.status == 0);
  CHECK(t.out.find("certified") != std::string::npos);
  const Run printed = itin_cli("theorem --case 2 --tau '(*112)#' --k 3 --e '#(112)1112' --etilde '#(212)2122'");
  CHECK(printed.status == 1);
  CHECK(printed.out.find("FlipOutOfRange") != std::string::npos);
  CHECK(itin_cli("theorem --case 2 --tau '(*12)#'").status == 2);

  const Run e = itin_cli("--format csv enumerate --max-period 4");
  CHECK(e.status == 0);
  CHECK(e.out.find("(*12)#,3,case2,2,121") != std::string::npos);
  CHECK(itin_cli("--format csv enumerate --max-period 4 --serial").out == e.out);
}

TEST_CASE("cli: figure1") {
  const Run three = itin_cli("--format json figure1 --max-period 3");
  const auto j = nlohmann::json::parse(three.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["missing"].empty());
  for (const auto& row : j["rows"]) CHECK(row["status"] == "reproduced");
  CHECK(j["rows"][0]["verified"] == true);
  // The case-3 row does not certify; the exit status says so.
  CHECK(j["rows"][1]["verified"] == false);
  CHECK(three.status == 1);

  const Run a = itin_cli("figure1 --max-period 5");
  const Run b = itin_cli("figure1 --max-period 5 --serial");
  CHECK(a.out == b.out);
  CHECK(a.out.find("29 rows: 21 reproduced, 6 deviation, 2 extra, 0 regression, 0 missing") != std::string::npos);
  CHECK(itin_cli("--format csv figure1 --max-period 5").out == itin_cli("--format csv figure1 --max-period 5").out);

  const Run low = itin_cli("figure1 --horizon 1");
  CHECK(low.status == 2);
  CHECK(low.out.find("below the certification minimum") != std::string::npos);
  CHECK(itin_cli("figure1 --max-period 9").status == 2);
  CHECK(itin_cli("figure1 --format xml").status == 2);
  CHECK(itin_cli("").status == 2);
}

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsing/cli.hpp"
#include "qsing/errors.hpp"
#include "qsing/reports.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

std::string data_dir() {
  const char* d = std::getenv("QSING_DATA_DIR");
  return d ? d : "data";
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

template <class Report>
void check_round_trip(const Report& r) {
  Json j = encode(r);
  Json reparsed = Json::parse(j.dump());
  CHECK(decode<Report>(reparsed) == r);
  CHECK(encode(decode<Report>(reparsed)) == j);
}

}  // namespace

TEST_CASE("quiver file parser") {
  Quiver q = parse_quiver("# comment\nvertices 3\narrow 1 2  # trailing\n\narrow 3 2\n");
  CHECK(q.vertex_count() == 3);
  CHECK(q.arrow_count() == 2);
  CHECK_THROWS_AS(parse_quiver("arrow 1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver("vertices 2\narrow 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver("vertices 2\narrow 1 x\n"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver("vertices 2\narrow 1 5\n"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver("vertices 2\nvertices 3\n"), InvalidInput);
  CHECK_THROWS_AS(parse_quiver("edges 2\n"), InvalidInput);
  CHECK(parse_int_list("1,2,3") == std::vector<int>{1, 2, 3});
  CHECK(parse_int_list("(1, 2)") == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_int_list("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_int_list(""), InvalidInput);
}

TEST_CASE("JSON round trips for every report") {
  AnalysisRequest a2{a_linear(2), DimVector{1, 1}, {}};
  check_round_trip(run_decompose(a2));
  check_round_trip(run_nullcone(a2));
  check_round_trip(run_bfunction(a2));
  check_round_trip(run_singularities(a2));
  check_round_trip(run_hom(a_linear(3), DimVector{1, 1, 0}, std::nullopt));

  Preset e6 = make_preset("e6-ex1", 2, 2);
  AnalysisRequest e6_req{e6.quiver, e6.alpha, e6.selected};
  check_round_trip(run_decompose(e6_req));
  check_round_trip(run_bfunction(e6_req));
  check_round_trip(run_singularities(e6_req));

  Preset pos = make_preset("e8-pos", 1, 0);
  AnalysisRequest pos_req{pos.quiver, pos.alpha, pos.selected};
  check_round_trip(run_nullcone(pos_req));
  check_round_trip(run_singularities(pos_req));
}

TEST_CASE("membership JSON round trip") {
  Preset pos = make_preset("e8-pos", 1, 0);
  auto f = run_bfunction(AnalysisRequest{pos.quiver, pos.alpha, pos.selected}).family;
  for (auto z : {std::vector<Rational>{9, -7}, std::vector<Rational>{7, -6}}) {
    Membership m = membership_in_ztilde(f, z);
    Json j = encode(m);
    CHECK(encode(decode<Membership>(j)) == j);
  }
}

TEST_CASE("stacked layout of E6") {
  Quiver q = make_preset("e6-ex1", 1, 1).quiver;
  CHECK(stacked(q, DimVector{1, 3, 3, 3, 1, 2}) == "    2\n1 3 3 3 1");
  CHECK(stacked(a_linear(3), DimVector{1, 2, 1}) == "(1,2,1)");
}

TEST_CASE("cli exit codes") {
  const std::string a2 = data_dir() + "/quivers/a2.quiver";
  CHECK(cli({"decompose", "--quiver", a2, "--dim", "1,1"}).code == 0);
  CHECK(cli({"decompose", "--quiver", data_dir() + "/quivers/malformed.quiver", "--dim", "1,1,1"}).code == 2);
  CHECK(cli({"decompose", "--quiver", data_dir() + "/quivers/kronecker.quiver", "--dim", "1,1"}).code == 3);
  CHECK(cli({"decompose", "--quiver", a2, "--dim", "1,1,1"}).code == 2);
  CHECK(cli({"decompose", "--quiver", "/nonexistent/file", "--dim", "1"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"bfunction", "--preset", "nope"}).code == 2);
  CHECK(cli({"bfunction", "--preset", "e6-ex1", "--n", "0"}).code == 2);
  CHECK(cli({"hom", "--quiver", a2, "--dim", "2,2"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli JSON output parses and names its command") {
  const std::string a2 = data_dir() + "/quivers/a2.quiver";
  for (std::string cmd : {"decompose", "nullcone", "bfunction", "singularities"}) {
    Run r = cli({cmd, "--quiver", a2, "--dim", "1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["command"] == cmd);
  }
  Run b = cli({"bfunction", "--quiver", a2, "--dim", "1,1"});
  CHECK(b.out.find("at m = 1: s+1") != std::string::npos);
}

TEST_CASE("verify-certificate accepts stored certificates and rejects edits") {
  Run r = cli({"singularities", "--preset", "e6-ex1", "--n", "2", "--m", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const std::string path = "cli_test_certificate.json";
  {
    std::ofstream(path) << r.out;
  }
  CHECK(cli({"verify-certificate", "--certificate", path}).code == 0);
  Json j = Json::parse(r.out);
  j["verdict"]["certificate"]["root"]["rule"] = "good";
  {
    std::ofstream(path) << j.dump();
  }
  Run bad = cli({"verify-certificate", "--certificate", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("rejected") != std::string::npos);
  {
    std::ofstream(path) << "{not json";
  }
  CHECK(cli({"verify-certificate", "--certificate", path}).code == 2);
  std::remove(path.c_str());
}

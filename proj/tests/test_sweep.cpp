#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "unram/report.hpp"

using namespace unram;

TEST_CASE("sweep enumeration") {
  oracle::Setup a1("A1");
  auto pts = enumerate_points(a1.alcove, a1.omega, 4);
  REQUIRE(pts.size() == 4);
  CHECK(pts.front().barycentric == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(pts.back().barycentric == std::vector<Rational>{Rational(1), Rational(0)});
  oracle::Setup a1ad("A1", Isogeny::adjoint());
  CHECK(enumerate_points(a1ad.alcove, a1ad.omega, 4).size() == 7);
  CHECK(enumerate_points(a1.alcove, a1.omega, 1).size() == 1);
  for (const auto& label : std::vector<std::string>{"A3", "D4", "2A5"}) {
    oracle::Setup s(label);
    auto points = enumerate_points(s.alcove, s.omega, 4);
    CHECK(std::is_sorted(points.begin(), points.end()));
    std::set<RatVector> seen;
    for (const auto& x : points) {
      CHECK(s.alcove.contains(x.coordinates));
      CHECK(seen.insert(x.coordinates).second);
      for (const auto& w : s.omega) CHECK(reduce_to_alcove(s.alcove, s.omega, w.transform(x.coordinates)).point == x);
    }
  }
}

TEST_CASE("parallel sweep output is identical to the serial reference") {
  for (const auto& label : std::vector<std::string>{"A4", "D4", "C3"}) {
    oracle::Setup s(label);
    auto points = enumerate_points(s.alcove, s.omega, 4);
    SweepResult a = verify_points_serial(s.alcove, s.omega, s.vertices, points);
    SweepResult b = verify_points_parallel(s.alcove, s.omega, s.vertices, points, 4);
    CHECK(a.passed());
    CHECK(a.records == b.records);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].point == b.points[i].point);
      CHECK(a.points[i].r_group == b.points[i].r_group);
      REQUIRE(a.points[i].records.size() == b.points[i].records.size());
      for (std::size_t k = 0; k < a.points[i].records.size(); ++k) {
        CHECK(a.points[i].records[k].vertex == b.points[i].records[k].vertex);
        CHECK(a.points[i].records[k].element == b.points[i].records[k].element);
        CHECK(a.points[i].records[k].cocycle_value == b.points[i].records[k].cocycle_value);
      }
    }
    VerifyOptions serial, parallel;
    parallel.jobs = 3;
    DatumSpec spec = parse_spec(label);
    CHECK(cmd_verify(spec, serial).render(Format::records) == cmd_verify(spec, parallel).render(Format::records));
    CHECK(cmd_verify(spec, serial).render(Format::text) == cmd_verify(spec, parallel).render(Format::text));
  }
}

TEST_CASE("datum specs round-trip") {
  for (const std::string text : {"A5", "2A5 ad", "D4 sc", "3D4", "E6 --isogeny ad", "A3 custom[0,1,0;2,-1,0;-1,2,-1;0,-1,2]",
                                 "A3 --lattice 2,-1,0;-1,2,-1;0,-1,2", "D4 custom[1,0,0,0;0,1,0,0;0,0,1,1;0,0,0,2]", "G2 ad"}) {
    DatumSpec d = parse_spec(text);
    CAPTURE(text);
    CHECK(parse_spec(d.render()) == d);
    CHECK(parse_spec(d.render()).render() == d.render());
  }
  CHECK(parse_spec("A3 --lattice 2,-1,0;-1,2,-1;0,-1,2").render() == "A3 ad");
  CHECK(parse_spec("A3 custom[1,0,0;0,1,0;0,0,1]").render() == "A3 sc");
  CHECK(parse_spec("A3 custom[0,1,0;2,-1,0;-1,2,-1;0,-1,2]").render() == "A3 custom[1,0,1;0,1,0;0,0,2]");
  CHECK(parse_spec("2A5").render() == "2A5 sc");
  CHECK(parse_spec("3D4").build().frobenius->order == 3);
}

TEST_CASE("datum spec errors carry positions") {
  auto position = [](const std::string& text) {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return std::pair<std::size_t, std::size_t>(e.line, e.column);
    }
    return std::pair<std::size_t, std::size_t>(0, 0);
  };
  CHECK(position("Q5") == std::pair<std::size_t, std::size_t>(1, 1));
  CHECK(position("A5 xx") == std::pair<std::size_t, std::size_t>(1, 4));
  CHECK(position("A3 custom[1,x,0]") == std::pair<std::size_t, std::size_t>(1, 13));
  CHECK(position("A3 --lattice 1,0;1") == std::pair<std::size_t, std::size_t>(1, 18));
  CHECK(position("A3 sc ad") == std::pair<std::size_t, std::size_t>(1, 7));
  CHECK(position("") == std::pair<std::size_t, std::size_t>(1, 1));
  try {
    parse_spec_file("# comment\nA2 sc\n\nB3 zz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 4);
  }
  auto specs = parse_spec_file("A2 sc  # trailing\n\n# only comment\n2D4 ad\n");
  REQUIRE(specs.size() == 2);
  CHECK(specs[1].render() == "2D4 ad");
}

TEST_CASE("points and words") {
  CHECK(parse_point("1/3, 1/3") == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
  CHECK_THROWS_AS(parse_point("1/3,x"), ParseError);
  CHECK(parse_word("1,2,3", 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(parse_word("e", 3).empty());
  CHECK_THROWS_AS(parse_word("4", 3), ParseError);
  CHECK(parse_element("omega:2", 3).omega_image == std::size_t(2));
  CHECK_THROWS_AS(parse_element("omega:", 3), ParseError);
}

TEST_CASE("reports") {
  Report d = cmd_describe(parse_spec("E6 sc"));
  REQUIRE(d.records.size() == 1);
  CHECK(d.records[0]["omega_order"] == 3);
  CHECK(d.records[0]["hyperspecial"].size() == 3);
  CHECK(cmd_describe(parse_spec("G2 sc")).records[0]["omega_order"] == 1);
  CHECK(cmd_describe(parse_spec("2A5 sc")).records[0]["relative_type"] == "B3");
  Report r = cmd_rgroup(parse_spec("A2"), {Rational(1, 3), Rational(1, 3)});
  CHECK(r.records[0]["structure"] == "Z/3");
  Report moved = cmd_rgroup(parse_spec("A2"), {Rational(2), Rational(1, 3)});
  CHECK(moved.records[0]["moved"] == true);
  Report t = cmd_table(parse_spec("A3"), {Rational(1, 2), Rational(0), Rational(1, 2)});
  CHECK(t.records[0]["fibers"].size() == 2);
  VerifyOptions one;
  one.point = std::vector<Rational>(7, Rational(1, 18));
  Report e7 = cmd_verify(parse_spec("E7 sc"), one);
  CHECK(e7.failed == 0);
  bool seen = false;
  for (const auto& rec : e7.records)
    if (rec["vertex"] == 7 && rec["image"] == 7) {
      CHECK(rec["cocycle"] == "1/2");
      seen = true;
    }
  CHECK(seen);
  std::istringstream lines(cmd_omega(parse_spec("D4")).render(Format::records));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["schema"] == kSchema);
    ++count;
  }
  CHECK(count == 6);
  Report failing;
  nlohmann::ordered_json rec;
  failing.check(rec, false);
  CHECK(failing.exit_code() == 1);
  CHECK_THROWS_AS(cmd_pair(parse_spec("A3"), std::size_t(5), std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(cmd_pair(parse_spec("A3"), std::nullopt, std::string("1")), std::invalid_argument);
}

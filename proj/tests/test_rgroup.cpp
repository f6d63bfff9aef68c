#include <doctest.h>

#include "oracles.hpp"

using namespace unram;

TEST_CASE("stabilizer agrees with brute-force enumeration") {
  std::vector<std::string> labels = oracle::all_labels(3);
  for (const auto& t : {"2A2", "2A3", "2A4", "2A5", "2D3", "2D4"}) labels.push_back(t);
  std::mt19937 rng(424242);
  for (const auto& label : labels) {
    oracle::Setup s(label);
    CAPTURE(label);
    auto weyl = s.alcove.weyl().elements();
    auto box = oracle::box(s.alcove.dimension(), 3);
    for (int trial = 0; trial < 10; ++trial) {
      AlcovePoint x = oracle::random_point(s.alcove, rng);
      RGroupData r = stabilizer(s.alcove, s.omega, x);
      auto brute = oracle::brute_force_stabilizer(weyl, box, x.coordinates);
      REQUIRE(r.enumerated);
      CHECK(r.semidirect_check);
      CHECK(std::set<AffineTransform>(r.stabilizer_full.begin(), r.stabilizer_full.end()) == brute);
      std::size_t preserving = 0;
      for (const auto& g : brute) preserving += oracle::preserves_alcove(s.alcove, g);
      CHECK(preserving == r.omega_x.size());
    }
  }
}

TEST_CASE("R-groups of special points") {
  oracle::Setup a2("A2");
  RGroupData r = stabilizer(a2.alcove, a2.omega, a2.alcove.from_barycentric({Rational(1, 3), Rational(1, 3)}));
  CHECK(r.group.structure() == "Z/3");
  CHECK(r.reflection_type == "trivial");
  RGroupData origin = stabilizer(a2.alcove, a2.omega, a2.alcove.from_barycentric({Rational(0), Rational(0)}));
  CHECK(origin.group.is_trivial());
  CHECK(origin.reflection_type == "A2");
  CHECK(origin.full_order == 6);

  oracle::Setup b3("B3");
  RGroupData sym = stabilizer(b3.alcove, b3.omega, b3.alcove.point(b3.alcove.barycenter));
  CHECK(sym.group.structure() == "Z/2");

  oracle::Setup d4("D4");
  RGroupData k = stabilizer(d4.alcove, d4.omega, d4.alcove.point(d4.alcove.barycenter));
  CHECK(k.group.structure() == "Z/2 x Z/2");

  oracle::Setup a3("A3");
  RGroupData half = stabilizer(a3.alcove, a3.omega, a3.alcove.from_barycentric({Rational(1, 2), Rational(0), Rational(1, 2)}));
  CHECK(half.omega_x.size() == 2);
  CHECK(half.group.structure() == "Z/2");
  CHECK(half.reflection_type == "A1xA1");

  CHECK_THROWS(stabilizer(a2.alcove, a2.omega, AlcovePoint{{Rational(5), Rational(0)}, {}}));
}

TEST_CASE("large stabilizers fall back to generator checks") {
  oracle::Setup e7("E7");
  RGroupData r = stabilizer(e7.alcove, e7.omega, e7.alcove.point(RatVector(7, Rational(0))));
  CHECK_FALSE(r.enumerated);
  CHECK(r.semidirect_check);
  CHECK(r.reflection_order == 2903040);
}

TEST_CASE("Levi torsion injects") {
  auto labels = oracle::all_labels(5);
  for (const auto& t : oracle::twisted_labels(5)) labels.push_back(t);
  for (const auto& label : labels)
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      BasedRootDatum rel = relative_datum(standard_datum(label, iso)).datum;
      const std::size_t l = rel.semisimple_rank();
      CAPTURE(label);
      for (std::size_t mask = 0; mask < (1u << l); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < l; ++i)
          if (mask >> i & 1) subset.push_back(i);
        LeviData m = levi_datum(rel, subset);
        CHECK(m.injective);
        CHECK(m.support_certificate);
        CHECK(check_axioms(m.datum).empty());
      }
    }
}

TEST_CASE("comparison with the simply connected cover") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& rows : intermediate_lattices({'A', n})) {
      ScComparison c = sc_comparison(standard_datum("A" + std::to_string(n), Isogeny::custom(rows)));
      CHECK(c.injective);
    }
  for (const auto& rows : intermediate_lattices({'D', 4})) {
    ScComparison c = sc_comparison(standard_datum("D4", Isogeny::custom(rows)));
    CHECK(c.injective);
  }
}

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace unram;

namespace {

QmodZ q(long n, long d) { return QmodZ(n, d); }

// Points of the sweep fixed by the Omega element with the given image.
std::vector<AlcovePoint> fixed_points(const oracle::Setup& s, const OmegaElement& w, std::size_t bound) {
  std::vector<AlcovePoint> out;
  for (const auto& x : enumerate_points(s.alcove, s.omega, bound))
    if (w.transform(x.coordinates) == x.coordinates) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("Q/Z arithmetic") {
  CHECK(QmodZ(Rational(3, 2)) == q(1, 2));
  CHECK(QmodZ(Rational(-1, 3)) == q(2, 3));
  CHECK(QmodZ(Rational(5)).is_zero());
  CHECK((q(2, 3) + q(2, 3)) == q(1, 3));
  CHECK((q(1, 4) - q(1, 2)) == q(3, 4));
  CHECK((q(1, 6) * Integer(3)) == q(1, 2));
  CHECK(q(7, 4).str() == "3/4");
  CHECK(QmodZ().str() == "0");
}

TEST_CASE("A_n coefficients (n+1-i)d/(n+1)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::Setup s("A" + std::to_string(n));
    const OmegaElement& gen = s.by_image(1);
    CHECK(gen.transform.linear == s.alcove.weyl().from_word(fixture::a_word(n)));
    AffineTransform power = AffineTransform::identity(s.alcove.dimension());
    for (std::size_t d = 1; d <= n; ++d) {
      power = gen.transform * power;
      auto k = find_omega(s.omega, power);
      REQUIRE(k);
      const OmegaElement& r = s.omega[*k];
      auto points = fixed_points(s, r, n + 1);
      CAPTURE(n);
      CAPTURE(d);
      REQUIRE_FALSE(points.empty());
      for (std::size_t i = 1; i <= n; ++i) {
        const HyperspecialVertex& v = s.vertex(i);
        QmodZ expected(Rational(static_cast<long>((n + 1 - i) * d), static_cast<long>(n + 1)));
        for (const auto& x : points) {
          CHECK(cocycle(s.alcove, x.coordinates, v, r.word).value == expected);
          CHECK(pairing(s.alcove, v, r) == expected);
        }
      }
    }
  }
}

TEST_CASE("B_n and C_n coefficients are 1/2") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const char* fam : {"B", "C"}) {
      oracle::Setup s(fam + std::to_string(n));
      REQUIRE(s.omega.size() == 2);
      const OmegaElement& w = s.omega[1];
      REQUIRE(s.vertices.size() == 2);
      const HyperspecialVertex& v = s.vertices[1];
      for (const auto& x : fixed_points(s, w, 4)) CHECK(cocycle(s.alcove, x.coordinates, v, w.word).value == q(1, 2));
    }
}

TEST_CASE("D_n coefficients at omega_1") {
  for (std::size_t n : {3, 5, 7}) {
    oracle::Setup s("D" + std::to_string(n));
    const OmegaElement& w0 = s.by_image(n);
    CHECK(w0.transform.linear == s.alcove.weyl().from_word(fixture::d_block_word(n, true)));
    const HyperspecialVertex& v1 = s.vertex(1);
    AffineTransform p = w0.transform;
    std::vector<QmodZ> expected{q(1, 2), q(0, 1), q(1, 2)};
    for (std::size_t k = 0; k < 3; ++k) {
      const OmegaElement& r = s.omega[*find_omega(s.omega, p)];
      for (const auto& x : fixed_points(s, r, 4)) CHECK(cocycle(s.alcove, x.coordinates, v1, r.word).value == expected[k]);
      p = w0.transform * p;
    }
  }
  for (std::size_t n : {4, 6, 8}) {
    oracle::Setup s("D" + std::to_string(n));
    const HyperspecialVertex& v1 = s.vertex(1);
    std::vector<std::pair<std::size_t, QmodZ>> cases{{n, q(1, 2)}, {1, q(0, 1)}, {n - 1, q(1, 2)}};
    CHECK(s.by_image(n).transform.linear == s.alcove.weyl().from_word(fixture::d_block_word(n, false)));
    CHECK(s.by_image(1).transform.linear == s.alcove.weyl().from_word(fixture::d_w2_word(n)));
    for (const auto& [image, value] : cases) {
      const OmegaElement& r = s.by_image(image);
      auto points = fixed_points(s, r, n == 8 ? 2 : 4);
      REQUIRE_FALSE(points.empty());
      for (const auto& x : points) CHECK(cocycle(s.alcove, x.coordinates, v1, r.word).value == value);
    }
  }
}

TEST_CASE("E_6 and E_7 coefficients") {
  oracle::Setup e6("E6");
  const OmegaElement& w = e6.by_image(1);
  CHECK(w.transform.linear == e6.alcove.weyl().from_word(fixture::e6_word()));
  RatVector c = e6.alcove.barycenter;
  CHECK(cocycle(e6.alcove, c, e6.vertex(6), fixture::e6_word()).value == q(2, 3));
  CHECK(pairing(e6.alcove, e6.vertex(6), w) == q(2, 3));

  oracle::Setup e7("E7");
  const OmegaElement& w7 = e7.by_image(7);
  CHECK(w7.transform.linear == e7.alcove.weyl().from_word(fixture::e7_word()));
  CocycleCoefficient cc = cocycle(e7.alcove, e7.alcove.barycenter, e7.vertex(7), fixture::e7_word());
  CHECK(cc.value == q(1, 2));
  CHECK(QmodZ(Rational(3, 2)) == cc.value);
}

TEST_CASE("cocycle equals its telescoped form for any word") {
  std::mt19937 rng(17);
  for (const auto& label : std::vector<std::string>{"A3", "B3", "C3", "D4", "G2", "2A4", "2A5"}) {
    oracle::Setup s(label);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::size_t> word(len(rng));
      for (auto& i : word) i = rng() % s.alcove.rank();
      RatVector x = oracle::random_point(s.alcove, rng).coordinates;
      for (const auto& v : s.vertices) {
        CocycleCoefficient c = cocycle(s.alcove, x, v, word);
        CHECK(c.exact == oracle::closed_form_cocycle(v, x, s.alcove.weyl().from_word(word)));
      }
    }
  }
}

TEST_CASE("reduced words of each Omega element give one value") {
  std::mt19937 rng(23);
  for (const auto& label : oracle::all_labels(4)) {
    oracle::Setup s(label);
    AlcovePoint x = oracle::random_point(s.alcove, rng);
    for (const auto& w : s.omega) {
      auto words = s.alcove.weyl().all_reduced_words(w.transform.linear);
      CHECK(std::find(words.begin(), words.end(), w.word) != words.end());
      for (const auto& v : s.vertices) {
        QmodZ first = cocycle(s.alcove, x.coordinates, v, words.front()).value;
        for (const auto& word : words) CHECK(cocycle(s.alcove, x.coordinates, v, word).value == first);
      }
    }
  }
}

TEST_CASE("cocycle is additive on the stabilizer and pairing is bi-additive") {
  for (const auto& label : std::vector<std::string>{"A3", "A5", "D4", "D5", "E6", "2A5"}) {
    oracle::Setup s(label);
    for (const auto& x : enumerate_points(s.alcove, s.omega, 3)) {
      RGroupData rg = stabilizer(s.alcove, s.omega, x, 0);
      for (const auto& v : s.vertices)
        for (const auto& r1 : rg.omega_x)
          for (const auto& r2 : rg.omega_x) {
            const OmegaElement& r12 = rg.omega_x[*find_omega(rg.omega_x, r1.transform * r2.transform)];
            QmodZ lhs = cocycle(s.alcove, x.coordinates, v, r12.word).value;
            QmodZ rhs = cocycle(s.alcove, x.coordinates, v, r1.word).value + cocycle(s.alcove, x.coordinates, v, r2.word).value;
            CHECK(lhs == rhs);
          }
      ZetaData z = zeta(s.alcove, s.vertices, rg);
      CHECK(z.homomorphism);
      CHECK(z.surjective);
    }
  }
}

TEST_CASE("main identity at random points") {
  std::mt19937 rng(31);
  auto labels = oracle::all_labels(6);
  for (const auto& t : oracle::twisted_labels(6)) labels.push_back(t);
  for (const auto& label : labels) {
    oracle::Setup s(label);
    CAPTURE(label);
    for (int trial = 0; trial < 5; ++trial) {
      RGroupData rg = stabilizer(s.alcove, s.omega, oracle::random_point(s.alcove, rng, 3), 0);
      CHECK(verify_main_theorem(s.alcove, s.vertices, rg).passed);
    }
  }
}

TEST_CASE("packet tables") {
  oracle::Setup a2("A2");
  PacketTable t = packet_table(a2.alcove, a2.vertices,
                               stabilizer(a2.alcove, a2.omega, a2.alcove.point(a2.alcove.barycenter)));
  CHECK(t.fibers.size() == 3);
  oracle::Setup a3("A3");
  RGroupData half = stabilizer(a3.alcove, a3.omega, a3.alcove.from_barycentric({Rational(1, 2), Rational(0), Rational(1, 2)}));
  PacketTable h = packet_table(a3.alcove, a3.vertices, half);
  CHECK(h.fibers.size() == 2);
  for (const auto& f : h.fibers) CHECK(f.size() == 2);
  RGroupData trivial = stabilizer(a3.alcove, a3.omega, a3.alcove.from_barycentric({Rational(1, 5), Rational(1, 5), Rational(1, 7)}));
  CHECK(packet_table(a3.alcove, a3.vertices, trivial).fibers.size() == 1);
  oracle::Setup e6("E6");
  CHECK(packet_table(e6.alcove, e6.vertices, stabilizer(e6.alcove, e6.omega, e6.alcove.point(e6.alcove.barycenter)))
            .fibers.size() == 3);
}

TEST_CASE("lattice lemma on both sides") {
  auto labels = oracle::all_labels(8);
  for (const auto& t : oracle::twisted_labels(8)) labels.push_back(t);
  for (const auto& label : labels)
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      LatticeLemma l = lattice_lemma(standard_datum(label, iso));
      CAPTURE(label);
      CHECK(l.agrees);
    }
  for (const auto& rows : intermediate_lattices({'D', 4}))
    CHECK(lattice_lemma(standard_datum("D4", Isogeny::custom(rows))).agrees);
}

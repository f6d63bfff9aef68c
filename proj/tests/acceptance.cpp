// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace unram;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail << "first failure: " << what;
    }
  }
};

std::string ordinal_label(char family, std::size_t n) { return std::string(1, family) + std::to_string(n); }

std::size_t omega_expected(const std::string& label) {
  CartanType t = parse_type_label(label).base;
  switch (t.family) {
    case 'A': return t.rank + 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

bool omega_is_cyclic(const std::vector<OmegaElement>& omega) {
  for (const auto& w : omega) {
    AffineTransform p = w.transform;
    std::size_t order = 1;
    while (!p.is_identity()) {
      p = w.transform * p;
      ++order;
    }
    if (order == omega.size()) return true;
  }
  return false;
}

void omega_table(Outcome& out) {
  std::size_t types = 0;
  for (const auto& label : oracle::all_labels(8)) {
    oracle::Setup s(label);
    IntMatrix roots(s.datum.rank(), s.datum.semisimple_rank());
    for (std::size_t j = 0; j < s.datum.semisimple_rank(); ++j)
      for (std::size_t i = 0; i < s.datum.rank(); ++i) roots(i, j) = s.datum.simple_root(j)[i];
    FiniteAbelianGroup snf = cokernel_torsion(roots);
    out.require(s.omega.size() == omega_expected(label), label + " order");
    out.require(snf.order() == Integer(static_cast<unsigned long>(s.omega.size())), label + " SNF order");
    out.require(snf.is_cyclic() == omega_is_cyclic(s.omega), label + " structure");
    if (label[0] == 'D') {
      std::size_t n = parse_type_label(label).base.rank;
      out.require(snf.is_cyclic() == (n % 2 == 1), label + " Klein four iff n even");
    }
    oracle::Setup ad(label, Isogeny::adjoint());
    out.require(ad.omega.size() == 1, label + " adjoint");
    ++types;
  }
  out.detail << types << " types, alcove symmetries and Smith form agree";
}

std::vector<std::string> every_label(std::size_t max_rank) {
  auto labels = oracle::all_labels(max_rank);
  for (const auto& t : oracle::twisted_labels(max_rank)) labels.push_back(t);
  return labels;
}

void iota(Outcome& out) {
  std::size_t elements = 0;
  for (const auto& label : every_label(8))
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      oracle::Setup s(label, iso);
      for (const auto& w : s.omega) {
        out.require(iota_agrees(s.alcove, w), label + " iota descriptions");
        out.require(w.transform(s.alcove.barycenter) == s.alcove.barycenter, label + " barycenter");
        ++elements;
      }
    }
  out.detail << elements << " Omega elements, three descriptions of iota agree, barycenter fixed";
}

void relative_types(Outcome& out) {
  auto fixed_count = [](const BasedRootDatum& d) {
    WeylGroup w(d);
    const IntMatrix& s = d.frobenius->on_cocharacters.matrix;
    IntMatrix si = unimodular_inverse(s);
    std::size_t fixed = 0;
    for (const auto& g : w.elements())
      if (s * g * si == g) ++fixed;
    return Integer(static_cast<unsigned long>(fixed));
  };
  auto check = [&](const std::string& label, const std::string& expected) {
    BasedRootDatum d = standard_datum(label, Isogeny::simply_connected());
    RelativeDatum r = relative_datum(d);
    out.require(r.relative_type() == expected, label + " relative type " + r.relative_type());
    out.require(r.fibers_are_orbits, label + " fibers");
    out.require(fixed_count(d) == weyl_group_order(classify_cartan(r.datum.cartan())), label + " relative Weyl order");
  };
  for (std::size_t n = 3; n <= 4; ++n) check("2A" + std::to_string(2 * n - 1), ordinal_label('B', n));
  for (std::size_t n = 2; n <= 4; ++n) check("2D" + std::to_string(n + 1), ordinal_label('C', n));
  out.detail << "2A5 2A7 -> B3 B4, 2D3 2D4 2D5 -> C2 C3 C4, relative Weyl = sigma-fixed";
}

bool coefficient(const oracle::Setup& s, const OmegaElement& r, const HyperspecialVertex& v, const QmodZ& expected) {
  return cocycle(s.alcove, s.alcove.barycenter, v, r.word).value == expected && pairing(s.alcove, v, r) == expected;
}

void fixtures(Outcome& out) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::Setup s(ordinal_label('A', n));
    const OmegaElement& gen = s.by_image(1);
    out.require(gen.transform.linear == s.alcove.weyl().from_word(fixture::a_word(n)), s.datum.type_label + " generator word");
    AffineTransform power = AffineTransform::identity(s.alcove.dimension());
    for (std::size_t d = 1; d <= n; ++d) {
      power = gen.transform * power;
      const OmegaElement& r = s.omega[*find_omega(s.omega, power)];
      for (std::size_t i = 1; i <= n; ++i) {
        QmodZ expected(Rational(static_cast<long>((n + 1 - i) * d), static_cast<long>(n + 1)));
        out.require(coefficient(s, r, s.vertex(i), expected), "A" + std::to_string(n) + " coefficient");
        ++count;
      }
    }
  }
  for (std::size_t n = 2; n <= 6; ++n)
    for (char fam : {'B', 'C'}) {
      oracle::Setup s(ordinal_label(fam, n));
      out.require(coefficient(s, s.omega[1], s.vertices[1], QmodZ(1, 2)), ordinal_label(fam, n) + " coefficient");
      ++count;
    }
  for (std::size_t n = 3; n <= 8; ++n) {
    oracle::Setup s(ordinal_label('D', n));
    const HyperspecialVertex& v1 = s.vertex(1);
    if (n % 2 == 1) {
      AffineTransform p = s.by_image(n).transform;
      for (const QmodZ& e : {QmodZ(1, 2), QmodZ(0, 1), QmodZ(1, 2)}) {
        out.require(coefficient(s, s.omega[*find_omega(s.omega, p)], v1, e), ordinal_label('D', n) + " coefficient");
        p = s.by_image(n).transform * p;
        ++count;
      }
    } else {
      for (const auto& [image, e] : std::vector<std::pair<std::size_t, QmodZ>>{{n, QmodZ(1, 2)}, {1, QmodZ(0, 1)}, {n - 1, QmodZ(1, 2)}}) {
        out.require(coefficient(s, s.by_image(image), v1, e), ordinal_label('D', n) + " coefficient");
        ++count;
      }
    }
  }
  oracle::Setup e6("E6");
  out.require(coefficient(e6, e6.by_image(1), e6.vertex(6), QmodZ(2, 3)), "E6 coefficient");
  oracle::Setup e7("E7");
  CocycleCoefficient c = cocycle(e7.alcove, e7.alcove.barycenter, e7.vertex(7), fixture::e7_word());
  out.require(c.exact == Rational(3, 2) && c.value == QmodZ(1, 2), "E7 coefficient");
  out.require(pairing(e7.alcove, e7.vertex(7), e7.by_image(7)) == QmodZ(1, 2), "E7 pairing");
  count += 2;
  out.detail << count << " coefficients for A1-A6, B/C2-6, D3-8, E6 (2/3), E7 (3/2 = 1/2 mod Z)";
}

void sweep(Outcome& out) {
  std::vector<std::string> labels;
  for (const auto& l : oracle::all_labels(5))
    if (omega_expected(l) > 1) labels.push_back(l);
  for (const auto& l : {"E6", "E7", "2A5", "2D3"}) labels.push_back(l);
  std::size_t points = 0, records = 0, failures = 0;
  for (const auto& label : labels) {
    oracle::Setup s(label);
    auto pts = enumerate_points(s.alcove, s.omega, 4);
    SweepResult r = verify_points_parallel(s.alcove, s.omega, s.vertices, pts, 0);
    points += r.points.size();
    records += r.records;
    failures += r.failures;
    out.require(r.passed(), label + " sweep");
  }
  out.detail << labels.size() << " types, " << points << " points, " << records << " identities, " << failures
             << " failures";
}

// w . f = f o w^-1 on facet functionals; facet 0 contributes its linear part -theta.
bool permutes_facets(const Alcove& a, const IntMatrix& w, const std::vector<std::size_t>& perm) {
  IntMatrix contragredient = unimodular_inverse(w).transpose();
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (contragredient * a.facets[i].linear != a.facets[perm[i]].linear) return false;
  return true;
}

void reduced_words(Outcome& out) {
  std::mt19937 rng(6);
  std::size_t words = 0;
  for (const auto& label : oracle::all_labels(4)) {
    oracle::Setup s(label);
    AlcovePoint x = oracle::random_point(s.alcove, rng);
    for (const auto& w : s.omega)
      for (const auto& v : s.vertices) {
        auto all = s.alcove.weyl().all_reduced_words(w.transform.linear);
        QmodZ first = cocycle(s.alcove, x.coordinates, v, all.front()).value;
        for (const auto& word : all) {
          out.require(cocycle(s.alcove, x.coordinates, v, word).value == first, label + " reduced word");
          ++words;
        }
      }
  }
  auto same_values = [&](const oracle::Setup& s, const std::vector<std::size_t>& word, const OmegaElement& w) {
    for (const auto& v : s.vertices)
      if (cocycle(s.alcove, s.alcove.barycenter, v, word).value != cocycle(s.alcove, s.alcove.barycenter, v, w.word).value)
        return false;
    return true;
  };
  std::size_t explicit_words = 0;
  for (const auto& f : fixture::omega_words(8)) {
    oracle::Setup s(f.label);
    const OmegaElement& w = s.by_image(f.image);
    out.require(s.alcove.weyl().from_word(f.word) == w.transform.linear, f.label + " explicit word");
    out.require(s.alcove.weyl().length(w.transform.linear) == f.word.size(), f.label + " explicit word is reduced");
    out.require(same_values(s, f.word, w), f.label + " explicit word value");
    ++explicit_words;
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    oracle::Setup s(ordinal_label('B', n));
    std::vector<std::size_t> perm(n + 1);
    for (std::size_t i = 0; i <= n; ++i) perm[i] = n - i;
    const OmegaElement& w = s.by_image(n);
    out.require(permutes_facets(s.alcove, w.transform.linear, perm), s.datum.type_label + " matrix description");
    out.require(w.word.size() == n * (n + 1) / 2, s.datum.type_label + " length");
    ++explicit_words;
  }
  for (std::size_t n = 4; n <= 8; n += 2) {
    oracle::Setup s(ordinal_label('D', n));
    std::vector<std::size_t> perm(n + 1);
    for (std::size_t i = 2; i + 2 <= n; ++i) perm[i] = n - i;
    perm[0] = n - 1;
    perm[n - 1] = 0;
    perm[1] = n;
    perm[n] = 1;
    out.require(permutes_facets(s.alcove, s.by_image(n - 1).transform.linear, perm), s.datum.type_label + " w3 description");
    ++explicit_words;
  }
  out.detail << words << " reduced words at rank <= 4 agree, " << explicit_words << " explicit descriptions match";
}

void lattice_lemma_all(Outcome& out) {
  std::size_t data = 0;
  for (const auto& label : every_label(8))
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      BasedRootDatum d = standard_datum(label, iso);
      out.require(lattice_lemma(d).agrees, label + " lattice lemma");
      if (d.frobenius) {
        BasedRootDatum split = d;
        split.frobenius.reset();
        out.require(lattice_lemma(split).agrees, label + " lattice lemma, trivial sigma");
      }
      ++data;
    }
  out.detail << data << " data, coinvariant torsion equals the cokernel";
}

void injectivity(Outcome& out) {
  std::size_t lattices = 0, subsets = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& rows : intermediate_lattices({'A', n})) {
      out.require(sc_comparison(standard_datum(ordinal_label('A', n), Isogeny::custom(rows))).injective, "A sc comparison");
      ++lattices;
    }
  for (const auto& rows : intermediate_lattices({'D', 4})) {
    out.require(sc_comparison(standard_datum("D4", Isogeny::custom(rows))).injective, "D4 sc comparison");
    ++lattices;
  }
  for (const auto& label : every_label(5))
    for (const auto& iso : {Isogeny::simply_connected(), Isogeny::adjoint()}) {
      BasedRootDatum rel = relative_datum(standard_datum(label, iso)).datum;
      const std::size_t l = rel.semisimple_rank();
      for (std::size_t mask = 0; mask < (1u << l); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < l; ++i)
          if (mask >> i & 1) subset.push_back(i);
        LeviData m = levi_datum(rel, subset);
        out.require(m.injective && m.support_certificate, label + " Levi");
        ++subsets;
      }
    }
  out.detail << lattices << " intermediate lattices, " << subsets << " Levi subsets";
}

void brute_force(Outcome& out) {
  std::vector<std::string> labels = oracle::all_labels(3);
  for (const auto& t : {"2A2", "2A3", "2A4", "2A5", "2A6", "2D3", "2D4"}) labels.push_back(t);
  std::mt19937 rng(9);
  std::size_t points = 0;
  for (const auto& label : labels) {
    oracle::Setup s(label);
    auto weyl = s.alcove.weyl().elements();
    auto box = oracle::box(s.alcove.dimension(), 3);
    for (int trial = 0; trial < 50; ++trial) {
      AlcovePoint x = oracle::random_point(s.alcove, rng);
      RGroupData r = stabilizer(s.alcove, s.omega, x);
      auto brute = oracle::brute_force_stabilizer(weyl, box, x.coordinates);
      std::size_t preserving = 0;
      for (const auto& g : brute) preserving += oracle::preserves_alcove(s.alcove, g);
      out.require(r.enumerated && std::set<AffineTransform>(r.stabilizer_full.begin(), r.stabilizer_full.end()) == brute,
                  label + " stabilizer");
      out.require(preserving == r.omega_x.size(), label + " Omega_x");
      ++points;
    }
  }
  out.detail << labels.size() << " types, " << points << " points match the scan over W x [-3,3]^n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Omega table", omega_table},
      {"iota and barycenter", iota},
      {"relative types", relative_types},
      {"coefficient fixtures", fixtures},
      {"main identity sweep, denominators <= 4", sweep},
      {"reduced-word independence and explicit words", reduced_words},
      {"lattice lemma", lattice_lemma_all},
      {"sc comparison and Levi injectivity", injectivity},
      {"stabilizer against brute force", brute_force},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s: %s [%zu checks, %.1fs]\n", i + 1, out.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), out.detail.str().c_str(), out.checks, seconds);
    std::fflush(stdout);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}

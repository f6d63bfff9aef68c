#include "unram/packet.hpp"

#include <algorithm>
#include <map>

namespace unram {

QmodZ::QmodZ(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  den_ = c.get_den();
  mpz_fdiv_r(num_.get_mpz_t(), c.get_num_mpz_t(), den_.get_mpz_t());
  if (num_ == 0) den_ = 1;
}

std::string QmodZ::str() const { return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str(); }

namespace {

RatVector image_coweight(const Alcove& a, const OmegaElement& r) {
  if (r.vertex_image == 0) return RatVector(a.dimension(), Rational(0));
  return a.fundamental_coweights.at(r.vertex_image - 1);
}

}  // namespace

QmodZ pairing(const Alcove& a, const HyperspecialVertex& v, const OmegaElement& r) {
  return QmodZ(dot(v.coweight, image_coweight(a, r)));
}

PairingTable pairing_table(const Alcove& a, const std::vector<HyperspecialVertex>& vertices,
                           const std::vector<OmegaElement>& omega) {
  PairingTable t{vertices, omega, {}};
  for (const auto& v : vertices) {
    std::vector<QmodZ> row;
    for (const auto& r : omega) row.push_back(pairing(a, v, r));
    t.entries.push_back(std::move(row));
  }
  return t;
}

ZetaData zeta(const Alcove& a, const std::vector<HyperspecialVertex>& vertices, const RGroupData& rg) {
  ZetaData z;
  for (const auto& v : vertices) {
    std::vector<QmodZ> ch;
    for (const auto& r : rg.omega_x) ch.push_back(pairing(a, v, r));
    z.characters.push_back(std::move(ch));
  }
  std::vector<std::vector<QmodZ>> uniq = z.characters;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  z.distinct = uniq.size();
  z.surjective = z.distinct == rg.omega_x.size();

  z.homomorphism = true;
  for (std::size_t p = 0; p < rg.omega_x.size(); ++p)
    for (std::size_t q = 0; q < rg.omega_x.size(); ++q) {
      auto k = find_omega(rg.omega_x, rg.omega_x[p].transform * rg.omega_x[q].transform);
      if (!k) {
        z.homomorphism = false;
        continue;
      }
      for (std::size_t v = 0; v < vertices.size(); ++v)
        if (z.characters[v][*k] != z.characters[v][p] + z.characters[v][q]) z.homomorphism = false;
    }
  const Cokernel& classes = a.coweight_classes();
  const std::size_t l = a.rank();
  auto lift = [&](const HyperspecialVertex& v) {
    return v.node == 0 ? IntVector(l, Integer(0)) : unit_vector(l, v.node - 1);
  };
  for (const auto& u : vertices)
    for (const auto& v : vertices) {
      IntVector sum = add(lift(u), lift(v));
      auto it = std::find_if(vertices.begin(), vertices.end(),
                             [&](const HyperspecialVertex& w) { return classes.same_class(lift(w), sum); });
      if (it == vertices.end()) {
        z.homomorphism = false;
        continue;
      }
      for (const auto& r : rg.omega_x)
        if (pairing(a, *it, r) != pairing(a, u, r) + pairing(a, v, r)) z.homomorphism = false;
    }
  return z;
}

QmodZ keys_base(const Alcove& a, const RatVector& x, const HyperspecialVertex& v, std::size_t simple_index) {
  if (dot(a.reduced.simple_coroot(simple_index), v.coweight) != 1) return QmodZ();
  return QmodZ(dot(a.reduced.simple_root(simple_index), x));
}

CocycleCoefficient cocycle(const Alcove& a, const RatVector& x, const HyperspecialVertex& v,
                           const std::vector<std::size_t>& word) {
  CocycleCoefficient c;
  c.point = x;
  c.vertex = v.node;
  c.word_used = word;
  c.element = a.weyl().element(word);
  c.exact = 0;
  RatVector y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::size_t i = *it;
    if (dot(a.reduced.simple_coroot(i), v.coweight) == 1) c.exact += dot(a.reduced.simple_root(i), y);
    y = unram::apply(a.weyl().reflection(i), y);
  }
  c.value = QmodZ(c.exact);
  return c;
}

CocycleCoefficient cocycle(const Alcove& a, const RatVector& x, const HyperspecialVertex& v, const IntMatrix& w) {
  return cocycle(a, x, v, a.weyl().reduced_word(w));
}

TheoremReport verify_main_theorem(const Alcove& a, const std::vector<HyperspecialVertex>& vertices,
                                  const RGroupData& rg) {
  TheoremReport rep;
  rep.point = rg.point;
  for (const auto& v : vertices)
    for (const auto& r : rg.omega_x) {
      TheoremRecord rec;
      rec.vertex = v.node;
      rec.element = r.vertex_image;
      rec.word = r.word;
      rec.cocycle_value = cocycle(a, rg.point.coordinates, v, r.word).value;
      rec.pairing_value = pairing(a, v, r);
      rec.pass = rec.cocycle_value == rec.pairing_value;
      if (!rec.pass) rep.passed = false;
      rep.records.push_back(std::move(rec));
    }
  std::sort(rep.records.begin(), rep.records.end(), [](const TheoremRecord& p, const TheoremRecord& q) {
    return p.vertex != q.vertex ? p.vertex < q.vertex : p.element < q.element;
  });
  return rep;
}

PacketTable packet_table(const Alcove& a, const std::vector<HyperspecialVertex>& vertices, const RGroupData& rg) {
  PacketTable t;
  t.point = rg.point;
  for (const auto& r : rg.omega_x) t.r_group.push_back(r.vertex_image);
  std::map<std::vector<QmodZ>, std::size_t> fiber_of;
  for (const auto& v : vertices) {
    PacketRow row;
    row.vertex = v.node;
    for (const auto& r : rg.omega_x) row.character.push_back(pairing(a, v, r));
    auto [it, fresh] = fiber_of.emplace(row.character, t.fibers.size());
    if (fresh) t.fibers.emplace_back();
    row.fiber = it->second;
    t.fibers[row.fiber].push_back(v.node);
    t.rows.push_back(std::move(row));
  }
  return t;
}

LatticeLemma lattice_lemma(const BasedRootDatum& d) {
  DiagramAutomorphism s = frobenius_of(d);
  LatticeLemma out;

  QuotientLattice y = coinvariants_mod_torsion(d.character_lattice, s.on_characters);
  std::vector<IntVector> e;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    IntVector r = y.projection(d.simple_root(i));
    if (std::find(e.begin(), e.end(), r) == e.end()) e.push_back(r);
  }
  out.torsion_quotient = cokernel_torsion(IntMatrix::from_columns(e, y.lattice.rank));

  const std::size_t l = d.semisimple_rank();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < l; ++i) rows.push_back(d.simple_root(i));
  IntMatrix to_coweights = IntMatrix::from_rows(rows, d.rank());
  IntMatrix perm(l, l);
  for (std::size_t i = 0; i < l; ++i) perm(s.permutation[i], i) = 1;
  Lattice pl = Lattice::standard(l, "w");
  Sublattice fixed = fixed_sublattice(d.cocharacter_lattice, s.on_cocharacters);
  Sublattice fixed_ad = fixed_sublattice(pl, LatticeMap(pl, pl, perm));
  IntMatrix img = to_coweights * fixed.embedding.matrix;
  IntMatrix k(fixed_ad.lattice.rank, fixed.lattice.rank);
  for (std::size_t j = 0; j < img.cols(); ++j) {
    auto col = solve_integer(fixed_ad.embedding.matrix, img.column(j));
    if (!col) throw std::logic_error("fixed cocharacters do not map into fixed coweights");
    for (std::size_t i = 0; i < k.rows(); ++i) k(i, j) = (*col)[i];
  }
  out.cokernel = cokernel_torsion(k);
  out.agrees = out.torsion_quotient.invariant_factors == out.cokernel.invariant_factors;
  return out;
}

}  // namespace unram

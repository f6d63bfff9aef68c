#include "unram/rgroup.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace unram {

namespace {

AffineTransform reflection_through(const IntVector& root, const IntVector& coroot, const Integer& level) {
  const std::size_t n = coroot.size();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s(r, c) -= coroot[r] * root[c];
  return {s, scale(level, coroot)};
}

std::vector<AffineTransform> closure(const std::vector<AffineTransform>& gens, std::size_t n, std::size_t cap) {
  std::unordered_set<AffineTransform, AffineTransformHash> seen;
  std::vector<AffineTransform> out{AffineTransform::identity(n)};
  seen.insert(out.front());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      AffineTransform h = out[k] * g;
      if (seen.insert(h).second) {
        if (out.size() >= cap) throw std::length_error("stabilizer larger than the enumeration cap");
        out.push_back(std::move(h));
      }
    }
  return out;
}

}  // namespace

RGroupData stabilizer(const Alcove& a, const std::vector<OmegaElement>& omega, const AlcovePoint& x,
                      std::size_t enumeration_limit) {
  if (x.coordinates.size() != a.dimension()) throw std::invalid_argument("point has the wrong dimension");
  if (!a.contains(x.coordinates)) throw std::invalid_argument("point lies outside the closed alcove");
  const std::size_t n = a.dimension();
  RGroupData r;
  r.point = a.point(x.coordinates);
  for (const auto& w : omega)
    if (w.transform(x.coordinates) == x.coordinates) r.omega_x.push_back(w);

  std::vector<IntVector> classes;
  for (const auto& w : r.omega_x) classes.push_back(a.translation_classes().torsion_class(w.transform.translation));
  r.group = generated_subgroup(classes, a.translation_classes().torsion().invariant_factors);

  for (std::size_t k = 0; k < r.point.barycentric.size(); ++k)
    if (r.point.barycentric[k] == 0) {
      r.vanishing_facets.push_back(k);
      r.reflection_generators.push_back(a.simple_reflection(k));
    }
  for (auto k : a.positive_roots) {
    const IntVector& b = a.reduced.roots[k];
    Rational v = dot(b, x.coordinates);
    if (v == 0 || v == 1) r.reflections.push_back(reflection_through(b, a.reduced.coroots[k], v.get_num()));
  }

  // type of the reflection part from the facets through the point
  const std::size_t m = r.vanishing_facets.size();
  IntMatrix c(m, m);
  auto facet_coroot = [&](std::size_t k) {
    return k == 0 ? scale(Integer(-1), a.highest_coroot_dual) : a.reduced.simple_coroot(k - 1);
  };
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      c(p, q) = dot(a.facets[r.vanishing_facets[q]].linear, facet_coroot(r.vanishing_facets[p]));
  auto comps = classify_cartan(c);
  r.reflection_type = comps.empty() ? "trivial" : cartan_label(comps);
  r.reflection_order = weyl_group_order(comps);
  r.full_order = r.reflection_order * static_cast<unsigned long>(r.omega_x.size());

  std::set<AffineTransform> reflection_set(r.reflections.begin(), r.reflections.end());
  bool ok = true;
  for (const auto& g : r.reflection_generators)
    if (!reflection_set.count(g)) ok = false;

  if (r.full_order <= enumeration_limit) {
    r.enumerated = true;
    r.stabilizer_reflections = closure(r.reflection_generators, n, enumeration_limit + 1);
    std::sort(r.stabilizer_reflections.begin(), r.stabilizer_reflections.end());
    std::set<AffineTransform> part(r.stabilizer_reflections.begin(), r.stabilizer_reflections.end());
    if (Integer(static_cast<unsigned long>(part.size())) != r.reflection_order) ok = false;
    for (const auto& s : r.reflections)
      if (!part.count(s)) ok = false;
    std::set<AffineTransform> full;
    for (const auto& w : r.omega_x) {
      if (!w.transform.is_identity() && part.count(w.transform)) ok = false;
      AffineTransform inv = w.transform.inverse();
      for (const auto& g : r.reflection_generators)
        if (!part.count(w.transform * g * inv)) ok = false;
      for (const auto& s : r.stabilizer_reflections) full.insert(w.transform * s);
    }
    if (Integer(static_cast<unsigned long>(full.size())) != r.full_order) ok = false;
    for (const auto& g : full)
      if (g(x.coordinates) != x.coordinates) ok = false;
    r.stabilizer_full.assign(full.begin(), full.end());
  } else {
    for (const auto& w : r.omega_x) {
      if (!w.transform.is_identity() && is_zero(w.iota_class)) ok = false;
      AffineTransform inv = w.transform.inverse();
      for (const auto& s : r.reflections)
        if (!reflection_set.count(w.transform * s * inv)) ok = false;
    }
  }
  r.semidirect_check = ok;
  return r;
}

std::vector<std::size_t> levi_subset(const BasedRootDatum& relative, const RatVector& positive_part) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < relative.semisimple_rank(); ++i)
    if (dot(relative.simple_coroot(i), positive_part) == 0) out.push_back(i);
  return out;
}

LeviData levi_datum(const BasedRootDatum& relative, const std::vector<std::size_t>& subset) {
  const std::size_t l = relative.semisimple_rank(), n = relative.rank();
  std::vector<bool> in(l, false);
  for (auto i : subset) {
    if (i >= l) throw std::invalid_argument("subset index out of range");
    in[i] = true;
  }
  LeviData out;
  out.subset = subset;
  BasedRootDatum& m = out.datum;
  m = relative;
  m.roots.clear();
  m.coroots.clear();
  m.simple_indices.clear();
  m.frobenius.reset();
  std::vector<std::size_t> new_index(relative.roots.size(), relative.roots.size());
  for (std::size_t k = 0; k < relative.roots.size(); ++k) {
    RatVector e = relative.root_expansion(k);
    bool inside = true;
    for (std::size_t i = 0; i < l; ++i)
      if (!in[i] && e[i] != 0) inside = false;
    if (!inside) continue;
    new_index[k] = m.roots.size();
    m.roots.push_back(relative.roots[k]);
    m.coroots.push_back(relative.coroots[k]);
  }
  std::vector<IntVector> levi_simple, group_simple;
  for (std::size_t i = 0; i < l; ++i) {
    group_simple.push_back(relative.simple_root(i));
    if (!in[i]) continue;
    m.simple_indices.push_back(new_index[relative.simple_indices[i]]);
    levi_simple.push_back(relative.simple_root(i));
  }
  m.reduced_flag = true;
  for (const auto& r : m.roots)
    if (std::find(m.roots.begin(), m.roots.end(), scale(Integer(2), r)) != m.roots.end()) m.reduced_flag = false;
  m.type_label = m.semisimple_rank() == 0 ? "T" : root_system_label(m);

  Cokernel levi(IntMatrix::from_columns(levi_simple, n));
  Cokernel group(IntMatrix::from_columns(group_simple, n));
  out.torsion_levi = levi.torsion();
  out.torsion_group = group.torsion();
  for (const auto& g : out.torsion_levi.generators) out.images.push_back(group.class_of(g));

  out.injective = true;
  for (const auto& y : levi.torsion_elements()) {
    if (levi.contains(y)) continue;
    if (group.contains(y)) {
      out.injective = false;
      out.witness = y;
      break;
    }
  }
  // Lemma argument: E is independent, so a Levi torsion element lying in ZE has its
  // E-expansion supported on the subset and is therefore already zero in Y/ZE'.
  IntMatrix emat = IntMatrix::from_columns(group_simple, n);
  out.support_certificate = group_simple.empty() || rank(to_rational(emat)) == l;
  for (const auto& y : levi.torsion_elements()) {
    auto coeff = solve_integer(emat, y);
    if (!coeff) continue;
    for (std::size_t i = 0; i < l; ++i)
      if (!in[i] && (*coeff)[i] != 0) out.support_certificate = false;
    if (!levi.contains(y)) out.support_certificate = false;
  }
  return out;
}

BasedRootDatum simply_connected_cover(const BasedRootDatum& d) {
  IntMatrix c = d.cartan();
  const std::size_t l = c.rows();
  std::vector<IntVector> sroots, scoroots;
  for (std::size_t j = 0; j < l; ++j) {
    sroots.push_back(c.column(j));
    scoroots.push_back(unit_vector(l, j));
  }
  Lattice x = Lattice::standard(l, "x"), xc = Lattice::standard(l, "y");
  BasedRootDatum sc = generate_datum(x, xc, sroots, scoroots, d.type_label);
  if (d.frobenius && !d.frobenius->is_identity()) {
    IntMatrix p(l, l);
    for (std::size_t i = 0; i < l; ++i) p(d.frobenius->permutation[i], i) = 1;
    DiagramAutomorphism s;
    s.permutation = d.frobenius->permutation;
    s.on_characters = LatticeMap(x, x, p);
    s.on_cocharacters = LatticeMap(xc, xc, p);
    s.order = d.frobenius->order;
    sc.frobenius = s;
  }
  return sc;
}

ScComparison sc_comparison(const BasedRootDatum& d) {
  if (!d.is_semisimple()) throw std::invalid_argument("comparison with the simply connected cover needs a semisimple datum");
  BasedRootDatum sc = simply_connected_cover(d);
  RelativeDatum rg = relative_datum(d), rs = relative_datum(sc);
  const IntMatrix& eg = rg.fixed_cocharacters.embedding.matrix;
  const IntMatrix& es = rs.fixed_cocharacters.embedding.matrix;
  std::vector<IntVector> coroots;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) coroots.push_back(d.simple_coroot(i));
  IntMatrix into = IntMatrix::from_columns(coroots, d.rank()) * es;
  IntMatrix k(eg.cols(), es.cols());
  for (std::size_t j = 0; j < es.cols(); ++j) {
    auto col = solve_integer(eg, into.column(j));
    if (!col) throw std::logic_error("fixed coroot lattice does not map into fixed cocharacters");
    for (std::size_t i = 0; i < eg.cols(); ++i) k(i, j) = (*col)[i];
  }
  ScComparison out;
  out.map = k.transpose();
  auto simple_cols = [](const BasedRootDatum& r) {
    std::vector<IntVector> s;
    for (std::size_t i = 0; i < r.semisimple_rank(); ++i) s.push_back(r.simple_root(i));
    return IntMatrix::from_columns(s, r.rank());
  };
  Cokernel cg(simple_cols(rg.datum)), cs(simple_cols(rs.datum));
  out.torsion_group = cg.torsion();
  out.torsion_simply_connected = cs.torsion();
  out.injective = true;
  for (const auto& y : cg.torsion_elements()) {
    if (cg.contains(y)) continue;
    if (cs.contains(out.map * y)) {
      out.injective = false;
      out.witness = y;
      break;
    }
  }
  return out;
}

}  // namespace unram

#include "unram/affine.hpp"

#include <algorithm>

namespace unram {

AffineTransform AffineTransform::inverse() const {
  IntMatrix inv = unimodular_inverse(linear);
  return {inv, scale(Integer(-1), inv * translation)};
}

namespace {

std::vector<RatVector> dual_basis(const std::vector<IntVector>& rows) {
  const std::size_t l = rows.size();
  auto inv = inverse(to_rational(IntMatrix::from_rows(rows)));
  if (!inv) throw std::invalid_argument("simple system is not a basis");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < l; ++i) out.push_back(inv->column(i));
  return out;
}

BasedRootDatum reduced_part(const BasedRootDatum& d) {
  BasedRootDatum r = d;
  r.roots.clear();
  r.coroots.clear();
  r.simple_indices.clear();
  std::vector<std::size_t> new_index(d.roots.size(), d.roots.size());
  for (std::size_t k = 0; k < d.roots.size(); ++k) {
    if (d.find_root(scale(Integer(2), d.roots[k]))) continue;
    new_index[k] = r.roots.size();
    r.roots.push_back(d.roots[k]);
    r.coroots.push_back(d.coroots[k]);
  }
  for (auto s : d.simple_indices) {
    if (new_index[s] == d.roots.size()) throw std::logic_error("a simple root is divisible in the root system");
    r.simple_indices.push_back(new_index[s]);
  }
  r.reduced_flag = true;
  return r;
}

std::vector<Integer> integer_expansion(const RatVector& e) {
  std::vector<Integer> out;
  for (const auto& c : e) {
    if (c.get_den() != 1) throw std::logic_error("non-integral mark");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

BasedRootDatum apartment_datum(const BasedRootDatum& d) { return dual_datum(relative_datum(d).datum); }

Alcove build_alcove(const BasedRootDatum& d) {
  Alcove a;
  a.datum = d;
  const std::size_t dim = d.cocharacter_lattice.rank;
  if (d.semisimple_rank() == 0) {
    if (dim != 0) throw std::invalid_argument("alcove requires a semisimple datum (central torus of rank " + std::to_string(dim) + ")");
    a.degenerate = true;
    a.reduced = d;
    a.marks = {Integer(1)};
    a.dual_marks = {Integer(1)};
    a.facets = {AffineFunctional{{}, Integer(1)}};
    a.vertices = {RatVector{}};
    a.barycenter = RatVector{};
    a.coxeter_number = 1;
    a.type_label = "trivial";
    a.weyl_.emplace(d);
    a.translation_classes_.emplace(IntMatrix(0, 0));
    a.coweight_classes_.emplace(IntMatrix(0, 0));
    return a;
  }
  if (!d.is_semisimple())
    throw std::invalid_argument("alcove requires a semisimple datum (semisimple rank " + std::to_string(d.semisimple_rank()) +
                                " < rank " + std::to_string(dim) + ")");
  a.reduced = reduced_part(d);
  const BasedRootDatum& r = a.reduced;
  auto comps = classify_cartan(r.cartan());
  if (comps.size() != 1) throw std::invalid_argument("alcove requires an irreducible datum, got " + cartan_label(comps));
  a.type_label = comps[0].type.label();
  a.weyl_.emplace(r);
  const std::size_t l = r.semisimple_rank();

  std::size_t top = r.roots.size();
  Rational best = 0, best_dual = 0;
  RatVector top_exp, top_dual_exp;
  for (std::size_t k = 0; k < r.roots.size(); ++k) {
    RatVector e = r.root_expansion(k);
    Rational h = 0;
    for (const auto& c : e) h += c;
    if (h > 0) a.positive_roots.push_back(k);
    if (h > best) {
      best = h;
      top = k;
      top_exp = e;
    }
    RatVector f = r.coroot_expansion(k);
    Rational hd = 0;
    for (const auto& c : f) hd += c;
    if (hd > best_dual) {
      best_dual = hd;
      top_dual_exp = f;
    }
  }
  a.highest_coroot = r.roots[top];
  a.highest_coroot_dual = r.coroots[top];
  a.marks.push_back(1);
  for (auto& m : integer_expansion(top_exp)) a.marks.push_back(m);
  a.dual_marks.push_back(1);
  for (auto& m : integer_expansion(top_dual_exp)) a.dual_marks.push_back(m);

  a.facets.push_back({scale(Integer(-1), a.highest_coroot), Integer(1)});
  std::vector<IntVector> sroots, scoroots;
  for (std::size_t i = 0; i < l; ++i) {
    sroots.push_back(r.simple_root(i));
    scoroots.push_back(r.simple_coroot(i));
    a.facets.push_back({r.simple_root(i), Integer(0)});
  }
  a.fundamental_coweights = dual_basis(sroots);
  a.fundamental_weights = dual_basis(scoroots);
  a.vertices.push_back(RatVector(dim, Rational(0)));
  for (std::size_t i = 0; i < l; ++i) a.vertices.push_back(scale(Rational(1) / Rational(a.marks[i + 1]), a.fundamental_coweights[i]));
  a.coxeter_number = 0;
  for (const auto& m : a.marks) a.coxeter_number += m;
  RatVector rho(dim, Rational(0));
  for (const auto& w : a.fundamental_coweights) rho = add(rho, w);
  a.barycenter = scale(Rational(1) / Rational(a.coxeter_number), rho);
  a.translation_classes_.emplace(IntMatrix::from_columns(scoroots, dim));
  a.coweight_classes_.emplace(IntMatrix::from_rows(scoroots));
  return a;
}

std::vector<Rational> Alcove::barycentric(const RatVector& x) const {
  std::vector<Rational> b;
  for (const auto& f : facets) b.push_back(f(x));
  return b;
}

bool Alcove::contains(const RatVector& x) const {
  for (const auto& f : facets)
    if (f(x) < 0) return false;
  return true;
}

AlcovePoint Alcove::point(const RatVector& x) const { return {x, barycentric(x)}; }

AlcovePoint Alcove::from_barycentric(const std::vector<Rational>& a) const {
  if (a.size() != rank())
    throw std::invalid_argument("point needs " + std::to_string(rank()) + " coordinates, got " + std::to_string(a.size()));
  RatVector x(dimension(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) x = add(x, scale(a[i], fundamental_coweights[i]));
  AlcovePoint p = point(x);
  for (std::size_t i = 0; i < p.barycentric.size(); ++i)
    if (p.barycentric[i] < 0)
      throw std::invalid_argument("point lies outside the closed alcove (a_" + std::to_string(i) + " = " + to_string(p.barycentric[i]) + ")");
  return p;
}

AffineTransform Alcove::simple_reflection(std::size_t i) const {
  if (i == 0) {
    const std::size_t n = dimension();
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) -= highest_coroot_dual[r] * highest_coroot[c];
    return {s, highest_coroot_dual};
  }
  return {weyl().reflection(i - 1), IntVector(dimension(), Integer(0))};
}

namespace {

OmegaElement make_omega(const Alcove& a, const AffineTransform& g) {
  OmegaElement w;
  w.transform = g;
  for (const auto& v : a.vertices) {
    RatVector img = g(v);
    auto it = std::find(a.vertices.begin(), a.vertices.end(), img);
    if (it == a.vertices.end()) throw std::logic_error("candidate does not preserve the alcove");
    w.facet_permutation.push_back(static_cast<std::size_t>(it - a.vertices.begin()));
  }
  w.vertex_image = w.facet_permutation.front();
  w.iota_class = a.translation_classes().class_of(g.translation);
  w.word = a.weyl().reduced_word(g.linear);
  return w;
}

}  // namespace

std::vector<OmegaElement> omega_group(const Alcove& a) {
  const std::size_t n = a.dimension();
  std::vector<OmegaElement> out;
  out.push_back(make_omega(a, AffineTransform::identity(n)));
  if (a.degenerate) return out;
  const std::size_t l = a.rank();
  IntMatrix w0 = a.weyl().longest_element();
  for (std::size_t j = 1; j <= l; ++j) {
    if (a.marks[j] != 1) continue;
    auto t = to_integer(a.fundamental_coweights[j - 1]);
    if (!t) continue;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < l; ++i)
      if (i != j - 1) others.push_back(i);
    AffineTransform g{a.weyl().longest_element(others) * w0, *t};
    out.push_back(make_omega(a, g));
  }
  for (const auto& x : out)
    for (const auto& y : out)
      if (!find_omega(out, x.transform * y.transform)) throw std::logic_error("alcove symmetries are not closed under composition");
  return out;
}

std::optional<std::size_t> find_omega(const std::vector<OmegaElement>& omega, const AffineTransform& g) {
  for (std::size_t k = 0; k < omega.size(); ++k)
    if (omega[k].transform == g) return k;
  return std::nullopt;
}

IotaValues iota_values(const Alcove& a, const OmegaElement& w) {
  IotaValues v;
  RatVector disp = sub(a.barycenter, apply(w.transform.linear, a.barycenter));
  v.barycenter_displacement = to_integer(disp);
  v.translation = w.transform.translation;
  if (w.vertex_image == 0) {
    v.fundamental_weight = IntVector(a.dimension(), Integer(0));
  } else {
    auto f = to_integer(a.fundamental_coweights[w.vertex_image - 1]);
    if (!f) throw std::logic_error("image vertex is not a lattice point");
    v.fundamental_weight = *f;
  }
  return v;
}

bool iota_agrees(const Alcove& a, const OmegaElement& w) {
  IotaValues v = iota_values(a, w);
  if (!v.barycenter_displacement) return false;
  const Cokernel& q = a.translation_classes();
  return q.same_class(*v.barycenter_displacement, v.translation) && q.same_class(v.translation, v.fundamental_weight) &&
         q.class_of(v.translation) == w.iota_class;
}

ReducedPoint reduce_to_alcove(const Alcove& a, const std::vector<OmegaElement>& omega, const RatVector& x) {
  if (x.size() != a.dimension()) throw std::invalid_argument("point has the wrong dimension");
  RatVector y = x;
  AffineTransform g = AffineTransform::identity(a.dimension());
  for (std::size_t steps = 0;; ++steps) {
    if (steps > 1000000) throw std::logic_error("alcove reduction did not terminate");
    std::size_t k = 0;
    while (k < a.facets.size() && a.facets[k](y) >= 0) ++k;
    if (k == a.facets.size()) break;
    AffineTransform s = a.simple_reflection(k);
    y = s(y);
    g = s * g;
  }
  RatVector best = y;
  std::vector<Rational> best_bary = a.barycentric(y);
  AffineTransform best_g = g;
  for (const auto& w : omega) {
    RatVector z = w.transform(y);
    auto b = a.barycentric(z);
    if (b > best_bary) {
      best = z;
      best_bary = b;
      best_g = w.transform * g;
    }
  }
  return {{best, best_bary}, best_g};
}

ReducedPoint reduce_to_alcove(const Alcove& a, const RatVector& x) { return reduce_to_alcove(a, omega_group(a), x); }

std::vector<HyperspecialVertex> hyperspecial_vertices(const Alcove& a) {
  std::vector<HyperspecialVertex> out;
  const std::size_t l = a.rank();
  HyperspecialVertex origin;
  origin.node = 0;
  origin.coweight = RatVector(a.datum.rank(), Rational(0));
  origin.class_coordinates = a.coweight_classes().class_of(IntVector(l, Integer(0)));
  out.push_back(origin);
  for (std::size_t j = 1; j <= l; ++j) {
    if (a.dual_marks[j] != 1) continue;
    HyperspecialVertex v;
    v.node = j;
    v.coweight = a.fundamental_weights[j - 1];
    v.class_coordinates = a.coweight_classes().class_of(unit_vector(l, j - 1));
    bool dup = false;
    for (const auto& u : out)
      if (u.class_coordinates == v.class_coordinates) dup = true;
    if (!dup) out.push_back(v);
  }
  return out;
}

}  // namespace unram

#include "unram/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace unram {

IntMatrix BasedRootDatum::cartan() const {
  const std::size_t l = semisimple_rank();
  IntMatrix c(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) c(i, j) = pair(simple_root(j), simple_coroot(i));
  return c;
}

std::optional<std::size_t> BasedRootDatum::find_root(const IntVector& r) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return k;
  return std::nullopt;
}

std::optional<std::size_t> BasedRootDatum::find_coroot(const IntVector& c) const {
  for (std::size_t k = 0; k < coroots.size(); ++k)
    if (coroots[k] == c) return k;
  return std::nullopt;
}

namespace {

RatVector expansion_in(const std::vector<IntVector>& basis, std::size_t dim, const IntVector& v) {
  if (basis.empty()) {
    if (!is_zero(v)) throw std::logic_error("vector outside the span of an empty basis");
    return {};
  }
  RatMatrix a = to_rational(IntMatrix::from_columns(basis, dim));
  auto s = solve(a, to_rational(v));
  if (!s) throw std::logic_error("vector outside the span of the simple system");
  return *s;
}

std::vector<IntVector> simple_roots_of(const BasedRootDatum& d) {
  std::vector<IntVector> s;
  for (auto k : d.simple_indices) s.push_back(d.roots[k]);
  return s;
}

std::vector<IntVector> simple_coroots_of(const BasedRootDatum& d) {
  std::vector<IntVector> s;
  for (auto k : d.simple_indices) s.push_back(d.coroots[k]);
  return s;
}

Rational total(const RatVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool contains_double(const std::vector<IntVector>& roots) {
  std::set<IntVector> all(roots.begin(), roots.end());
  for (const auto& r : roots)
    if (all.count(scale(Integer(2), r))) return true;
  return false;
}

// Orders roots as: positive roots by (height, expansion descending), then negatives in the same order.
BasedRootDatum assemble(const Lattice& x, const Lattice& xcheck, const std::vector<IntVector>& roots,
                        const std::vector<IntVector>& coroots, const std::vector<IntVector>& simple,
                        const std::string& label) {
  struct Entry {
    RatVector exp;
    Rational height;
    std::size_t index;
  };
  std::vector<Entry> pos;
  std::unordered_map<IntVector, std::size_t, IntVectorHash> where;
  for (std::size_t k = 0; k < roots.size(); ++k) where[roots[k]] = k;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    RatVector e = expansion_in(simple, x.rank, roots[k]);
    bool nonneg = true, nonpos = true;
    for (const auto& c : e) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::invalid_argument("root " + to_string(roots[k]) + " has mixed-sign expansion");
    if (nonneg) pos.push_back({e, total(e), k});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.exp > b.exp;
  });
  BasedRootDatum d;
  d.character_lattice = x;
  d.cocharacter_lattice = xcheck;
  d.pairing = IntMatrix::identity(x.rank);
  for (const auto& e : pos) {
    d.roots.push_back(roots[e.index]);
    d.coroots.push_back(coroots[e.index]);
  }
  for (const auto& e : pos) {
    auto it = where.find(scale(Integer(-1), roots[e.index]));
    if (it == where.end()) throw std::invalid_argument("root system is not symmetric");
    d.roots.push_back(roots[it->second]);
    d.coroots.push_back(coroots[it->second]);
  }
  if (d.roots.size() != roots.size()) throw std::invalid_argument("duplicate roots");
  for (const auto& s : simple) {
    std::size_t k = 0;
    while (k < pos.size() && d.roots[k] != s) ++k;
    if (k == pos.size()) throw std::invalid_argument("simple root missing from root list");
    d.simple_indices.push_back(k);
  }
  d.type_label = label;
  d.reduced_flag = !contains_double(d.roots);
  return d;
}

}  // namespace

RatVector BasedRootDatum::root_expansion(std::size_t k) const {
  return expansion_in(simple_roots_of(*this), rank(), roots.at(k));
}

RatVector BasedRootDatum::coroot_expansion(std::size_t k) const {
  return expansion_in(simple_coroots_of(*this), rank(), coroots.at(k));
}

bool BasedRootDatum::is_positive(std::size_t k) const { return total(root_expansion(k)) > 0; }

std::vector<std::size_t> BasedRootDatum::positive_indices() const {
  std::vector<std::size_t> p;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (is_positive(k)) p.push_back(k);
  return p;
}

bool same_datum(const BasedRootDatum& a, const BasedRootDatum& b) {
  return a.rank() == b.rank() && a.cocharacter_lattice.rank == b.cocharacter_lattice.rank &&
         a.pairing == b.pairing && a.roots == b.roots && a.coroots == b.coroots &&
         a.simple_indices == b.simple_indices && a.reduced_flag == b.reduced_flag;
}

BasedRootDatum generate_datum(const Lattice& x, const Lattice& xcheck, const std::vector<IntVector>& simple_roots,
                              const std::vector<IntVector>& simple_coroots, const std::string& label) {
  if (simple_roots.size() != simple_coroots.size()) throw std::invalid_argument("simple roots and coroots differ in number");
  if (x.rank != xcheck.rank) throw std::invalid_argument("character and cocharacter lattices differ in rank");
  const std::size_t l = simple_roots.size();
  std::vector<IntVector> roots, coroots;
  std::unordered_map<IntVector, std::size_t, IntVectorHash> seen;
  for (std::size_t i = 0; i < l; ++i) {
    if (dot(simple_roots[i], simple_coroots[i]) != 2) throw std::invalid_argument("simple root and coroot do not pair to 2");
    if (seen.emplace(simple_roots[i], roots.size()).second) {
      roots.push_back(simple_roots[i]);
      coroots.push_back(simple_coroots[i]);
    }
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots.size() > 4096) throw std::invalid_argument("root system is not finite");
    for (std::size_t i = 0; i < l; ++i) {
      Integer p = dot(roots[k], simple_coroots[i]);
      if (p == 0) continue;
      IntVector r = sub(roots[k], scale(p, simple_roots[i]));
      if (seen.count(r)) continue;
      Integer q = dot(simple_roots[i], coroots[k]);
      IntVector c = sub(coroots[k], scale(q, simple_coroots[i]));
      seen.emplace(r, roots.size());
      roots.push_back(std::move(r));
      coroots.push_back(std::move(c));
    }
  }
  return assemble(x, xcheck, roots, coroots, simple_roots, label);
}

BasedRootDatum standard_datum(const std::string& type_label, const Isogeny& isogeny) {
  TypeLabel t = parse_type_label(type_label);
  const std::size_t n = t.base.rank;
  IntMatrix c = cartan_matrix(t.base);
  IntMatrix b;  // columns: basis of X in fundamental-weight coordinates
  switch (isogeny.kind) {
    case Isogeny::Kind::sc: b = IntMatrix::identity(n); break;
    case Isogeny::Kind::ad: b = c; break;
    case Isogeny::Kind::custom: {
      if (isogeny.lattice.cols() != n)
        throw std::invalid_argument("lattice rows must have " + std::to_string(n) + " entries for type " + t.base.label());
      IntMatrix h = hermite_normal_form(isogeny.lattice);
      if (h.rows() != n) throw std::invalid_argument("lattice generators do not span a full-rank lattice");
      b = h.transpose();
      break;
    }
  }
  auto binv = inverse(to_rational(b));
  auto k = to_integer(*binv * to_rational(c));
  if (!k) throw std::invalid_argument("lattice does not contain the root lattice");
  std::vector<IntVector> sroots, scoroots;
  for (std::size_t j = 0; j < n; ++j) {
    sroots.push_back(k->column(j));
    scoroots.push_back(b.row(j));
  }
  Lattice x = Lattice::standard(n, "x");
  Lattice xc = Lattice::standard(n, "y");
  BasedRootDatum d = generate_datum(x, xc, sroots, scoroots, t.str());
  if (t.twist > 1) {
    auto perm = diagram_symmetry(t.base, t.twist);
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = 1;
    auto mx = to_integer(*binv * to_rational(p) * to_rational(b));
    if (!mx) throw std::invalid_argument("lattice is not stable under the diagram automorphism of " + t.str());
    IntMatrix mc = unimodular_inverse(*mx).transpose();
    DiagramAutomorphism s;
    s.permutation = perm;
    s.on_characters = LatticeMap(x, x, *mx);
    s.on_cocharacters = LatticeMap(xc, xc, mc);
    s.order = t.twist;
    d.frobenius = s;
  }
  return d;
}

BasedRootDatum dual_datum(const BasedRootDatum& d) {
  BasedRootDatum e;
  e.character_lattice = d.cocharacter_lattice;
  e.cocharacter_lattice = d.character_lattice;
  e.pairing = d.pairing.transpose();
  e.roots = d.coroots;
  e.coroots = d.roots;
  e.simple_indices = d.simple_indices;
  e.reduced_flag = !contains_double(e.roots);
  if (d.frobenius) {
    DiagramAutomorphism s = *d.frobenius;
    std::swap(s.on_characters, s.on_cocharacters);
    e.frobenius = s;
  }
  try {
    TypeLabel t = parse_type_label(d.type_label);
    t.base = dual_type(t.base);
    e.type_label = t.str();
  } catch (const std::invalid_argument&) {
    e.type_label = e.semisimple_rank() == 0 ? d.type_label : root_system_label(e);
  }
  return e;
}

std::vector<std::string> check_axioms(const BasedRootDatum& d) {
  std::vector<std::string> bad;
  const std::size_t r = d.rank();
  if (d.cocharacter_lattice.rank != r) bad.push_back("lattice ranks differ");
  if (d.pairing != IntMatrix::identity(r)) bad.push_back("pairing matrix is not the identity in the chosen bases");
  if (d.roots.size() != d.coroots.size()) {
    bad.push_back("roots and coroots are not aligned");
    return bad;
  }
  std::unordered_map<IntVector, std::size_t, IntVectorHash> root_at;
  for (std::size_t k = 0; k < d.roots.size(); ++k) {
    if (d.roots[k].size() != r || d.coroots[k].size() != r) bad.push_back("vector of wrong length at index " + std::to_string(k));
    root_at[d.roots[k]] = k;
  }
  if (!bad.empty()) return bad;
  for (std::size_t a = 0; a < d.roots.size(); ++a) {
    if (d.pair(d.roots[a], d.coroots[a]) != 2) bad.push_back("<a, a-check> != 2 at index " + std::to_string(a));
    for (std::size_t b = 0; b < d.roots.size(); ++b) {
      Integer p = d.pair(d.roots[b], d.coroots[a]);
      auto it = root_at.find(sub(d.roots[b], scale(p, d.roots[a])));
      if (it == root_at.end()) {
        bad.push_back("reflection " + std::to_string(a) + " does not preserve the roots");
        continue;
      }
      Integer q = d.pair(d.roots[a], d.coroots[b]);
      if (sub(d.coroots[b], scale(q, d.coroots[a])) != d.coroots[it->second])
        bad.push_back("reflection " + std::to_string(a) + " breaks root/coroot alignment");
    }
  }
  std::vector<IntVector> simple = simple_roots_of(d);
  if (!simple.empty() && rank(to_rational(IntMatrix::from_columns(simple, r))) != simple.size())
    bad.push_back("simple roots are linearly dependent");
  for (std::size_t k = 0; k < d.roots.size() && bad.empty(); ++k) {
    RatVector e = d.root_expansion(k);
    bool nonneg = true, nonpos = true;
    for (const auto& c : e) {
      if (c.get_den() != 1) bad.push_back("root " + std::to_string(k) + " is not an integer combination of simple roots");
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) bad.push_back("root " + std::to_string(k) + " has mixed signs");
  }
  return bad;
}

std::vector<std::string> check_automorphism(const BasedRootDatum& d, const DiagramAutomorphism& s) {
  std::vector<std::string> bad;
  const IntMatrix& mx = s.on_characters.matrix;
  const IntMatrix& mc = s.on_cocharacters.matrix;
  if (mx.rows() != d.rank() || mx.cols() != d.rank() || mc.rows() != d.rank() || mc.cols() != d.rank()) {
    bad.push_back("automorphism has the wrong shape");
    return bad;
  }
  if (mx.transpose() * mc != IntMatrix::identity(d.rank())) bad.push_back("automorphism does not preserve the pairing");
  for (std::size_t k = 0; k < d.roots.size(); ++k) {
    auto j = d.find_root(mx * d.roots[k]);
    if (!j) {
      bad.push_back("automorphism does not preserve the roots");
      break;
    }
    if (d.coroots[*j] != mc * d.coroots[k]) bad.push_back("automorphism breaks root/coroot alignment");
  }
  if (s.permutation.size() != d.semisimple_rank()) {
    bad.push_back("permutation has the wrong length");
    return bad;
  }
  for (std::size_t i = 0; i < s.permutation.size(); ++i)
    if (mx * d.simple_root(i) != d.simple_root(s.permutation[i])) bad.push_back("automorphism does not follow its permutation on simple roots");
  std::size_t ord = automorphism_order(mx);
  if (ord != s.order) bad.push_back("recorded order " + std::to_string(s.order) + " differs from actual order " + std::to_string(ord));
  return bad;
}

DiagramAutomorphism trivial_automorphism(const BasedRootDatum& d) {
  DiagramAutomorphism s;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) s.permutation.push_back(i);
  s.on_characters = LatticeMap::identity(d.character_lattice);
  s.on_cocharacters = LatticeMap::identity(d.cocharacter_lattice);
  s.order = 1;
  return s;
}

DiagramAutomorphism frobenius_of(const BasedRootDatum& d) {
  return d.frobenius ? *d.frobenius : trivial_automorphism(d);
}

std::string root_system_label(const BasedRootDatum& d) {
  auto comps = classify_cartan(d.cartan());
  if (!d.reduced_flag && comps.size() == 1) return "BC" + std::to_string(comps[0].type.rank);
  return cartan_label(comps);
}

RelativeDatum relative_datum(const BasedRootDatum& d, const DiagramAutomorphism& sigma) {
  auto problems = check_automorphism(d, sigma);
  if (!problems.empty()) throw std::invalid_argument("not an automorphism of the datum: " + problems.front());
  RelativeDatum out;
  out.fixed_cocharacters = fixed_sublattice(d.cocharacter_lattice, sigma.on_cocharacters);
  const IntMatrix& emb = out.fixed_cocharacters.embedding.matrix;
  const std::size_t k = emb.cols();
  Lattice y = Lattice::standard(k, "u");
  Lattice ycheck = out.fixed_cocharacters.lattice;
  out.restriction = LatticeMap(d.character_lattice, y, emb.transpose());

  std::vector<IntVector> s;
  std::vector<std::vector<std::size_t>> fibers;
  std::map<IntVector, std::size_t> where;
  for (std::size_t a = 0; a < d.roots.size(); ++a) {
    IntVector r = out.restriction(d.roots[a]);
    if (is_zero(r)) throw std::invalid_argument("a root restricts to zero");
    auto [it, fresh] = where.emplace(r, s.size());
    if (fresh) {
      s.push_back(r);
      fibers.emplace_back();
    }
    fibers[it->second].push_back(a);
  }
  std::vector<IntVector> scheck;
  for (std::size_t j = 0; j < s.size(); ++j) {
    IntVector sum(d.rank(), Integer(0));
    for (auto a : fibers[j]) sum = add(sum, d.coroots[a]);
    auto c = solve_integer(emb, sum);
    if (!c) throw std::logic_error("coroot sum is not sigma-fixed");
    if (where.count(scale(Integer(2), s[j]))) *c = scale(Integer(2), *c);
    scheck.push_back(*c);
  }
  std::vector<IntVector> simple;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    IntVector r = out.restriction(d.simple_root(i));
    if (std::find(simple.begin(), simple.end(), r) == simple.end()) simple.push_back(r);
  }
  out.datum = assemble(y, ycheck, s, scheck, simple, "");
  out.root_type = root_system_label(out.datum);
  out.coroot_type = root_system_label(dual_datum(out.datum));
  out.datum.type_label = out.root_type;

  for (std::size_t j = 0; j < out.datum.roots.size(); ++j) out.fibers.push_back(fibers[where.at(out.datum.roots[j])]);
  // sigma-orbits on the roots of the input
  std::vector<int> orbit(d.roots.size(), -1);
  int count = 0;
  for (std::size_t a = 0; a < d.roots.size(); ++a) {
    if (orbit[a] >= 0) continue;
    std::size_t cur = a;
    while (orbit[cur] < 0) {
      orbit[cur] = count;
      cur = *d.find_root(sigma.on_characters(d.roots[cur]));
    }
    ++count;
  }
  out.fibers_are_orbits = static_cast<std::size_t>(count) == out.fibers.size();
  for (const auto& f : out.fibers)
    for (auto a : f)
      if (orbit[a] != orbit[f.front()]) out.fibers_are_orbits = false;
  return out;
}

std::vector<IntMatrix> intermediate_lattices(const CartanType& t) {
  IntMatrix c = cartan_matrix(t);
  const std::size_t n = t.rank;
  Cokernel q(c);
  std::vector<IntVector> elems = q.torsion_elements();
  std::set<IntMatrix> found;
  auto add_lattice = [&](const std::vector<IntVector>& extra) {
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < n; ++j) rows.push_back(c.column(j));
    for (const auto& e : extra) rows.push_back(e);
    found.insert(hermite_normal_form(IntMatrix::from_rows(rows)));
  };
  for (const auto& g : elems) {
    add_lattice({g});
    for (const auto& h : elems) add_lattice({g, h});
  }
  return {found.begin(), found.end()};
}

RatMatrix ambient_simple_roots(const CartanType& t) {
  const std::size_t n = t.rank;
  Rational half(1, 2);
  auto eps = [](std::size_t dim, std::size_t i) {
    RatVector v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<RatVector> rows;
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) rows.push_back(sub(eps(n + 1, i), eps(n + 1, i + 1)));
      break;
    case 'B': case 'C': case 'D':
      for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(sub(eps(n, i), eps(n, i + 1)));
      if (t.family == 'B') rows.push_back(eps(n, n - 1));
      if (t.family == 'C') rows.push_back(scale(Rational(2), eps(n, n - 1)));
      if (t.family == 'D') rows.push_back(add(eps(n, n - 2), eps(n, n - 1)));
      break;
    case 'E': {
      RatVector a1(8, -half);
      a1[0] = half;
      a1[7] = half;
      rows.push_back(a1);
      rows.push_back(add(eps(8, 0), eps(8, 1)));
      for (std::size_t k = 3; k <= n; ++k) rows.push_back(sub(eps(8, k - 2), eps(8, k - 3)));
      break;
    }
    case 'F':
      rows.push_back(sub(eps(4, 1), eps(4, 2)));
      rows.push_back(sub(eps(4, 2), eps(4, 3)));
      rows.push_back(eps(4, 3));
      rows.push_back({half, -half, -half, -half});
      break;
    case 'G':
      rows.push_back({Rational(1), Rational(-1), Rational(0)});
      rows.push_back({Rational(-2), Rational(1), Rational(1)});
      break;
    default:
      throw std::invalid_argument("no ambient realization for " + t.label());
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace unram

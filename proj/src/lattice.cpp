#include "unram/lattice.hpp"

#include <algorithm>

namespace unram {

Lattice Lattice::standard(std::size_t rank, const std::string& prefix) {
  Lattice l;
  l.rank = rank;
  for (std::size_t i = 0; i < rank; ++i) l.basis_labels.push_back(prefix + std::to_string(i + 1));
  return l;
}

LatticeMap::LatticeMap(Lattice src, Lattice tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.rank || matrix.cols() != source.rank)
    throw std::invalid_argument("lattice map matrix has shape " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " + std::to_string(target.rank) +
                                "x" + std::to_string(source.rank));
}

LatticeMap LatticeMap::identity(const Lattice& l) { return LatticeMap(l, l, IntMatrix::identity(l.rank)); }

LatticeMap LatticeMap::of_matrix(const IntMatrix& m) {
  return LatticeMap(Lattice::standard(m.cols()), Lattice::standard(m.rows()), m);
}

LatticeMap LatticeMap::compose(const LatticeMap& inner) const {
  return LatticeMap(inner.source, target, matrix * inner.matrix);
}

std::vector<Integer> SmithForm::diagonal_entries() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) d.push_back(diagonal(i, i));
  return d;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}
void col_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    bool found_any = false;
    for (;;) {
      // pivot of least magnitude in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      found_any = true;
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_axpy(d, i, q, t);
        row_axpy(u, i, q, t);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_axpy(d, j, q, t);
        col_axpy(v, j, q, t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(d, t, Integer(-1), bad);
      row_axpy(u, t, Integer(-1), bad);
    }
    if (!found_any) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm s{std::move(u), std::move(d), std::move(v), 0};
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (s.diagonal(i, i) != 0) s.rank = i + 1;
  return s;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

Integer FiniteAbelianGroup::exponent() const {
  return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

std::string FiniteAbelianGroup::structure() const {
  if (invariant_factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + invariant_factors[i].get_str();
  }
  return s;
}

Cokernel::Cokernel(const IntMatrix& m) : smith_(smith_normal_form(m)) {
  left_inverse_ = unimodular_inverse(smith_.left);
  for (std::size_t i = 0; i < smith_.rank; ++i)
    if (smith_.diagonal(i, i) != 1) torsion_positions_.push_back(i);
}

FiniteAbelianGroup Cokernel::torsion() const {
  FiniteAbelianGroup g;
  for (auto i : torsion_positions_) {
    g.invariant_factors.push_back(smith_.diagonal(i, i));
    g.generators.push_back(left_inverse_.column(i));
  }
  g.free_rank = smith_.left.rows() - smith_.rank;
  return g;
}

IntVector Cokernel::class_of(const IntVector& y) const {
  IntVector uy = smith_.left * y;
  IntVector c;
  for (auto i : torsion_positions_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), uy[i].get_mpz_t(), smith_.diagonal(i, i).get_mpz_t());
    c.push_back(r);
  }
  // entries with unit invariant factor vanish in the quotient
  for (std::size_t i = smith_.rank; i < uy.size(); ++i) c.push_back(uy[i]);
  return c;
}

IntVector Cokernel::torsion_class(const IntVector& y) const {
  IntVector c = class_of(y);
  c.resize(torsion_positions_.size());
  return c;
}

std::vector<IntVector> Cokernel::torsion_elements() const {
  FiniteAbelianGroup g = torsion();
  std::vector<IntVector> out;
  for (const auto& res : enumerate_residues(g.invariant_factors)) {
    IntVector y(ambient_rank(), Integer(0));
    for (std::size_t k = 0; k < res.size(); ++k) y = add(y, scale(res[k], g.generators[k]));
    out.push_back(y);
  }
  return out;
}

FiniteAbelianGroup cokernel_torsion(const LatticeMap& m) { return Cokernel(m.matrix).torsion(); }
FiniteAbelianGroup cokernel_torsion(const IntMatrix& m) { return Cokernel(m).torsion(); }

std::size_t automorphism_order(const IntMatrix& a, std::size_t max_order) {
  if (a.rows() != a.cols()) throw std::invalid_argument("automorphism must be square");
  Integer det = determinant(a);
  if (det != 1 && det != -1) throw std::invalid_argument("map is not invertible over Z (det = " + det.get_str() + ")");
  IntMatrix p = a;
  for (std::size_t k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * a;
  }
  throw std::invalid_argument("automorphism does not have finite order");
}

Sublattice fixed_sublattice(const Lattice& l, const LatticeMap& automorphism) {
  if (automorphism.matrix.rows() != l.rank || automorphism.matrix.cols() != l.rank)
    throw std::invalid_argument("automorphism does not act on the lattice");
  automorphism_order(automorphism.matrix);
  IntMatrix shifted = automorphism.matrix - IntMatrix::identity(l.rank);
  SmithForm s = smith_normal_form(shifted);
  std::size_t k = l.rank - s.rank;
  IntMatrix basis(l.rank, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < l.rank; ++i) basis(i, j) = s.right(i, s.rank + j);
  // present the basis in Hermite form so the output does not depend on pivoting details
  IntMatrix h = hermite_normal_form(basis.transpose());
  Lattice fixed = Lattice::standard(k, "f");
  return {fixed, LatticeMap(fixed, l, h.transpose())};
}

QuotientLattice coinvariants_mod_torsion(const Lattice& l, const LatticeMap& automorphism) {
  if (automorphism.matrix.rows() != l.rank || automorphism.matrix.cols() != l.rank)
    throw std::invalid_argument("automorphism does not act on the lattice");
  automorphism_order(automorphism.matrix);
  IntMatrix shifted = automorphism.matrix - IntMatrix::identity(l.rank);
  SmithForm s = smith_normal_form(shifted);
  std::size_t k = l.rank - s.rank;
  IntMatrix proj(k, l.rank);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l.rank; ++j) proj(i, j) = s.left(s.rank + i, j);
  Lattice quotient = Lattice::standard(k, "q");
  return {quotient, LatticeMap(l, quotient, proj)};
}

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix a = rows;
  std::size_t n = a.rows(), m = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    // Euclid on column c among rows r..n-1
    for (;;) {
      std::size_t p = n;
      for (std::size_t i = r; i < n; ++i)
        if (a(i, c) != 0 && (p == n || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == n) break;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        row_axpy(a, i, q, r);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < m; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q != 0) row_axpy(a, i, q, r);
    }
    ++r;
  }
  IntMatrix out(r, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(i, j);
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SmithForm s = smith_normal_form(a);
  IntVector ub = s.left * b;
  IntVector z(a.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diagonal(i, i) != 0) return std::nullopt;
      z[i] = ub[i] / s.diagonal(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * z;
}

FiniteAbelianGroup generated_subgroup(const std::vector<IntVector>& elements, const std::vector<Integer>& invariant_factors) {
  const std::size_t k = invariant_factors.size(), m = elements.size();
  if (m == 0 || k == 0) return {};
  // relations among the generators: kernel of [H | diag(d)] projected to the H coordinates
  IntMatrix big(k, m + k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) big(i, j) = elements[j].at(i);
  for (std::size_t i = 0; i < k; ++i) big(i, m + i) = invariant_factors[i];
  SmithForm s = smith_normal_form(big);
  std::size_t nk = m + k - s.rank;
  IntMatrix rel(m, nk);
  for (std::size_t c = 0; c < nk; ++c)
    for (std::size_t i = 0; i < m; ++i) rel(i, c) = s.right(i, s.rank + c);
  FiniteAbelianGroup g = cokernel_torsion(rel);
  g.generators.clear();
  return g;
}

std::vector<IntVector> enumerate_residues(const std::vector<Integer>& invariant_factors) {
  std::vector<IntVector> out;
  IntVector cur(invariant_factors.size(), Integer(0));
  for (;;) {
    out.push_back(cur);
    std::size_t k = cur.size();
    while (k > 0) {
      --k;
      cur[k] += 1;
      if (cur[k] < invariant_factors[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

}  // namespace unram

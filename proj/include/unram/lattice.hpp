#pragma once

#include <string>
#include <vector>

#include "unram/arith.hpp"

namespace unram {

/// Free Z-module Z^rank. Labels are only used when printing.
struct Lattice {
  std::size_t rank = 0;
  std::vector<std::string> basis_labels;

  static Lattice standard(std::size_t rank, const std::string& prefix = "e");
  bool operator==(const Lattice& o) const { return rank == o.rank; }
};

/// Integer matrix of shape target.rank x source.rank.
struct LatticeMap {
  Lattice source;
  Lattice target;
  IntMatrix matrix;

  LatticeMap() = default;
  LatticeMap(Lattice src, Lattice tgt, IntMatrix m);
  static LatticeMap identity(const Lattice& l);
  static LatticeMap of_matrix(const IntMatrix& m);

  IntVector operator()(const IntVector& v) const { return matrix * v; }
  LatticeMap compose(const LatticeMap& inner) const;  // this after inner
};

struct SmithForm {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular
  std::size_t rank = 0;

  std::vector<Integer> diagonal_entries() const;
};

SmithForm smith_normal_form(const IntMatrix& m);
inline SmithForm smith_normal_form(const LatticeMap& m) { return smith_normal_form(m.matrix); }

/// Finite abelian group Z/d_1 x ... x Z/d_k with d_i | d_{i+1} and d_i >= 2.
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::vector<IntVector> generators;  // coset representatives in the ambient lattice
  std::size_t free_rank = 0;          // rank of the discarded free part

  Integer order() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  bool is_cyclic() const { return invariant_factors.size() <= 1; }
  Integer exponent() const;
  /// e.g. "Z/2 x Z/2", "1" for the trivial group.
  std::string structure() const;
};

/// Presentation of target / image(m) through a Smith form, with class arithmetic.
class Cokernel {
 public:
  explicit Cokernel(const IntMatrix& m);
  explicit Cokernel(const LatticeMap& m) : Cokernel(m.matrix) {}

  FiniteAbelianGroup torsion() const;
  /// Coordinates of the class of y: torsion residues first, then free coordinates.
  IntVector class_of(const IntVector& y) const;
  bool contains(const IntVector& y) const { return is_zero(class_of(y)); }
  bool same_class(const IntVector& a, const IntVector& b) const { return contains(sub(a, b)); }
  /// Residue coordinates of the torsion part only (empty free part assumed by callers).
  IntVector torsion_class(const IntVector& y) const;
  /// All torsion classes as representatives, in lexicographic order of residues.
  std::vector<IntVector> torsion_elements() const;
  std::size_t ambient_rank() const { return smith_.left.rows(); }
  const SmithForm& smith() const { return smith_; }

 private:
  SmithForm smith_;
  IntMatrix left_inverse_;
  std::vector<std::size_t> torsion_positions_;
};

FiniteAbelianGroup cokernel_torsion(const LatticeMap& m);
FiniteAbelianGroup cokernel_torsion(const IntMatrix& m);

struct Sublattice {
  Lattice lattice;
  LatticeMap embedding;  // lattice -> ambient
};

struct QuotientLattice {
  Lattice lattice;
  LatticeMap projection;  // ambient -> lattice
};

/// Checks square, determinant +-1 and finite order; returns the order. Throws otherwise.
std::size_t automorphism_order(const IntMatrix& a, std::size_t max_order = 720);

/// Fixed points of a finite-order automorphism, with a saturated basis.
Sublattice fixed_sublattice(const Lattice& l, const LatticeMap& automorphism);
/// Coinvariants l / (sigma - 1)l modulo torsion, with the projection.
QuotientLattice coinvariants_mod_torsion(const Lattice& l, const LatticeMap& automorphism);

/// Row Hermite normal form of the row span; zero rows removed.
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Integer solution of a*x = b if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Subgroup of Z/d_1 x ... x Z/d_k generated by the given residue tuples.
FiniteAbelianGroup generated_subgroup(const std::vector<IntVector>& elements, const std::vector<Integer>& invariant_factors);

/// Every element of a finite abelian group as a residue tuple.
std::vector<IntVector> enumerate_residues(const std::vector<Integer>& invariant_factors);

}  // namespace unram

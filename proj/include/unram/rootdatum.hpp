#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unram/cartan.hpp"
#include "unram/lattice.hpp"

namespace unram {

/// Automorphism of a based root datum induced by a Dynkin diagram symmetry.
struct DiagramAutomorphism {
  std::vector<std::size_t> permutation;  // simple index i -> permutation[i]
  LatticeMap on_characters;
  LatticeMap on_cocharacters;
  std::size_t order = 1;

  bool is_identity() const { return order == 1; }
};

/// Coordinates of X and X-check are dual bases, so the pairing matrix is the identity.
struct BasedRootDatum {
  Lattice character_lattice;
  Lattice cocharacter_lattice;
  IntMatrix pairing;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<std::size_t> simple_indices;
  std::string type_label;
  bool reduced_flag = true;
  std::optional<DiagramAutomorphism> frobenius;

  std::size_t rank() const { return character_lattice.rank; }
  std::size_t semisimple_rank() const { return simple_indices.size(); }
  bool is_semisimple() const { return semisimple_rank() == rank(); }
  Integer pair(const IntVector& x, const IntVector& y) const { return dot(x, y); }

  const IntVector& simple_root(std::size_t i) const { return roots[simple_indices.at(i)]; }
  const IntVector& simple_coroot(std::size_t i) const { return coroots[simple_indices.at(i)]; }
  /// C(i,j) = <simple root j, simple coroot i>.
  IntMatrix cartan() const;
  std::optional<std::size_t> find_root(const IntVector& r) const;
  std::optional<std::size_t> find_coroot(const IntVector& c) const;
  /// Coefficients of roots[k] in the simple roots.
  RatVector root_expansion(std::size_t k) const;
  /// Coefficients of coroots[k] in the simple coroots.
  RatVector coroot_expansion(std::size_t k) const;
  bool is_positive(std::size_t k) const;
  std::vector<std::size_t> positive_indices() const;
};

/// Structural equality of the data (ignores labels and attached automorphism).
bool same_datum(const BasedRootDatum& a, const BasedRootDatum& b);

struct Isogeny {
  enum class Kind { sc, ad, custom };
  Kind kind = Kind::sc;
  IntMatrix lattice;  // custom: generators of X as rows, fundamental-weight coordinates

  static Isogeny simply_connected() { return {Kind::sc, {}}; }
  static Isogeny adjoint() { return {Kind::ad, {}}; }
  static Isogeny custom(IntMatrix rows) { return {Kind::custom, std::move(rows)}; }
};

/// Closes simple roots/coroots under the simple reflections and orders the result:
/// positive roots by height then expansion, followed by their negatives.
BasedRootDatum generate_datum(const Lattice& x, const Lattice& xcheck, const std::vector<IntVector>& simple_roots,
                              const std::vector<IntVector>& simple_coroots, const std::string& label);

BasedRootDatum standard_datum(const std::string& type_label, const Isogeny& isogeny);
BasedRootDatum dual_datum(const BasedRootDatum& d);

/// Root datum axioms; returns a description of each violation (empty when valid).
std::vector<std::string> check_axioms(const BasedRootDatum& d);
std::vector<std::string> check_automorphism(const BasedRootDatum& d, const DiagramAutomorphism& s);

/// The identity automorphism of d.
DiagramAutomorphism trivial_automorphism(const BasedRootDatum& d);
/// Automorphism attached to d, or the identity.
DiagramAutomorphism frobenius_of(const BasedRootDatum& d);

struct RelativeDatum {
  BasedRootDatum datum;              // (Y, S, E, Y-check, S-check, E-check)
  Sublattice fixed_cocharacters;     // Y-check inside X-check
  LatticeMap restriction;            // X -> Y
  std::vector<std::vector<std::size_t>> fibers;  // roots of the input restricting to each root of S
  bool fibers_are_orbits = false;
  std::string root_type;             // Cartan type of S
  std::string coroot_type;           // Cartan type of S-check; this is the alcove type

  const std::string& relative_type() const { return coroot_type; }
};

RelativeDatum relative_datum(const BasedRootDatum& d, const DiagramAutomorphism& sigma);
inline RelativeDatum relative_datum(const BasedRootDatum& d) { return relative_datum(d, frobenius_of(d)); }

/// Cartan label of S (e.g. "C3"), with "BC" for non-reduced irreducible systems.
std::string root_system_label(const BasedRootDatum& d);

/// Every lattice between the root and weight lattices (both included), as Hermite-form
/// generator rows in fundamental-weight coordinates.
std::vector<IntMatrix> intermediate_lattices(const CartanType& t);

/// Simple roots in the usual Euclidean realization (rows); E6 and E7 sit inside R^8.
RatMatrix ambient_simple_roots(const CartanType& t);

}  // namespace unram

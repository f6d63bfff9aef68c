#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unram/rootdatum.hpp"
#include "unram/weyl.hpp"

namespace unram {

/// x -> linear * x + translation, an element of W x| Y.
struct AffineTransform {
  IntMatrix linear;
  IntVector translation;

  static AffineTransform identity(std::size_t n) { return {IntMatrix::identity(n), IntVector(n, Integer(0))}; }
  static AffineTransform translation_by(const IntVector& t) { return {IntMatrix::identity(t.size()), t}; }

  AffineTransform operator*(const AffineTransform& o) const {
    return {linear * o.linear, add(linear * o.translation, translation)};
  }
  AffineTransform inverse() const;
  RatVector operator()(const RatVector& x) const { return add(apply(linear, x), to_rational(translation)); }
  bool is_identity() const { return linear.is_identity() && is_zero(translation); }
  bool operator==(const AffineTransform& o) const { return linear == o.linear && translation == o.translation; }
  bool operator<(const AffineTransform& o) const {
    return linear != o.linear ? linear < o.linear : translation < o.translation;
  }
};

struct AffineTransformHash {
  std::size_t operator()(const AffineTransform& g) const {
    return IntMatrixHash()(g.linear) * 31 + IntVectorHash()(g.translation);
  }
};

/// x -> <linear, x> + constant.
struct AffineFunctional {
  IntVector linear;
  Integer constant;

  Rational operator()(const RatVector& x) const { return dot(linear, x) + constant; }
};

/// A point of Y tensor Q with its alcove coordinates a_0..a_l (a_i = alpha_i(x)).
struct AlcovePoint {
  RatVector coordinates;
  std::vector<Rational> barycentric;

  bool operator==(const AlcovePoint& o) const { return coordinates == o.coordinates; }
  bool operator<(const AlcovePoint& o) const { return barycentric < o.barycentric; }
};

struct OmegaElement {
  AffineTransform transform;
  std::size_t vertex_image = 0;                 // image of the origin vertex
  std::vector<std::size_t> facet_permutation;   // facet k goes to facet_permutation[k]
  IntVector iota_class;                         // class of the translation in Y / ZE
  std::vector<std::size_t> word;                // reduced word of the linear part
};

/// Vertex of the dual alcove with mark 1, a point of Y-check tensor Q.
struct HyperspecialVertex {
  std::size_t node = 0;  // 0 for the origin
  RatVector coweight;    // fundamental weight of the alcove datum, or 0
  IntVector class_coordinates;
};

/// Fundamental alcove of an apartment datum D. D is the dual of the relative datum, so that
/// Y = cocharacters of D (translations) and the facets are simple roots of D.
class Alcove {
 public:
  BasedRootDatum datum;     // D
  BasedRootDatum reduced;   // roots b of D with 2b not a root
  std::vector<std::size_t> positive_roots;  // indices into reduced.roots
  std::vector<Integer> marks;              // n_0 = 1, n_1, ..., n_l
  IntVector highest_coroot;                // highest element of the system cutting the alcove
  IntVector highest_coroot_dual;           // its dual vector in Y
  std::vector<AffineFunctional> facets;    // alpha_0 = 1 - highest, alpha_1..alpha_l
  std::vector<RatVector> vertices;         // 0 and fundamental_coweights[i] / n_i
  std::vector<RatVector> fundamental_coweights;  // dual basis to the facets, in Y tensor Q
  std::vector<RatVector> fundamental_weights;    // dual basis to the coroots, in Y-check tensor Q
  std::vector<Integer> dual_marks;         // marks of the highest element of the dual system
  RatVector barycenter;
  Integer coxeter_number = 1;
  bool degenerate = false;
  std::string type_label;

  std::size_t rank() const { return marks.empty() ? 0 : marks.size() - 1; }
  std::size_t dimension() const { return datum.cocharacter_lattice.rank; }
  const WeylGroup& weyl() const { return *weyl_; }
  const Cokernel& translation_classes() const { return *translation_classes_; }
  const Cokernel& coweight_classes() const { return *coweight_classes_; }

  std::vector<Rational> barycentric(const RatVector& x) const;
  bool contains(const RatVector& x) const;
  AlcovePoint point(const RatVector& x) const;
  /// From a_1..a_l; a_0 is derived. Throws if the point is outside the closed alcove.
  AlcovePoint from_barycentric(const std::vector<Rational>& a) const;
  /// Affine simple reflection in facet i (i = 0 is the affine node).
  AffineTransform simple_reflection(std::size_t i) const;

 private:
  friend Alcove build_alcove(const BasedRootDatum& d);
  std::optional<WeylGroup> weyl_;
  std::optional<Cokernel> translation_classes_;
  std::optional<Cokernel> coweight_classes_;
};

Alcove build_alcove(const BasedRootDatum& d);
/// Apartment datum of (d, sigma): the dual of the relative datum.
BasedRootDatum apartment_datum(const BasedRootDatum& d);
inline Alcove alcove_of(const BasedRootDatum& d) { return build_alcove(apartment_datum(d)); }

std::vector<OmegaElement> omega_group(const Alcove& a);

struct IotaValues {
  std::optional<IntVector> barycenter_displacement;  // (1 - w) c, if integral
  IntVector translation;
  IntVector fundamental_weight;
};
IotaValues iota_values(const Alcove& a, const OmegaElement& w);
bool iota_agrees(const Alcove& a, const OmegaElement& w);

/// Multiplication table lookup: index of the Omega element equal to g, if any.
std::optional<std::size_t> find_omega(const std::vector<OmegaElement>& omega, const AffineTransform& g);

struct ReducedPoint {
  AlcovePoint point;
  AffineTransform element;  // element(x) == point.coordinates
};
ReducedPoint reduce_to_alcove(const Alcove& a, const std::vector<OmegaElement>& omega, const RatVector& x);
ReducedPoint reduce_to_alcove(const Alcove& a, const RatVector& x);

std::vector<HyperspecialVertex> hyperspecial_vertices(const Alcove& a);

}  // namespace unram

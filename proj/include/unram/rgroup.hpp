#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unram/affine.hpp"

namespace unram {

struct RGroupData {
  AlcovePoint point;
  std::vector<OmegaElement> omega_x;
  std::vector<std::size_t> vanishing_facets;              // facets through the point
  std::vector<AffineTransform> reflection_generators;     // simple affine reflections of those facets
  std::vector<AffineTransform> reflections;               // every affine reflection fixing the point
  std::vector<AffineTransform> stabilizer_reflections;    // elements of the reflection part, if enumerated
  std::vector<AffineTransform> stabilizer_full;           // elements of the full stabilizer, if enumerated
  std::string reflection_type;                            // Cartan type of the reflection part
  Integer reflection_order = 1;
  Integer full_order = 1;
  bool enumerated = false;
  bool semidirect_check = false;

  FiniteAbelianGroup group;  // structure of the R-group
};

/// Stabilizer of a point of the closed alcove. Elements are listed only when the full
/// stabilizer has at most enumeration_limit elements.
RGroupData stabilizer(const Alcove& a, const std::vector<OmegaElement>& omega, const AlcovePoint& x,
                      std::size_t enumeration_limit = 5000);

/// Simple roots of the relative datum orthogonal to positive_part (indices into E).
std::vector<std::size_t> levi_subset(const BasedRootDatum& relative, const RatVector& positive_part);

struct LeviData {
  BasedRootDatum datum;
  std::vector<std::size_t> subset;
  FiniteAbelianGroup torsion_levi;
  FiniteAbelianGroup torsion_group;
  std::vector<IntVector> images;  // class in Y/ZE of each generator of the Levi torsion
  bool injective = false;
  bool support_certificate = false;
  std::optional<IntVector> witness;
};

LeviData levi_datum(const BasedRootDatum& relative, const std::vector<std::size_t>& subset);

struct ScComparison {
  FiniteAbelianGroup torsion_group;
  FiniteAbelianGroup torsion_simply_connected;
  IntMatrix map;  // Y of the group -> Y of the simply connected cover
  bool injective = false;
  std::optional<IntVector> witness;
};

/// Compares torsion(Y/ZE) of d (with its attached automorphism) with that of the simply
/// connected datum of the same root system.
ScComparison sc_comparison(const BasedRootDatum& d);

/// Simply connected datum with the Cartan matrix of d and the matching diagram automorphism.
BasedRootDatum simply_connected_cover(const BasedRootDatum& d);

}  // namespace unram

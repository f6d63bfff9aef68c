#pragma once

#include <string>
#include <vector>

#include "unram/arith.hpp"

namespace unram {

/// Irreducible finite Cartan type, Bourbaki numbering.
struct CartanType {
  char family = 'A';  // A B C D E F G, or 'X' for BC (non-reduced)
  std::size_t rank = 0;

  std::string label() const;
  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const CartanType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

/// Label of a possibly twisted group: "2A5" is {twist 2, base A5}.
struct TypeLabel {
  unsigned twist = 1;
  CartanType base;

  std::string str() const;
};

/// Accepts A1-A8, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2 with optional twist prefix
/// (2A2..2A8, 2D3..2D8, 2E6, 3D4). Throws std::invalid_argument otherwise.
TypeLabel parse_type_label(const std::string& text);

/// C(i,j) = <coroot_i, root_j>.
IntMatrix cartan_matrix(const CartanType& t);

/// Permutation of simple indices for the diagram symmetry of the given order.
std::vector<std::size_t> diagram_symmetry(const CartanType& t, unsigned order);

/// Root system with the roles of long and short roots exchanged (B <-> C).
CartanType dual_type(const CartanType& t);

Integer weyl_group_order(const CartanType& t);
std::size_t number_of_positive_roots(const CartanType& t);

/// One irreducible component of a Cartan matrix: its type and the simple indices it uses,
/// listed in the Bourbaki order of that type.
struct CartanComponent {
  CartanType type;
  std::vector<std::size_t> nodes;
};

/// Classifies a (possibly reducible) finite-type Cartan matrix. Components are ordered by
/// their smallest node. B2 vs C2 is decided by which of the two nodes comes last in the input
/// order (short last: B2).
std::vector<CartanComponent> classify_cartan(const IntMatrix& c);
/// e.g. "A1xA1", "B3", "" for the empty matrix.
std::string cartan_label(const std::vector<CartanComponent>& comps);
Integer weyl_group_order(const std::vector<CartanComponent>& comps);

}  // namespace unram

#pragma once

#include <vector>

#include "unram/rootdatum.hpp"

namespace unram {

/// Element of W acting on cocharacters (the space X-check tensor Q).
struct WeylElement {
  std::vector<std::size_t> word;  // s_{word[0]} s_{word[1]} ..., 0-based simple indices
  IntMatrix matrix;
};

/// Weyl group of a based root datum, acting on the cocharacter lattice by
/// s_i(y) = y - <alpha_i, y> alpha_i-check.
class WeylGroup {
 public:
  explicit WeylGroup(const BasedRootDatum& d);

  std::size_t rank() const { return simple_roots_.size(); }
  std::size_t dimension() const { return dim_; }
  const IntMatrix& reflection(std::size_t i) const { return reflections_.at(i); }
  const IntVector& simple_root(std::size_t i) const { return simple_roots_.at(i); }
  const IntVector& simple_coroot(std::size_t i) const { return simple_coroots_.at(i); }

  IntMatrix identity() const { return IntMatrix::identity(dim_); }
  IntMatrix from_word(const std::vector<std::size_t>& word) const;
  WeylElement element(const std::vector<std::size_t>& word) const { return {word, from_word(word)}; }

  /// Height of a vector in the span of the simple coroots (sum of its coefficients).
  Rational coroot_height(const IntVector& v) const;
  bool is_positive(const IntVector& coroot) const { return coroot_height(coroot) > 0; }
  /// i is a right descent of w when w(alpha_i-check) is negative.
  bool is_right_descent(const IntMatrix& w, std::size_t i) const;

  /// Descent algorithm; indices are 0-based.
  std::vector<std::size_t> reduced_word(const IntMatrix& w) const;
  /// Number of positive coroots sent to negative ones.
  std::size_t length(const IntMatrix& w) const;
  /// Longest element of the parabolic subgroup on the given simple indices.
  IntMatrix longest_element(const std::vector<std::size_t>& subset) const;
  IntMatrix longest_element() const;
  /// Every reduced word of w (lexicographically sorted).
  std::vector<std::vector<std::size_t>> all_reduced_words(const IntMatrix& w) const;
  /// All elements by closure; throws if more than cap elements appear.
  std::vector<IntMatrix> elements(std::size_t cap = 3000000) const;
  bool contains(const IntMatrix& w) const;

  const std::vector<IntVector>& positive_coroots() const { return positive_coroots_; }

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<IntMatrix> reflections_;
  IntVector height_functional_;  // height_scale_ times a functional that is 1 on each simple coroot
  Integer height_scale_ = 1;
  std::vector<IntVector> positive_coroots_;
};

}  // namespace unram

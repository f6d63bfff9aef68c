#include "unram/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace unram {

WeylGroup::WeylGroup(const BasedRootDatum& d) : dim_(d.cocharacter_lattice.rank) {
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    simple_roots_.push_back(d.simple_root(i));
    simple_coroots_.push_back(d.simple_coroot(i));
    IntMatrix s = IntMatrix::identity(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) s(r, c) -= d.simple_coroot(i)[r] * d.simple_root(i)[c];
    reflections_.push_back(std::move(s));
  }
  height_functional_.assign(dim_, Integer(0));
  if (!simple_coroots_.empty()) {
    RatMatrix a = to_rational(IntMatrix::from_rows(simple_coroots_));
    auto rho = solve(a, RatVector(simple_coroots_.size(), Rational(1)));
    if (!rho) throw std::invalid_argument("simple coroots are linearly dependent");
    Integer den = common_denominator(*rho);
    for (std::size_t k = 0; k < dim_; ++k) height_functional_[k] = Rational((*rho)[k] * den).get_num();
    height_scale_ = den;
  }
  for (const auto& c : d.coroots)
    if (dot(height_functional_, c) > 0) positive_coroots_.push_back(c);
}

IntMatrix WeylGroup::from_word(const std::vector<std::size_t>& word) const {
  IntMatrix w = identity();
  for (auto i : word) w = w * reflections_.at(i);
  return w;
}

Rational WeylGroup::coroot_height(const IntVector& v) const {
  return Rational(dot(height_functional_, v), height_scale_);
}

bool WeylGroup::is_right_descent(const IntMatrix& w, std::size_t i) const {
  return dot(height_functional_, w * simple_coroots_[i]) < 0;
}

std::vector<std::size_t> WeylGroup::reduced_word(const IntMatrix& w) const {
  std::vector<std::size_t> rev;
  IntMatrix cur = w;
  const std::size_t bound = positive_coroots_.size() + 1;
  while (!cur.is_identity()) {
    std::size_t i = 0;
    while (i < rank() && !is_right_descent(cur, i)) ++i;
    if (i == rank() || rev.size() > bound) throw std::invalid_argument("matrix is not an element of the Weyl group");
    rev.push_back(i);
    cur = cur * reflections_[i];
  }
  return {rev.rbegin(), rev.rend()};
}

std::size_t WeylGroup::length(const IntMatrix& w) const {
  std::size_t n = 0;
  for (const auto& c : positive_coroots_)
    if (dot(height_functional_, w * c) < 0) ++n;
  return n;
}

IntMatrix WeylGroup::longest_element(const std::vector<std::size_t>& subset) const {
  IntMatrix w = identity();
  for (;;) {
    bool grew = false;
    for (auto i : subset)
      if (!is_right_descent(w, i)) {
        w = w * reflections_[i];
        grew = true;
        break;
      }
    if (!grew) return w;
  }
}

IntMatrix WeylGroup::longest_element() const {
  std::vector<std::size_t> all(rank());
  for (std::size_t i = 0; i < rank(); ++i) all[i] = i;
  return longest_element(all);
}

std::vector<std::vector<std::size_t>> WeylGroup::all_reduced_words(const IntMatrix& w) const {
  std::map<IntMatrix, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(const IntMatrix&)> go =
      [&](const IntMatrix& v) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> words;
    if (v.is_identity()) {
      words.push_back({});
    } else {
      for (std::size_t i = 0; i < rank(); ++i) {
        if (!is_right_descent(v, i)) continue;
        for (auto u : go(v * reflections_[i])) {
          u.push_back(i);
          words.push_back(std::move(u));
        }
      }
    }
    std::sort(words.begin(), words.end());
    return memo.emplace(v, std::move(words)).first->second;
  };
  return go(w);
}

std::vector<IntMatrix> WeylGroup::elements(std::size_t cap) const {
  std::unordered_set<IntMatrix, IntMatrixHash> seen;
  std::vector<IntMatrix> out{identity()};
  seen.insert(out.front());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : reflections_) {
      IntMatrix n = out[k] * s;
      if (seen.insert(n).second) {
        if (out.size() >= cap) throw std::length_error("Weyl group larger than the enumeration cap");
        out.push_back(std::move(n));
      }
    }
  }
  return out;
}

bool WeylGroup::contains(const IntMatrix& w) const {
  if (w.rows() != dim_ || w.cols() != dim_) return false;
  try {
    reduced_word(w);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace unram

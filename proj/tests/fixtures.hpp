#pragma once

// Explicit reduced words for the Omega generators of the exceptional and classical types,
// 0-based, with the vertex each element moves the origin to.

#include <string>
#include <vector>

namespace fixture {

struct OmegaWord {
  std::string label;
  std::vector<std::size_t> word;
  std::size_t image;
};

inline std::vector<std::size_t> one_based(std::initializer_list<std::size_t> l) {
  std::vector<std::size_t> w;
  for (auto i : l) w.push_back(i - 1);
  return w;
}

// s_1 s_2 ... s_n
inline std::vector<std::size_t> a_word(std::size_t n) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(i);
  return w;
}

// s_1 ... s_{n-1} s_n s_{n-1} ... s_1
inline std::vector<std::size_t> c_word(std::size_t n) {
  std::vector<std::size_t> w = a_word(n);
  for (std::size_t i = n - 1; i-- > 0;) w.push_back(i);
  return w;
}

// B_{n-1} ... B_1 with B_k = s_k ... s_{n-2} s_e; e alternates between n-1 and n.
inline std::vector<std::size_t> d_block_word(std::size_t n, bool odd_k_ends_at_n_minus_1) {
  std::vector<std::size_t> w;
  for (std::size_t k = n - 1; k >= 1; --k) {
    for (std::size_t j = k; j + 2 <= n; ++j) w.push_back(j - 1);
    bool odd = k % 2 == 1;
    std::size_t e = (odd == odd_k_ends_at_n_minus_1) ? n - 1 : n;
    w.push_back(e - 1);
  }
  return w;
}

// s_1 ... s_{n-2} s_n s_{n-1} ... s_1
inline std::vector<std::size_t> d_w2_word(std::size_t n) {
  std::vector<std::size_t> w;
  for (std::size_t i = 1; i + 2 <= n; ++i) w.push_back(i - 1);
  w.push_back(n - 1);
  for (std::size_t i = n - 1; i >= 1; --i) w.push_back(i - 1);
  return w;
}

inline const std::vector<std::size_t>& e6_word() {
  static const auto w = one_based({1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6});
  return w;
}

inline const std::vector<std::size_t>& e7_word() {
  static const auto w =
      one_based({7, 6, 5, 4, 3, 2, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7});
  return w;
}

inline std::vector<OmegaWord> omega_words(std::size_t max_classical_rank) {
  std::vector<OmegaWord> out;
  for (std::size_t n = 1; n <= max_classical_rank; ++n) out.push_back({"A" + std::to_string(n), a_word(n), 1});
  for (std::size_t n = 2; n <= max_classical_rank; ++n) out.push_back({"C" + std::to_string(n), c_word(n), 1});
  for (std::size_t n = 3; n <= max_classical_rank; ++n) {
    std::string l = "D" + std::to_string(n);
    if (n % 2 == 1) {
      out.push_back({l, d_block_word(n, true), n});
    } else {
      out.push_back({l, d_block_word(n, false), n});
      out.push_back({l, d_w2_word(n), 1});
    }
  }
  out.push_back({"E6", e6_word(), 1});
  out.push_back({"E7", e7_word(), 7});
  return out;
}

}  // namespace fixture

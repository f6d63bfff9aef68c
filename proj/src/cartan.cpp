#include "unram/cartan.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <stdexcept>

namespace unram {

std::string CartanType::label() const {
  std::string f = family == 'X' ? std::string("BC") : std::string(1, family);
  return f + std::to_string(rank);
}

std::string TypeLabel::str() const { return (twist > 1 ? std::to_string(twist) : std::string()) + base.label(); }

TypeLabel parse_type_label(const std::string& text) {
  static const std::regex re(R"(^([23]?)([A-G])([0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("unknown type label '" + text + "'");
  TypeLabel t;
  t.twist = m[1].str().empty() ? 1u : static_cast<unsigned>(std::stoi(m[1].str()));
  t.base.family = m[2].str()[0];
  t.base.rank = static_cast<std::size_t>(std::stoul(m[3].str()));
  const std::size_t n = t.base.rank;
  bool ok = false;
  switch (t.base.family) {
    case 'A': ok = n >= 1 && n <= 8; break;
    case 'B': case 'C': ok = n >= 2 && n <= 8; break;
    case 'D': ok = n >= 3 && n <= 8; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
  }
  if (ok && t.twist == 2) ok = (t.base.family == 'A' && n >= 2) || t.base.family == 'D' || (t.base.family == 'E' && n == 6);
  if (ok && t.twist == 3) ok = t.base.family == 'D' && n == 4;
  if (!ok) throw std::invalid_argument("unknown type label '" + text + "'");
  return t;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const std::size_t n = t.rank;
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { c(i, j) = -1; c(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      c(2, 1) = -2;
      link(2, 3);
      break;
    case 'G':
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
    default:
      throw std::invalid_argument("no Cartan matrix for " + t.label());
  }
  return c;
}

std::vector<std::size_t> diagram_symmetry(const CartanType& t, unsigned order) {
  const std::size_t n = t.rank;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  if (order == 1) return p;
  if (order == 2 && t.family == 'A' && n >= 2) {
    for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
  } else if (order == 2 && t.family == 'D') {
    std::swap(p[n - 2], p[n - 1]);
  } else if (order == 2 && t.family == 'E' && n == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  } else if (order == 3 && t.family == 'D' && n == 4) {
    p[0] = 2;
    p[2] = 3;
    p[3] = 0;
  } else {
    throw std::invalid_argument("type " + t.label() + " has no diagram symmetry of order " + std::to_string(order));
  }
  return p;
}

CartanType dual_type(const CartanType& t) {
  CartanType d = t;
  if (t.family == 'B' && t.rank >= 2) d.family = 'C';
  else if (t.family == 'C') d.family = 'B';
  return d;
}

namespace {
Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}
}  // namespace

Integer weyl_group_order(const CartanType& t) {
  const std::size_t n = t.rank;
  Integer two_n = 1;
  mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), n);
  switch (t.family) {
    case 'A': return factorial(n + 1);
    case 'B': case 'C': case 'X': return two_n * factorial(n);
    case 'D': return two_n / 2 * factorial(n);
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::invalid_argument("unknown family");
}

std::size_t number_of_positive_roots(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B': case 'C': return n * n;
    case 'X': return n * n + n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::invalid_argument("unknown family");
}

namespace {

[[noreturn]] void not_finite() { throw std::invalid_argument("Cartan matrix is not of finite type"); }

// i is the short end of a multiple edge i-j
bool shorter(const IntMatrix& c, std::size_t i, std::size_t j) { return c(i, j) < c(j, i); }

CartanComponent classify_component(const IntMatrix& c, std::vector<std::size_t> nodes) {
  const std::size_t n = nodes.size();
  std::sort(nodes.begin(), nodes.end());
  if (n == 1) return {{'A', 1}, nodes};
  std::vector<std::vector<std::size_t>> adj(c.rows());
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> multi;
  for (auto i : nodes)
    for (auto j : nodes) {
      if (i >= j || c(i, j) == 0) continue;
      if (c(j, i) == 0) not_finite();
      Integer prod = c(i, j) * c(j, i);
      if (prod < 1 || prod > 3) not_finite();
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (prod > 1) multi.emplace_back(i, j);
    }
  if (edges != n - 1) not_finite();
  std::size_t branch = c.rows();
  for (auto i : nodes) {
    if (adj[i].size() > 3) not_finite();
    if (adj[i].size() == 3) {
      if (branch != c.rows()) not_finite();
      branch = i;
    }
  }
  auto path_from = [&](std::size_t start) {
    std::vector<std::size_t> p{start};
    std::size_t prev = c.rows(), cur = start;
    for (;;) {
      std::size_t next = c.rows();
      for (auto k : adj[cur])
        if (k != prev) next = k;
      if (next == c.rows()) break;
      p.push_back(next);
      prev = cur;
      cur = next;
    }
    return p;
  };
  std::vector<std::size_t> leaves;
  for (auto i : nodes)
    if (adj[i].size() == 1) leaves.push_back(i);

  if (multi.size() > 1) not_finite();
  if (branch != c.rows()) {
    if (!multi.empty()) not_finite();
    // arms from the branch node
    std::vector<std::vector<std::size_t>> arms;
    for (auto start : adj[branch]) {
      std::vector<std::size_t> arm{start};
      std::size_t prev = branch, cur = start;
      for (;;) {
        std::size_t next = c.rows();
        for (auto k : adj[cur])
          if (k != prev) next = k;
        if (next == c.rows()) break;
        arm.push_back(next);
        prev = cur;
        cur = next;
      }
      arms.push_back(arm);
    }
    std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::size_t a = arms[0].size(), b = arms[1].size(), d = arms[2].size();
    std::vector<std::size_t> order;
    if (a == 1 && b == 1) {
      // D: long arm from its tip, branch, then the two short arms
      for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) order.push_back(*it);
      order.push_back(branch);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
      return {{'D', n}, order};
    }
    if (a == 1 && b == 2 && d >= 2 && d <= 4) {
      // E: 1 3 4 ... with node 2 on the short arm
      order.push_back(arms[1][1]);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
      order.push_back(branch);
      for (auto k : arms[2]) order.push_back(k);
      return {{'E', n}, order};
    }
    not_finite();
  }
  // a path
  if (multi.empty()) {
    return {{'A', n}, path_from(std::min(leaves[0], leaves[1]))};
  }
  auto [i, j] = multi[0];
  Integer prod = c(i, j) * c(j, i);
  if (prod == 3) {
    if (n != 2) not_finite();
    std::size_t s = shorter(c, i, j) ? i : j;
    std::size_t l = s == i ? j : i;
    return {{'G', 2}, {s, l}};
  }
  if (n == 2) {
    std::size_t last = std::max(i, j), first = std::min(i, j);
    bool last_short = shorter(c, last, first);
    return {{last_short ? 'B' : 'C', 2}, {first, last}};
  }
  bool i_leaf = adj[i].size() == 1, j_leaf = adj[j].size() == 1;
  if (i_leaf || j_leaf) {
    std::size_t end = i_leaf ? i : j;
    std::size_t other = end == i ? j : i;
    std::size_t start = leaves[0] == end ? leaves[1] : leaves[0];
    auto p = path_from(start);
    return {{shorter(c, end, other) ? 'B' : 'C', n}, p};
  }
  if (n != 4) not_finite();
  // F4, starting at the long end
  std::size_t longer = shorter(c, i, j) ? j : i;
  std::size_t start = c.rows();
  for (auto k : adj[longer])
    if (k != i && k != j) start = k;
  return {{'F', 4}, path_from(start)};
}

}  // namespace

std::vector<CartanComponent> classify_cartan(const IntMatrix& c) {
  const std::size_t n = c.rows();
  std::vector<int> comp(n, -1);
  std::vector<CartanComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && comp[j] < 0 && (c(i, j) != 0 || c(j, i) != 0)) {
          comp[j] = comp[s];
          nodes.push_back(j);
          stack.push_back(j);
        }
    }
    out.push_back(classify_component(c, nodes));
  }
  return out;
}

std::string cartan_label(const std::vector<CartanComponent>& comps) {
  std::string s;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k) s += "x";
    s += comps[k].type.label();
  }
  return s;
}

Integer weyl_group_order(const std::vector<CartanComponent>& comps) {
  Integer o = 1;
  for (const auto& k : comps) o *= weyl_group_order(k.type);
  return o;
}

}  // namespace unram

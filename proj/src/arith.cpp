#include "unram/arith.hpp"

#include <sstream>

namespace unram {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

std::optional<IntVector> to_integer(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) return std::nullopt;
    r.push_back(x.get_num());
  }
  return r;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rational(m));
  if (!inv) throw std::invalid_argument("matrix is singular");
  auto r = to_integer(*inv);
  if (!r) throw std::invalid_argument("matrix is not unimodular");
  return *r;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t n = a.rows(), m = a.cols();
  RatMatrix aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
    aug(i, m) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) continue;
    aug.swap_rows(r, p);
    Rational piv = aug(r, c);
    for (std::size_t j = 0; j <= m; ++j) aug(r, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      Rational f = aug(i, c);
      for (std::size_t j = 0; j <= m; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug(i, m) != 0) return std::nullopt;
  RatVector x(m, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m);
  return x;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

IntVector apply(const IntMatrix& m, const IntVector& v) { return m * v; }

RatVector apply(const IntMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  RatVector r(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[i] += m(i, j) * v[j];
  return r;
}

RatVector apply(const RatMatrix& m, const RatVector& v) { return m * v; }

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}
IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}
IntVector scale(const Integer& c, const IntVector& v) {
  IntVector r = v;
  for (auto& x : r) x *= c;
  return r;
}
RatVector add(const RatVector& a, const RatVector& b) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}
RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}
RatVector scale(const Rational& c, const RatVector& v) {
  RatVector r = v;
  for (auto& x : r) x *= c;
  return r;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e(n, Integer(0));
  e.at(i) = 1;
  return e;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}
bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer common_denominator(const RatVector& v) {
  Integer d = 1;
  for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
  }
  return s + "]";
}

Rational parse_rational(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const std::string text = first == std::string::npos ? std::string() : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  auto bad = [&]() { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto is_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

namespace {
inline void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }
}  // namespace

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) mix(h, static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())));
  return h;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  std::size_t h = m.rows() * 131 + m.cols();
  for (const auto& x : m.data()) mix(h, static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())));
  return h;
}

std::size_t RatVectorHash::operator()(const RatVector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) {
    mix(h, static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t())));
    mix(h, static_cast<std::size_t>(mpz_get_si(x.get_den_mpz_t())));
  }
  return h;
}

}  // namespace unram

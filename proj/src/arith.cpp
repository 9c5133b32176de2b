#include "blowup/arith.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace blowup {

IntVector int_vector(std::initializer_list<long long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

IntVector unit_vector(std::size_t dim, std::size_t index) {
  IntVector v(dim);
  v[index] = 1;
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const IntVector& a, const Integer& factor) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
  return r;
}

IntVector combine(const Integer& factor_a, const IntVector& a, const Integer& factor_b,
                  const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = factor_a * a[i] + factor_b * b[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntVector make_primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntVector primitive_from_rational(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) {
    const Integer d = boost::multiprecision::denominator(q);
    l = boost::multiprecision::lcm(l, d);
  }
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
  }
  return make_primitive(std::move(r));
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

IntVector to_integer(const RationalVector& v) {
  assert(is_integral(v));
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = boost::multiprecision::numerator(v[i]);
  return r;
}

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end(), LexLess{});
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RationalVector> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<RationalVector> solve_square(std::vector<RationalVector> m, RationalVector b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      b[i] -= f * b[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

std::optional<std::vector<RationalVector>> inverse(const std::vector<RationalVector>& m) {
  const std::size_t n = m.size();
  std::vector<RationalVector> a = m;
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const Rational p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace blowup

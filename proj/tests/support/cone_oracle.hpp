#pragma once

// Brute-force oracles for small full-dimensional cones, in plain 64-bit
// arithmetic and independent of the double description code under test.

#include "blowup/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace blowup::testing {

using SmallVec = std::vector<std::int64_t>;

inline std::int64_t det(std::vector<SmallVec> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<SmallVec> minor;
    for (std::size_t i = 1; i < k; ++i) {
      SmallVec row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    const std::int64_t sign = j % 2 == 0 ? 1 : -1;
    total += sign * m[0][j] * det(minor);
  }
  return total;
}

inline SmallVec primitive(SmallVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, std::llabs(x));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline std::int64_t sdot(const SmallVec& a, const SmallVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline int small_rank(const std::vector<SmallVec>& rows) {
  std::vector<IntVector> big;
  for (const auto& r : rows) {
    IntVector v;
    for (auto x : r) v.emplace_back(x);
    big.push_back(v);
  }
  return static_cast<int>(blowup::rank(big));
}

// Facets of a full-dimensional cone: normals of hyperplanes spanned by d - 1
// generators that leave every generator on one side.
inline std::set<SmallVec> brute_facets(const std::vector<SmallVec>& gens) {
  const std::size_t d = gens.front().size();
  std::set<SmallVec> out;
  std::vector<int> pick(gens.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<SmallVec> rows;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (pick[i]) rows.push_back(gens[i]);
    SmallVec normal(d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<SmallVec> m;
      for (const auto& r : rows) {
        SmallVec row;
        for (std::size_t c = 0; c < d; ++c)
          if (c != j) row.push_back(r[c]);
        m.push_back(row);
      }
      normal[j] = (j % 2 == 0 ? 1 : -1) * det(m);
    }
    if (std::all_of(normal.begin(), normal.end(), [](auto x) { return x == 0; })) continue;
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      const auto s = sdot(normal, g);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) continue;
    if (neg) for (auto& x : normal) x = -x;
    out.insert(primitive(normal));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Minimal generating set of cone ∩ Z^d. Every Hilbert basis element lies in
// the zonotope spanned by the generators, hence in its bounding box; points
// are visited by increasing degree under a strictly positive grading and kept
// unless an earlier kept point can be subtracted within the cone.
inline std::set<SmallVec> brute_hilbert_basis(const std::vector<SmallVec>& gens) {
  const std::size_t d = gens.front().size();
  const auto fs = brute_facets(gens);
  SmallVec grading(d, 0);
  for (const auto& f : fs)
    for (std::size_t i = 0; i < d; ++i) grading[i] += f[i];
  SmallVec lo(d, 0), hi(d, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < d; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];
  auto inside = [&](const SmallVec& x) {
    return std::all_of(fs.begin(), fs.end(), [&](const SmallVec& f) { return sdot(f, x) >= 0; });
  };
  std::vector<std::pair<std::int64_t, SmallVec>> points;
  SmallVec x = lo;
  while (true) {
    if (inside(x) && std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; }))
      points.emplace_back(sdot(grading, x), x);
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == d) break;
    ++x[i];
  }
  std::sort(points.begin(), points.end());
  std::vector<SmallVec> basis;
  for (const auto& [deg, p] : points) {
    bool reducible = false;
    for (const auto& h : basis) {
      SmallVec r(d);
      for (std::size_t i = 0; i < d; ++i) r[i] = p[i] - h[i];
      if (inside(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  return {basis.begin(), basis.end()};
}

inline IntVector to_big(const SmallVec& v) {
  IntVector out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline SmallVec to_small(const IntVector& v) {
  SmallVec out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

// Random full-dimensional pointed cone in dimension d with entries in
// [lo, hi]: resampled until the generators span R^d and some strictly positive
// functional exists (checked via the brute facets).
inline std::vector<SmallVec> random_pointed_cone(std::mt19937& rng, std::size_t d, int lo, int hi,
                                                 std::size_t extra) {
  std::uniform_int_distribution<int> entry(lo, hi);
  while (true) {
    std::vector<SmallVec> gens;
    for (std::size_t k = 0; k < d + extra; ++k) {
      SmallVec g(d);
      for (auto& x : g) x = entry(rng);
      if (std::any_of(g.begin(), g.end(), [](auto v) { return v != 0; })) gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() < d || small_rank(gens) != static_cast<int>(d)) continue;
    const auto fs = brute_facets(gens);
    if (fs.empty()) continue;
    // Pointed and full-dimensional iff the facet normals span R^d.
    if (small_rank({fs.begin(), fs.end()}) != static_cast<int>(d)) continue;
    return gens;
  }
}

}  // namespace blowup::testing

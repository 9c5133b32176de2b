#include "blowup/errors.hpp"
#include "blowup/polyhedra.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>

namespace blowup::poly {

namespace {

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zeros;  // processed constraints tight at v
};

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

ConeGenerators double_description(const std::vector<IntVector>& inequalities, std::size_t dim) {
  const std::size_t m = inequalities.size();
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw InputError("inequality has the wrong dimension");
  }

  // Constraints with many zero entries first keeps intermediate ray sets small.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto zero_count = [&](std::size_t i) {
    return std::count_if(inequalities[i].begin(), inequalities[i].end(),
                         [](const Integer& x) { return x == 0; });
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return zero_count(a) > zero_count(b); });

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vector(dim, i));
  std::vector<Ray> rays;

  for (std::size_t step = 0; step < m; ++step) {
    const IntVector& a = inequalities[order[step]];

    auto lin_it = std::find_if(lineality.begin(), lineality.end(),
                               [&](const IntVector& l) { return dot(a, l) != 0; });
    if (lin_it != lineality.end()) {
      // The constraint cuts the lineality space: one lineality direction becomes a ray.
      IntVector l = *lin_it;
      lineality.erase(lin_it);
      Integer s = dot(a, l);
      if (s < 0) {
        for (auto& x : l) x = -x;
        s = -s;
      }
      for (auto& other : lineality) {
        const Integer t = dot(a, other);
        if (t != 0) other = make_primitive(combine(s, other, -t, l));
      }
      for (auto& r : rays) {
        const Integer t = dot(a, r.v);
        if (t != 0) r.v = make_primitive(combine(s, r.v, -t, l));
        r.zeros.resize(m);
        r.zeros.set(step);
      }
      Ray nr{l, boost::dynamic_bitset<>(m)};
      for (std::size_t k = 0; k < step; ++k) nr.zeros.set(k);
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> values(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = dot(a, rays[i].v);
      const int sg = sign(values[i]);
      if (sg > 0) pos.push_back(i);
      if (sg < 0) neg.push_back(i);
      if (sg == 0) rays[i].zeros.set(step);
    }
    if (neg.empty()) continue;

    const std::size_t pointed_dim = dim - lineality.size();
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sign(values[i]) >= 0) next.push_back(rays[i]);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{make_primitive(combine(values[p], rays[q].v, -values[q], rays[p].v)), common};
        nr.zeros.set(step);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lineality = std::move(lineality);
  sort_unique(out.rays);
  return out;
}

}  // namespace blowup::poly

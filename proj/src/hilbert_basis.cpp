#include "blowup/errors.hpp"
#include "blowup/lp.hpp"
#include "blowup/polyhedra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

namespace blowup::poly {

namespace {

using Simplex = std::vector<std::size_t>;

// Pulling triangulation: cone(S) is the union of cone(p, F) over the facets F of
// cone(S) that miss the pivot p, where p is the first ray of S.
void pull(const std::vector<IntVector>& rays, const std::vector<std::size_t>& subset, std::size_t k,
          std::vector<std::size_t>& prefix, std::vector<Simplex>& out) {
  if (subset.size() == k) {
    Simplex s = prefix;
    s.insert(s.end(), subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  const std::size_t pivot = subset.front();
  std::vector<IntVector> gens;
  for (std::size_t i : subset) gens.push_back(rays[i]);
  const auto dual = double_description(gens, rays.front().size());
  for (const auto& f : dual.rays) {
    std::vector<std::size_t> face;
    bool has_pivot = false;
    for (std::size_t i : subset) {
      if (dot(f, rays[i]) == 0) {
        face.push_back(i);
        if (i == pivot) has_pivot = true;
      }
    }
    if (has_pivot) continue;
    prefix.push_back(pivot);
    pull(rays, face, k - 1, prefix, out);
    prefix.pop_back();
  }
}

Integer floor_mod(const Integer& x, const Integer& d) {
  Integer r = x % d;
  if (r < 0) r += d;
  return r;
}

// Non-zero lattice points of the half-open parallelepiped spanned by `gens`
// (r linearly independent vectors in Z^r), enumerated as the group Z^r / L.
void parallelepiped_points(const std::vector<IntVector>& gens, std::size_t budget,
                           std::set<IntVector, LexLess>& out) {
  const std::size_t r = gens.size();
  std::vector<RationalVector> g(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i][j] = Rational(gens[j][i]);
  }
  const auto inv = inverse(g);
  if (!inv) throw std::logic_error("triangulation produced a degenerate simplex");
  Integer denom = 1;
  for (const auto& row : *inv) {
    for (const auto& q : row) denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(q));
  }
  if (denom == 1) return;  // unimodular simplex
  std::vector<IntVector> steps(r, IntVector(r));  // image of e_j in (Z/denom)^r
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      const Rational scaled = (*inv)[i][j] * Rational(denom);
      steps[j][i] = floor_mod(boost::multiprecision::numerator(scaled), denom);
    }
  }
  std::set<IntVector, LexLess> seen;
  std::deque<IntVector> queue;
  IntVector zero(r);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    IntVector s = std::move(queue.front());
    queue.pop_front();
    for (const auto& step : steps) {
      IntVector t(r);
      for (std::size_t i = 0; i < r; ++i) t[i] = floor_mod(s[i] + step[i], denom);
      if (seen.insert(t).second) {
        if (seen.size() > budget) {
          throw CapExceeded("fundamental parallelepiped exceeds the enumeration budget of " +
                            std::to_string(budget));
        }
        queue.push_back(std::move(t));
      }
    }
  }
  for (const auto& s : seen) {
    if (is_zero(s)) continue;
    IntVector p(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += gens[j][i] * s[j];
      p[i] = acc / denom;
    }
    out.insert(std::move(p));
  }
}

}  // namespace

HilbertBasis hilbert_basis(const IntegerCone& cone, const Limits& limits) {
  if (cone.dim() > static_cast<std::size_t>(limits.hb_dim_cap)) {
    throw CapExceeded("Hilbert basis dimension " + std::to_string(cone.dim()) +
                      " exceeds the cap " + std::to_string(limits.hb_dim_cap));
  }
  HilbertBasis hb;
  const auto& rays = cone.extreme_rays();
  if (rays.empty()) return hb;

  const SublatticeBasis lattice(cone.dim(), cone.equations());
  const std::size_t r = lattice.rank();
  std::vector<IntVector> local;
  for (const auto& ray : rays) local.push_back(lattice.coordinates(ray));
  std::sort(local.begin(), local.end(), LexLess{});
  const auto local_cone = IntegerCone::from_generators(r, local);
  const auto& local_facets = local_cone.facets();

  std::vector<Simplex> simplices;
  std::vector<std::size_t> all(local.size()), prefix;
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  pull(local, all, r, prefix, simplices);
  hb.simplices = simplices.size();

  std::set<IntVector, LexLess> candidates(local.begin(), local.end());
  for (const auto& s : simplices) {
    std::vector<IntVector> gens;
    for (std::size_t i : s) gens.push_back(local[i]);
    parallelepiped_points(gens, limits.enumeration_budget, candidates);
    if (candidates.size() > limits.enumeration_budget) {
      throw CapExceeded("Hilbert basis candidates exceed the enumeration budget");
    }
  }
  hb.candidates = candidates.size();

  // Facet values; x - h lies in the cone iff every facet value of h is at most that of x.
  struct Entry {
    IntVector x;
    std::vector<Integer> values;
    Integer degree;
  };
  std::vector<Entry> entries;
  entries.reserve(candidates.size());
  for (const auto& x : candidates) {
    Entry e{x, {}, 0};
    for (const auto& f : local_facets) {
      e.values.push_back(dot(f, x));
      e.degree += e.values.back();
    }
    entries.push_back(std::move(e));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.degree < b.degree; });

  std::vector<const Entry*> basis;
  for (const auto& e : entries) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Entry* h) {
      if (h->degree >= e.degree) return false;
      for (std::size_t k = 0; k < e.values.size(); ++k) {
        if (h->values[k] > e.values[k]) return false;
      }
      return true;
    });
    if (!reducible) basis.push_back(&e);
  }
  for (const Entry* h : basis) hb.elements.push_back(lattice.embed(h->x));
  sort_unique(hb.elements);
  return hb;
}

// ---------------------------------------------------------------------------
// Semigroup membership

namespace {

// An integer w with <w, g> >= 1 for every generator g.
IntVector positive_grading(const std::vector<IntVector>& gens, std::size_t dim) {
  if (std::all_of(gens.begin(), gens.end(), [](const IntVector& g) { return is_nonnegative(g); })) {
    return IntVector(dim, 1);
  }
  lp::LinearProgram prog;
  prog.direction = lp::Direction::Minimize;
  prog.objective.assign(dim, 0);
  prog.free_variables.assign(dim, true);
  for (const auto& g : gens) prog.add_row(to_rational(g), lp::Sense::GreaterEqual, 1);
  const auto res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) {
    throw PreconditionError("generators admit no positive grading; the semigroup is not pointed");
  }
  return primitive_from_rational(res.primal);
}

}  // namespace

SemigroupOracle::SemigroupOracle(std::vector<IntVector> generators)
    : generators_(std::move(generators)),
      cone_(IntegerCone::from_generators(generators_.empty() ? 0 : generators_.front().size(),
                                         generators_)) {
  if (generators_.empty()) throw InputError("semigroup needs at least one generator");
  grading_ = positive_grading(generators_, generators_.front().size());
}

Membership SemigroupOracle::decompose(const IntVector& point, std::size_t budget) const {
  const std::size_t k = generators_.size();
  if (point.size() != generators_.front().size()) {
    throw InputError("point dimension differs from the generators");
  }
  Membership m;
  m.grading = grading_;
  m.degree_bound = dot(grading_, point);
  m.coefficients.assign(k, 0);
  if (is_zero(point)) {
    m.member = true;
    return m;
  }
  if (m.degree_bound <= 0 || !cone_.contains(point)) return m;
  for (std::size_t j = 0; j < k; ++j) {
    if (generators_[j] == point) {
      m.member = true;
      m.coefficients[j] = 1;
      return m;
    }
  }

  std::vector<Integer> degrees(k);
  for (std::size_t j = 0; j < k; ++j) degrees[j] = dot(grading_, generators_[j]);
  // Suffix cones prune remainders that the unused generators cannot reach.
  std::vector<std::optional<IntegerCone>> suffix(k);
  auto suffix_cone = [&](std::size_t j) -> const IntegerCone& {
    if (!suffix[j]) {
      suffix[j] = IntegerCone::from_generators(
          point.size(), std::vector<IntVector>(generators_.begin() + static_cast<std::ptrdiff_t>(j),
                                               generators_.end()));
    }
    return *suffix[j];
  };
  std::set<std::pair<std::size_t, IntVector>> failed;

  std::vector<Integer> coeffs(k);
  std::function<bool(std::size_t, const IntVector&)> search = [&](std::size_t j,
                                                                 const IntVector& rem) -> bool {
    if (is_zero(rem)) return true;
    if (j == k) return false;
    if (++m.nodes > budget) {
      throw CapExceeded("semigroup membership search exceeded " + std::to_string(budget) +
                        " nodes");
    }
    if (!suffix_cone(j).contains(rem)) return false;
    if (failed.count({j, rem})) return false;
    const Integer max_c = dot(grading_, rem) / degrees[j];
    for (Integer c = max_c; c >= 0; --c) {
      coeffs[j] = c;
      if (search(j + 1, c == 0 ? rem : subtract(rem, scale(generators_[j], c)))) return true;
    }
    coeffs[j] = 0;
    failed.insert({j, rem});
    return false;
  };
  if (search(0, point)) {
    m.member = true;
    m.coefficients = coeffs;
  }
  return m;
}

Membership semigroup_member(const IntVector& point, const std::vector<IntVector>& generators,
                            std::size_t budget) {
  return SemigroupOracle(generators).decompose(point, budget);
}

}  // namespace blowup::poly

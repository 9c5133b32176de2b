#include "doctest.h"

#include "blowup/errors.hpp"
#include "blowup/lp.hpp"
#include "blowup/polyhedra.hpp"
#include "support/cone_oracle.hpp"
#include "support/graph_corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace blowup;
using namespace blowup::poly;
using blowup::testing::SmallVec;

namespace {

IntVector iv(std::initializer_list<long long> xs) { return int_vector(xs); }

std::set<SmallVec> small_set(const std::vector<IntVector>& vs) {
  std::set<SmallVec> out;
  for (const auto& v : vs) out.insert(blowup::testing::to_small(v));
  return out;
}

// Some x satisfies every facet except `drop` and violates `drop`.
bool irredundancy_witness(const std::vector<IntVector>& facets, std::size_t drop,
                          const std::vector<IntVector>& equations) {
  lp::LinearProgram p;
  const std::size_t d = facets[drop].size();
  p.objective.assign(d, 0);
  p.free_variables.assign(d, true);
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const RationalVector row = to_rational(facets[k]);
    if (k == drop) {
      p.add_row(row, lp::Sense::LessEqual, -1);
    } else {
      p.add_row(row, lp::Sense::GreaterEqual, 0);
    }
  }
  for (const auto& e : equations) p.add_row(to_rational(e), lp::Sense::Equal, 0);
  return lp::solve(p).status == lp::Status::Optimal;
}

// x in cone(gens) decided by an LP over the generator coefficients.
bool lp_contains(const std::vector<IntVector>& gens, const IntVector& x) {
  lp::LinearProgram p;
  p.objective.assign(gens.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    RationalVector row;
    for (const auto& g : gens) row.emplace_back(g[i]);
    p.add_row(row, lp::Sense::Equal, Rational(x[i]));
  }
  return lp::solve(p).status == lp::Status::Optimal;
}

}  // namespace

TEST_CASE("facets of small cones") {
  auto fs = facets({iv({1, 0}), iv({0, 1})});
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].normal == iv({0, 1}));
  CHECK(fs[1].normal == iv({1, 0}));

  const IntegerCone rees =
      IntegerCone::from_generators(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 0, 1}), iv({0, 1, 1})});
  CHECK(small_set(rees.facets()) ==
        std::set<SmallVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
  CHECK(rees.is_pointed());
  CHECK(rees.is_full_dimensional());

  CHECK_THROWS_AS(IntegerCone::from_generators(2, {iv({0, 0})}), InputError);
  CHECK_THROWS_AS(IntegerCone::from_generators(2, {iv({1, 0, 0})}), InputError);
}

TEST_CASE("lower-dimensional cones carry equations") {
  const IntegerCone c = IntegerCone::from_generators(3, {iv({1, 0, 1}), iv({0, 1, 1})});
  CHECK_FALSE(c.is_full_dimensional());
  CHECK(c.equations().size() == 1);
  CHECK(c.dimension_of_span() == 2);
  CHECK(c.contains(iv({1, 1, 2})));
  CHECK_FALSE(c.contains(iv({1, 1, 1})));
  CHECK_FALSE(c.in_interior(iv({1, 1, 2})));
}

TEST_CASE("extreme rays") {
  const auto rays = extreme_rays({iv({1, 0}), iv({0, 1})}, 2);
  CHECK(small_set(rays) == std::set<SmallVec>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(extreme_rays({iv({1, 0})}, 2), NotPointedError);

  // Simis cone of I(K2): a >= 0, a1 >= a3, a2 >= a3.
  const auto simis = extreme_rays(
      {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 0, -1}), iv({0, 1, -1})}, 3);
  CHECK(small_set(simis) == std::set<SmallVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  const IntegerCone cone = IntegerCone::from_inequalities(
      3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 0, -1}), iv({0, 1, -1})});
  for (const auto& r : cone.extreme_rays()) {
    std::size_t tight = 0;
    for (const auto& f : cone.facets()) tight += dot(f, r) == 0;
    CHECK(tight >= 2);
  }
  // a1 >= 0 and a2 >= 0 follow from the other three.
  CHECK(small_set(cone.facets()) == std::set<SmallVec>{{0, 0, 1}, {1, 0, -1}, {0, 1, -1}});
}

TEST_CASE("double description against brute-force facets") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 3 + trial % 4;
    const auto gens = blowup::testing::random_pointed_cone(rng, d, -2, 3, trial % 3);
    std::vector<IntVector> big;
    for (const auto& g : gens) big.push_back(blowup::testing::to_big(g));
    const IntegerCone cone = IntegerCone::from_generators(d, big);
    CHECK(small_set(cone.facets()) == blowup::testing::brute_facets(gens));
    for (std::size_t k = 0; k < cone.facets().size(); ++k)
      CHECK(irredundancy_witness(cone.facets(), k, cone.equations()));

    // Round trip: the rays of the facet description generate the same cone.
    const auto rays = extreme_rays(cone.facets(), d);
    for (const auto& r : rays) CHECK(lp_contains(big, r));
    for (const auto& g : big) CHECK(lp_contains(rays, g));
  }
}

TEST_CASE("Hilbert bases of named cones") {
  auto hb = hilbert_basis(IntegerCone::from_generators(2, {iv({1, 0}), iv({0, 1})}));
  CHECK(small_set(hb.elements) == std::set<SmallVec>{{1, 0}, {0, 1}});

  const IntegerCone k2 = IntegerCone::from_inequalities(
      3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 0, -1}), iv({0, 1, -1})});
  CHECK(small_set(hilbert_basis(k2).elements) ==
        std::set<SmallVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});

  // Simis cone of I(K3), covers {1,2}, {1,3}, {2,3}.
  const IntegerCone k3 = IntegerCone::from_inequalities(
      4, {iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1}),
          iv({1, 1, 0, -1}), iv({1, 0, 1, -1}), iv({0, 1, 1, -1})});
  CHECK(small_set(hilbert_basis(k3).elements) ==
        std::set<SmallVec>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 1},
                           {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 2}});

  // A non-normal-looking simplicial cone in the plane: cone((1,0),(1,3)).
  hb = hilbert_basis(IntegerCone::from_generators(2, {iv({1, 0}), iv({1, 3})}));
  CHECK(small_set(hb.elements) == std::set<SmallVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});

  CHECK_THROWS_AS(hilbert_basis(IntegerCone::from_inequalities(2, {iv({1, 0})})), NotPointedError);
  Limits tight;
  tight.hb_dim_cap = 3;
  CHECK_THROWS_AS(hilbert_basis(k3, tight), CapExceeded);
}

TEST_CASE("Hilbert bases of lower-dimensional cones") {
  const IntegerCone c = IntegerCone::from_generators(3, {iv({2, 0, 1}), iv({0, 2, 1})});
  // Lattice points of the plane x + y = 2z in the cone: (1,1,1) is extra.
  CHECK(small_set(hilbert_basis(c).elements) ==
        std::set<SmallVec>{{2, 0, 1}, {0, 2, 1}, {1, 1, 1}});
}

TEST_CASE("Hilbert bases against the brute-force oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto gens = blowup::testing::random_pointed_cone(rng, d, -2, 3, trial % 3);
    std::vector<IntVector> big;
    for (const auto& g : gens) big.push_back(blowup::testing::to_big(g));
    const IntegerCone cone = IntegerCone::from_generators(d, big);
    const HilbertBasis hb = hilbert_basis(cone);
    REQUIRE(small_set(hb.elements) == blowup::testing::brute_hilbert_basis(gens));

    // Completeness: every cone point with entries in [-4, 4] decomposes. Points
    // are visited by increasing degree under a positive grading, so a point is
    // reached once subtracting some basis element leaves a reached point.
    // Remainders outside the box fall back to the membership oracle.
    SmallVec grading(d, 0);
    for (const auto& f : blowup::testing::brute_facets(gens))
      for (std::size_t i = 0; i < d; ++i) grading[i] += f[i];
    std::vector<std::pair<std::int64_t, SmallVec>> points;
    SmallVec x(d, -4);
    while (true) {
      if (cone.contains(blowup::testing::to_big(x))) points.emplace_back(blowup::testing::sdot(grading, x), x);
      std::size_t i = 0;
      while (i < d && x[i] == 4) x[i] = -4, ++i;
      if (i == d) break;
      ++x[i];
    }
    std::sort(points.begin(), points.end());
    const auto basis = small_set(hb.elements);
    const auto in_box = [](const SmallVec& v) {
      return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e >= -4 && e <= 4; });
    };
    std::set<SmallVec> reached{SmallVec(d, 0)};
    for (const auto& [deg, p] : points) {
      bool ok = reached.count(p) > 0;
      for (auto it = basis.begin(); !ok && it != basis.end(); ++it) {
        SmallVec rest = p;
        for (std::size_t i = 0; i < d; ++i) rest[i] -= (*it)[i];
        ok = reached.count(rest) > 0;
      }
      for (auto it = basis.begin(); !ok && it != basis.end(); ++it) {
        SmallVec rest = p;
        for (std::size_t i = 0; i < d; ++i) rest[i] -= (*it)[i];
        const IntVector big_rest = blowup::testing::to_big(rest);
        ok = !in_box(rest) && cone.contains(big_rest) && semigroup_member(big_rest, hb.elements).member;
      }
      CHECK(ok);
      reached.insert(p);
    }
  }
}

TEST_CASE("semigroup membership") {
  const std::vector<IntVector> gens{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})};
  Membership m = semigroup_member(iv({1, 1, 1}), gens);
  REQUIRE(m.member);
  CHECK(m.coefficients == std::vector<Integer>{0, 0, 1});
  m = semigroup_member(iv({2, 1, 1}), gens);
  REQUIRE(m.member);
  CHECK(m.coefficients == std::vector<Integer>{1, 0, 1});
  CHECK_FALSE(semigroup_member(iv({0, 0, 1}), gens).member);

  // Numerical semigroup <3, 5>: 7 is a gap, 8 is not.
  CHECK_FALSE(semigroup_member(iv({7}), {iv({3}), iv({5})}).member);
  CHECK(semigroup_member(iv({8}), {iv({3}), iv({5})}).member);

  CHECK_THROWS_AS(SemigroupOracle({iv({1}), iv({-1})}), PreconditionError);
  CHECK_THROWS_AS(semigroup_member(iv({400}), {iv({3}), iv({5})}, 3), CapExceeded);

  // Mixed-sign generators need a non-trivial grading.
  const SemigroupOracle o({iv({1, -1}), iv({0, 1})});
  CHECK(o.decompose(iv({2, 0})).member);
  CHECK_FALSE(o.decompose(iv({-1, 3})).member);
}

TEST_CASE("vertices and integrality") {
  HRepPolyhedron simplex{3, {}};
  for (std::size_t i = 0; i < 3; ++i) simplex.inequalities.push_back({unit_vector(3, i), 0});
  simplex.inequalities.push_back({iv({-1, -1, -1}), -1});
  const VertexEnumeration ve = vertices(simplex);
  CHECK(ve.vertices.size() == 4);
  CHECK(ve.rays.empty());
  CHECK(is_integral(simplex).passed());

  const auto c5 = comb::incidence_matrix(comb::edge_clutter(blowup::testing::cycle(5)));
  const HRepPolyhedron q = HRepPolyhedron::covering(c5);
  const VertexEnumeration qv = vertices(q);
  CHECK(std::find(qv.vertices.begin(), qv.vertices.end(), RationalVector(5, Rational(1, 2))) !=
        qv.vertices.end());
  CHECK(qv.rays.size() == 5);
  const CheckReport r = is_integral(q);
  CHECK(r.verdict == Verdict::False);
  CHECK(r.witness.find("1/2") != std::string::npos);

  HRepPolyhedron empty{1, {{iv({1}), 1}, {iv({-1}), 0}}};
  CHECK_THROWS_AS(vertices(empty), InfeasibleError);
  HRepPolyhedron line{2, {{iv({1, 0}), 0}}};
  CHECK_THROWS_AS(vertices(line), NotPointedError);
}

TEST_CASE("vertices against basic solutions") {
  // A vertex is a feasible point where the tight rows have full rank; enumerate
  // d-subsets of rows, solve, keep the feasible ones.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    comb::IncidenceMatrix a;
    a.rows = 3 + trial % 2;
    a.columns.assign(2 + trial % 3, std::vector<int>(a.rows));
    for (auto& col : a.columns) {
      for (auto& x : col) x = bit(rng);
      col[trial % a.rows] = 1;
    }
    for (const HRepPolyhedron& p : {HRepPolyhedron::packing(a), HRepPolyhedron::covering(a)}) {
      std::set<RationalVector, LexLess> expected;
      const std::size_t m = p.inequalities.size(), d = p.dim;
      std::vector<int> pick(m, 0);
      std::fill(pick.end() - static_cast<long>(d), pick.end(), 1);
      do {
        std::vector<RationalVector> rows;
        RationalVector rhs;
        for (std::size_t i = 0; i < m; ++i) {
          if (!pick[i]) continue;
          rows.push_back(to_rational(p.inequalities[i].normal));
          rhs.emplace_back(p.inequalities[i].offset);
        }
        const auto x = solve_square(rows, rhs);
        if (!x) continue;
        bool feasible = true;
        for (const auto& h : p.inequalities) feasible = feasible && dot(to_rational(h.normal), *x) >= h.offset;
        if (feasible) expected.insert(*x);
      } while (std::next_permutation(pick.begin(), pick.end()));
      const auto got = vertices(p).vertices;
      CHECK(std::set<RationalVector, LexLess>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("lattice points of dilations") {
  auto pts = lattice_points_dilation({iv({1, 0}), iv({0, 1})}, 2);
  CHECK(small_set(pts) == std::set<SmallVec>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(small_set(lattice_points_dilation({iv({1, 1, 1})}, 2)) == std::set<SmallVec>{{2, 2, 2}});
  const auto c4 = comb::vertex_clique_matrix(blowup::testing::cycle(4));
  std::vector<IntVector> cols;
  for (const auto& c : c4.columns) {
    IntVector v;
    for (int x : c) v.emplace_back(x);
    cols.push_back(v);
  }
  CHECK(lattice_points_dilation(cols, 2).size() == 9);

  // Brute force: x in bP iff x / b is a convex combination, decided by LP.
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<IntVector> ps;
    for (int k = 0; k < 3; ++k) ps.push_back(iv({e(rng), e(rng), e(rng)}));
    const int b = 1 + trial % 3;
    std::set<SmallVec> expected;
    for (int x = 0; x <= 2 * b; ++x)
      for (int y = 0; y <= 2 * b; ++y)
        for (int z = 0; z <= 2 * b; ++z) {
          std::vector<IntVector> lifted;
          for (const auto& p : ps) lifted.push_back(iv({(long long)p[0], (long long)p[1], (long long)p[2], 1}));
          if (lp_contains(lifted, iv({x, y, z, b}))) expected.insert({x, y, z});
        }
    CHECK(small_set(lattice_points_dilation(ps, b)) == expected);
  }
}

TEST_CASE("vector text format") {
  std::istringstream in("# header\n1 2 3\n\n-4 5 6 # trailing\n");
  const auto vs = read_vectors(in);
  REQUIRE(vs.size() == 2);
  CHECK(vs[1] == iv({-4, 5, 6}));
  std::ostringstream out;
  write_vectors(out, vs);
  std::istringstream back(out.str());
  CHECK(read_vectors(back) == vs);
  std::istringstream bad("1 x 3\n");
  CHECK_THROWS_AS(read_vectors(bad), InputError);
  std::istringstream ragged("1 2\n3\n");
  CHECK_THROWS_AS(read_vectors(ragged), InputError);
}

TEST_CASE("inequality rendering") {
  CHECK(render_inequality(iv({1, 1, -1})) == "a1 + a2 >= a3");
  CHECK(render_inequality(iv({1, 1, 1, 1, 1, -3})) == "a1 + a2 + a3 + a4 + a5 >= 3a6");
  CHECK(render_inequality(iv({0, 1})) == "a2 >= 0");
}

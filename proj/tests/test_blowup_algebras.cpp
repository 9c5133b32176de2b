#include "doctest.h"

#include "blowup/blowup_algebras.hpp"
#include "blowup/errors.hpp"
#include "blowup/structure_checks.hpp"
#include "support/graph_corpus.hpp"

#include <set>

using namespace blowup;
using namespace blowup::alg;
using namespace blowup::comb;
using blowup::testing::complete;
using blowup::testing::cycle;
using blowup::testing::path;

namespace {

std::set<IntVector, LexLess> as_set(const std::vector<IntVector>& vs) { return {vs.begin(), vs.end()}; }

IntVector iv(std::initializer_list<long long> xs) { return int_vector(xs); }

std::vector<ExponentVector> cover_ideal_of(const Graph& g) { return cover_ideal(edge_clutter(g)); }

// (w, |w| - 1) over the non-empty cliques w.
std::set<IntVector, LexLess> clique_points(const Graph& g) {
  std::set<IntVector, LexLess> out;
  for (const auto& w : all_cliques(g)) {
    IntVector v = indicator(g.vertex_count(), w).to_int();
    v.emplace_back(static_cast<long long>(w.size()) - 1);
    out.insert(v);
  }
  return out;
}

void check_certificates(const NormalityResult& r) {
  REQUIRE(r.certificates.size() == r.basis.elements.size());
  for (std::size_t i = 0; i < r.basis.elements.size(); ++i) {
    const auto& m = r.certificates[i];
    REQUIRE(m.member);
    IntVector sum(r.basis.elements[i].size(), 0);
    for (std::size_t k = 0; k < r.a_prime.size(); ++k) {
      CHECK(m.coefficients[k] >= 0);
      sum = add(sum, scale(r.a_prime[k], m.coefficients[k]));
    }
    CHECK(sum == r.basis.elements[i]);
  }
}

}  // namespace

TEST_CASE("monomial rendering") {
  CHECK(render(MonomialGenerator{{{1, 2, 0}}, 3}) == "x1x2^2 t^3");
  CHECK(render(MonomialGenerator{{{1, 0}}, 0}) == "x1");
  CHECK(render(MonomialGenerator{{{1, 1}}, 1}) == "x1x2 t");
  CHECK(render(MonomialGenerator{{{0, 0}}, 0}) == "1");
  CHECK(render(MonomialGenerator{{{1, 2}}, 1}, {"a", "b"}) == "a*b^2 t");
  CHECK(MonomialGenerator::from_vector(iv({1, 0, 2})) == MonomialGenerator{{{1, 0}}, 2});
  CHECK(MonomialGenerator{{{1, 0}}, 2}.to_vector() == iv({1, 0, 2}));
}

TEST_CASE("Rees cones") {
  const ReesConeModel k2 = rees_cone(cover_ideal_of(complete(2)));
  CHECK(as_set(k2.facets()) ==
        std::set<IntVector, LexLess>{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({1, 1, -1})});
  CHECK(k2.a_prime.size() == 4);

  const ReesConeModel edge = rees_cone({indicator(2, {1, 2})});
  CHECK(as_set(edge.a_prime) ==
        std::set<IntVector, LexLess>{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})});

  // Five coordinate facets, a6 >= 0, five edge inequalities and the odd-hole facet.
  const ReesConeModel c5 = rees_cone(cover_ideal_of(cycle(5)));
  CHECK(c5.facets().size() == 12);
  CHECK(as_set(c5.facets()).count(iv({1, 1, 1, 1, 1, -3})) == 1);
  for (const auto& g : c5.a_prime)
    for (const auto& f : c5.facets()) CHECK(dot(f, g) >= 0);

  CHECK_THROWS_AS(rees_cone({}), InputError);
}

TEST_CASE("normality certificates") {
  const NormalityResult c5 = rees_normality(cover_ideal_of(cycle(5)));
  CHECK(c5.report.passed());
  check_certificates(c5);

  // Triangles of the line structure of K4: record the verdict, check the logic.
  const NormalityResult tri = rees_normality(
      {indicator(6, {1, 2, 3}), indicator(6, {1, 4, 5}), indicator(6, {2, 4, 6}), indicator(6, {3, 5, 6})});
  if (tri.report.passed()) {
    check_certificates(tri);
  } else {
    CHECK_FALSE(tri.report.witness.empty());
  }

  // A non-normal ideal: (x1^2, x2^2) misses x1x2 t.
  const NormalityResult squares = rees_normality({ExponentVector{{2, 0}}, ExponentVector{{0, 2}}});
  CHECK(squares.report.verdict == Verdict::False);
  CHECK(squares.report.witness.find("(1, 1, 1)") != std::string::npos);

  Limits tight;
  tight.hb_dim_cap = 4;
  CHECK_THROWS_AS(is_rees_normal(cover_ideal_of(cycle(5)), tight), CapExceeded);
}

TEST_CASE("normality is inherited by contraction minors") {
  // Paw graph: the equalized graph H and its contraction at the added vertex.
  const Graph paw = Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const Equalization eq = clique_equalization(paw);
  const Clutter cl(eq.graph.vertex_count(), maximal_cliques(eq.graph));
  REQUIRE(is_rees_normal(cover_ideal_of(eq.graph)).passed());
  const Minor m = contraction(cl, eq.added_vertices.front());
  REQUIRE(m.clutter);
  CHECK(is_rees_normal(cover_ideal(*m.clutter)).passed());
}

TEST_CASE("Simis cones") {
  const SimisConeModel k2 = simis_cone(edge_clutter(complete(2)));
  CHECK(k2.definition.size() == 3 + 2);
  CHECK(k2.redundant == std::vector<bool>{true, true, false, false, false});
  CHECK(as_set(simis_hilbert_basis(edge_clutter(complete(2))).elements) ==
        std::set<IntVector, LexLess>{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})});
  CHECK(as_set(simis_hilbert_basis(edge_clutter(complete(3))).elements) == clique_points(complete(3)));

  const auto c5 = as_set(simis_hilbert_basis(edge_clutter(cycle(5))).elements);
  const auto cliques = clique_points(cycle(5));
  CHECK(cliques.size() == 10);
  CHECK(c5.size() > cliques.size());
  for (const auto& w : cliques) CHECK(c5.count(w) == 1);
}

TEST_CASE("clique points always lie in the Simis Hilbert basis") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : blowup::testing::isomorphism_classes(n, false)) {
      const auto hb = as_set(simis_hilbert_basis(edge_clutter(g)).elements);
      const auto cliques = clique_points(g);
      for (const auto& w : cliques) CHECK(hb.count(w) == 1);
      CHECK((hb == cliques) == is_perfect_definitional(g).passed());
    }
  }
}

TEST_CASE("symbolic generators of perfect graphs") {
  auto sg = symbolic_generators_perfect(complete(2));
  REQUIRE(sg.generators.size() == 3);
  CHECK(render(sg.generators[2]) == "x1x2 t");

  sg = symbolic_generators_perfect(complete(3));
  CHECK(sg.generators.size() == 7);
  CHECK(render(sg.generators.back()) == "x1x2x3 t^2");

  sg = symbolic_generators_perfect(cycle(4));
  CHECK(sg.generators.size() == 8);
  std::set<IntVector, LexLess> vs;
  for (const auto& m : sg.generators) vs.insert(m.to_vector());
  CHECK(vs == as_set(simis_hilbert_basis(edge_clutter(cycle(4))).elements));

  CHECK_THROWS_AS(symbolic_generators_perfect(cycle(5)), PreconditionError);
  Limits small;
  small.chromatic_cap_n = 3;
  CHECK_THROWS_AS(symbolic_generators_perfect(cycle(4), small), CapExceeded);
  sg = symbolic_generators_perfect(cycle(4), small, true);
  CHECK(sg.generators.size() == 8);
  CHECK(sg.perfection.method == Method::TheoremPath);
}

TEST_CASE("Ehrhart ring equality") {
  CHECK(ehrhart_equality({indicator(3, {1, 2, 3})}).passed());
  CHECK(ehrhart_equality({indicator(4, {1, 3}), indicator(4, {2, 4})}).passed());
  // The triangle's edges: the lifted cone is simplicial with index 2 but its
  // parallelepiped holds no lattice point besides 0.
  CHECK(ehrhart_equality({indicator(3, {1, 2}), indicator(3, {2, 3}), indicator(3, {1, 3})}).passed());

  // x1^2 and x2^2: the midpoint x1x2 lies in P but (1, 1, 1) is no sum of lifted generators.
  const CheckReport sq = ehrhart_equality({ExponentVector{{2, 0}}, ExponentVector{{0, 2}}});
  CHECK(sq.verdict == Verdict::False);
  CHECK(sq.witness.find("(1, 1) lies in 1P") != std::string::npos);

  // Every positive x0 would need x2 = 0 here.
  CHECK_THROWS_AS(ehrhart_equality({ExponentVector{{1, 1, 0}}, ExponentVector{{0, 0, 1}},
                                    ExponentVector{{1, 0, 0}}}),
                  PreconditionError);
  CHECK_THROWS_AS(ehrhart_equality({ExponentVector{{1, 0}}, ExponentVector{{2, 0}}}), PreconditionError);
}

TEST_CASE("Gorenstein check") {
  const CheckReport c4 = gorenstein_check(cycle(4));
  REQUIRE(c4.passed());
  CHECK(std::find(c4.certificate.begin(), c4.certificate.end(),
                  "canonical module generated by x1x2x3x4 t") != c4.certificate.end());
  bool has_scan = false;
  for (const auto& [k, v] : c4.bounds) has_scan = has_scan || k == "scan_bound_b";
  CHECK(has_scan);

  CHECK(gorenstein_check(complete(2)).passed());
  CHECK(gorenstein_check(path(3)).verdict == Verdict::NotApplicable);
  CHECK_THROWS_AS(gorenstein_check(Graph::from_edges(3, {{1, 2}})), PreconditionError);
}

TEST_CASE("dual of a balanced matrix") {
  const auto c4 = incidence_matrix(edge_clutter(cycle(4)));
  CHECK(dual_balanced_normal(c4).passed());
  const auto c5 = incidence_matrix(edge_clutter(cycle(5)));
  CHECK(dual_balanced_normal(c5).verdict == Verdict::NotApplicable);
  CHECK_THROWS_AS(dual_balanced_normal(matrix_from_rows({{1}, {1}})), PreconditionError);
}

TEST_CASE("decomposition rendering") {
  const std::vector<IntVector> gens{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})};
  const auto m = poly::semigroup_member(iv({2, 1, 1}), gens);
  CHECK(render_decomposition(iv({2, 1, 1}), m, gens) == "(2, 1, 1) = 1*(1, 0, 0) + 1*(1, 1, 1)");
}

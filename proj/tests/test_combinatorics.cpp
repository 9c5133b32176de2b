#include "doctest.h"

#include "blowup/combinatorics.hpp"
#include "blowup/errors.hpp"
#include "support/graph_corpus.hpp"

#include <functional>
#include <random>
#include <set>

using namespace blowup;
using namespace blowup::comb;
using blowup::testing::complete;
using blowup::testing::cycle;
using blowup::testing::isomorphism_classes;
using blowup::testing::path;

namespace {

Graph paw() { return Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

std::vector<VertexSet> subsets_of(int n) {
  std::vector<VertexSet> out;
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) out.push_back(from_mask(m));
  return out;
}

// Minimal transversals by scanning every vertex subset.
std::vector<VertexSet> brute_covers(const Clutter& c) {
  const int n = c.vertex_count();
  std::vector<VertexMask> hits;
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    bool ok = true;
    for (const auto& e : c.edges()) ok = ok && (to_mask(e) & m) != 0;
    if (ok) hits.push_back(m);
  }
  std::vector<VertexSet> out;
  for (VertexMask m : hits) {
    bool minimal = true;
    for (VertexMask s : hits) minimal = minimal && !(s != m && (s & m) == s);
    if (minimal) out.push_back(from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> brute_cliques(const Graph& g, bool maximal_only) {
  const int n = g.vertex_count();
  auto is_clique = [&](VertexMask m) {
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if ((m >> (u - 1) & 1) && (m >> (v - 1) & 1) && !g.adjacent(u, v)) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
    if (!is_clique(m)) continue;
    bool maximal = true;
    for (int v = 1; v <= n && maximal_only && maximal; ++v)
      if (!(m >> (v - 1) & 1)) maximal = !is_clique(m | VertexMask{1} << (v - 1));
    if (maximal) out.push_back(from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every non-empty antichain of non-empty subsets of {1..n}.
void each_clutter(int n, const std::function<void(const Clutter&)>& f) {
  const auto all = subsets_of(n);
  std::vector<VertexSet> chosen;
  std::vector<VertexMask> masks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == all.size()) {
      if (!chosen.empty()) f(Clutter(n, chosen));
      return;
    }
    rec(i + 1);
    const VertexMask m = to_mask(all[i]);
    for (VertexMask o : masks)
      if ((o & m) == o || (o & m) == m) return;
    chosen.push_back(all[i]);
    masks.push_back(m);
    rec(i + 1);
    chosen.pop_back();
    masks.pop_back();
  };
  rec(0);
}

}  // namespace

TEST_CASE("edge clutters and complements") {
  CHECK(edge_clutter(complete(2)).edges() == std::vector<VertexSet>{{1, 2}});
  CHECK(edge_clutter(cycle(5)).edges() ==
        std::vector<VertexSet>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(edge_clutter(complete(3)).edges() == std::vector<VertexSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(edge_clutter(Graph(3)), PreconditionError);

  CHECK(complement(complete(3)).edge_count() == 0);
  const Graph c5c = complement(cycle(5));
  CHECK(c5c == Graph::from_edges(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : isomorphism_classes(n)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("graph construction rejects loops and merges repeated edges") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 3}}), InputError);
  CHECK(Graph::from_edges(2, {{1, 2}, {2, 1}}).edge_count() == 1);
}

TEST_CASE("clutter modes") {
  CHECK_THROWS_AS(Clutter(3, {{1, 2}, {1, 2, 3}}), InputError);
  CHECK_THROWS_AS(Clutter(3, {{}}), InputError);
  CHECK_THROWS_AS(Clutter(3, {{4}}), InputError);
  const Clutter m(3, {{1, 2}, {1, 2, 3}, {3}}, ClutterMode::Minimalize);
  CHECK(m.edges() == std::vector<VertexSet>{{1, 2}, {3}});
}

TEST_CASE("cliques") {
  CHECK(maximal_cliques(complete(3)) == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(maximal_cliques(cycle(5)) == edge_clutter(cycle(5)).edges());
  CHECK(maximal_cliques(path(3)) == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK(all_cliques(complete(2)) == std::vector<VertexSet>{{1}, {1, 2}, {2}});
  CHECK(all_cliques(complete(3)).size() == 7);
  CHECK(all_cliques(cycle(5)).size() == 10);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      CHECK(maximal_cliques(g) == brute_cliques(g, true));
      CHECK(all_cliques(g) == brute_cliques(g, false));
    }
  }
}

TEST_CASE("vertex covers and blockers") {
  CHECK(minimal_vertex_covers(edge_clutter(cycle(5))) ==
        std::vector<VertexSet>{{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  CHECK(minimal_vertex_covers(edge_clutter(complete(2))) == std::vector<VertexSet>{{1}, {2}});
  CHECK(minimal_vertex_covers(edge_clutter(cycle(4))) == std::vector<VertexSet>{{1, 3}, {2, 4}});
  CHECK(blocker(edge_clutter(complete(2))).edges() == std::vector<VertexSet>{{1}, {2}});

  int count = 0;
  for (int n = 1; n <= 5; ++n) {
    each_clutter(n, [&](const Clutter& c) {
      ++count;
      REQUIRE(minimal_vertex_covers(c) == brute_covers(c));
      REQUIRE(blocker(blocker(c)) == c);
    });
  }
  // Non-empty antichains of non-empty subsets: 1 + 4 + 18 + 166 + 7579.
  CHECK(count == 1 + 4 + 18 + 166 + 7579);

  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const int n = 6 + k % 2;
    std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
    std::uniform_int_distribution<int> size(1, 6);
    std::vector<VertexSet> es;
    for (int i = size(rng); i > 0; --i) es.push_back(from_mask(pick(rng)));
    const Clutter c(n, es, ClutterMode::Minimalize);
    REQUIRE(minimal_vertex_covers(c) == brute_covers(c));
    REQUIRE(blocker(blocker(c)) == c);
  }
}

TEST_CASE("independent sets are complements of minimal covers") {
  CHECK(maximal_independent_sets(cycle(4)) == std::vector<VertexSet>{{1, 3}, {2, 4}});
  CHECK(maximal_independent_sets(complete(3)) == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK(maximal_independent_sets(cycle(5)).size() == 5);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      if (g.edge_count() == 0) continue;
      const VertexMask full = (VertexMask{1} << n) - 1;
      std::set<VertexMask> covers;
      for (const auto& c : minimal_vertex_covers(edge_clutter(g))) covers.insert(to_mask(c));
      std::set<VertexMask> from_independent;
      for (const auto& s : maximal_independent_sets(g)) from_independent.insert(full & ~to_mask(s));
      CHECK(covers == from_independent);
    }
  }
}

TEST_CASE("cover ideals") {
  using EV = std::vector<ExponentVector>;
  CHECK(cover_ideal(edge_clutter(complete(2))) == EV{{{0, 1}}, {{1, 0}}});
  CHECK(cover_ideal(edge_clutter(cycle(4))) == EV{{{0, 1, 0, 1}}, {{1, 0, 1, 0}}});
  const auto c5 = cover_ideal(edge_clutter(cycle(5)));
  CHECK(c5.size() == 5);
  for (const auto& v : c5) CHECK(v.support().size() == 3);

  CHECK_THROWS_AS(cover_ideal_of_complement(complete(3)), PreconditionError);
  CHECK(cover_ideal_of_complement(path(3)) == EV{{{0, 0, 1}}, {{1, 0, 0}}});
  CHECK(cover_ideal_of_complement(cycle(4)).size() == 4);

  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      const Graph gc = complement(g);
      if (gc.edge_count() == 0) continue;
      CHECK(cover_ideal_of_complement(g) == cover_ideal(edge_clutter(gc)));
    }
  }
}

TEST_CASE("dual ideals") {
  using EV = std::vector<ExponentVector>;
  const auto edges = cover_ideal(blocker(edge_clutter(cycle(4))));
  const EV dual = dual_ideal(edges);
  EV expected{{{0, 0, 1, 1}}, {{1, 0, 0, 1}}, {{1, 1, 0, 0}}, {{0, 1, 1, 0}}};
  std::sort(expected.begin(), expected.end());
  EV sorted = dual;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == expected);
  CHECK(dual_ideal(dual) == edges);
  CHECK_THROWS_AS(dual_ideal({indicator(3, {1, 2, 3})}), PreconditionError);
}

TEST_CASE("minors") {
  const Clutter c(3, {{1, 2}, {2, 3}});
  const Minor con = contraction(c, 2);
  REQUIRE(con.clutter);
  CHECK(con.clutter->edges() == std::vector<VertexSet>{{1}, {2}});
  CHECK(con.index_map == std::vector<int>{1, 0, 2});
  const Minor del = deletion(c, 2);
  CHECK(del.degenerate);
  CHECK(contraction(Clutter(2, {{1}, {2}}), 1).degenerate);
}

TEST_CASE("clique equalization") {
  CHECK(clique_equalization(cycle(4)).added_vertices.empty());
  CHECK(clique_equalization(path(3)).added_vertices.empty());

  const Equalization e = clique_equalization(paw());
  REQUIRE(e.added_vertices == std::vector<int>{5});
  CHECK(maximal_cliques(e.graph) == std::vector<VertexSet>{{1, 2, 3}, {3, 4, 5}});

  // Contracting every added vertex of the clique clutter recovers the clique clutter of G.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n, false)) {
      const Equalization eq = clique_equalization(g);
      Clutter cl(eq.graph.vertex_count(), maximal_cliques(eq.graph));
      for (auto it = eq.added_vertices.rbegin(); it != eq.added_vertices.rend(); ++it) {
        const Minor m = contraction(cl, *it);
        REQUIRE(m.clutter);
        cl = *m.clutter;
      }
      CHECK(cl == Clutter(n, maximal_cliques(g)));
    }
  }
}

TEST_CASE("unmixed clutters") {
  CHECK(is_unmixed(edge_clutter(cycle(4))));
  CHECK_FALSE(is_unmixed(edge_clutter(path(3))));
  for (int n = 2; n <= 6; ++n) CHECK(is_unmixed(edge_clutter(complete(n))));
}

TEST_CASE("chromatic number, clique number and perfection") {
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(clique_number(cycle(5)) == 2);
  const CheckReport c5 = is_perfect_definitional(cycle(5));
  CHECK(c5.verdict == Verdict::False);
  CHECK(c5.witness.find("{1,2,3,4,5}") != std::string::npos);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(is_perfect_definitional(complete(4)).passed());
  CHECK(is_perfect_definitional(cycle(4)).passed());

  Limits small;
  small.chromatic_cap_n = 4;
  CHECK_THROWS_AS(is_perfect_definitional(cycle(5), small), CapExceeded);

  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      CHECK(chromatic_number(g) >= clique_number(g));
      bool all_equal = true;
      for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        const Graph h = g.induced(from_mask(m));
        all_equal = all_equal && chromatic_number(h) == clique_number(h);
      }
      const bool perfect = is_perfect_definitional(g).passed();
      CHECK(perfect == all_equal);
      CHECK(perfect == is_perfect_definitional(complement(g)).passed());
    }
  }
}

TEST_CASE("incidence matrices") {
  const IncidenceMatrix k2 = incidence_matrix(edge_clutter(complete(2)));
  CHECK(k2.rows == 2);
  CHECK(k2.columns == std::vector<std::vector<int>>{{1, 1}});
  CHECK(vertex_clique_matrix(complete(3)).columns == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(vertex_clique_matrix(path(3)).columns ==
        std::vector<std::vector<int>>{{1, 1, 0}, {0, 1, 1}});
  CHECK(matrix_from_rows({{1, 0}, {1, 1}}).columns == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
  CHECK(to_string(VertexSet{1, 2, 4}) == "{1,2,4}");
}

TEST_CASE("corpus sizes") {
  // Isomorphism classes on 1..6 vertices: 1, 2, 4, 11, 34, 156.
  CHECK(isomorphism_classes(4).size() == 11);
  CHECK(isomorphism_classes(5).size() == 34);
  CHECK(isomorphism_classes(6).size() == 156);
  int connected = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : isomorphism_classes(n)) connected += blowup::testing::is_connected(g);
  CHECK(connected == 1 + 1 + 2 + 6 + 21);
  CHECK(blowup::testing::perfection_corpus().size() == 33 + 100);
}

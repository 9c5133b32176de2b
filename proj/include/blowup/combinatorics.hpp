#pragma once

// Graphs, clutters and the square-free monomial data built from them.
//
// Vertices are 1-based. Every vertex subset handed out by this module is sorted
// ascending and every list of subsets is sorted lexicographically, so results
// can be compared with `==` and diffed textually.

#include "blowup/arith.hpp"
#include "blowup/limits.hpp"
#include "blowup/report.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace blowup::comb {

using VertexSet = std::vector<int>;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

VertexMask to_mask(const VertexSet& s);
VertexSet from_mask(VertexMask m);

class Graph {
 public:
  explicit Graph(int n = 0);
  // Throws InputError on loops or out-of-range endpoints. Repeated edges are merged.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const;
  VertexMask neighbours(int v) const { return adj_[v - 1]; }
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  std::size_t edge_count() const;
  VertexSet isolated_vertices() const;
  // Induced subgraph on `s`, vertices renumbered 1..|s| in ascending order.
  Graph induced(const VertexSet& s) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexMask> adj_;
};

enum class ClutterMode {
  Strict,      // comparable or repeated edges are rejected
  Minimalize,  // supersets are dropped
};

class Clutter {
 public:
  Clutter() = default;
  // Throws InputError on empty edges, out-of-range vertices and, in strict mode,
  // comparable edges.
  Clutter(int n, std::vector<VertexSet> edges, ClutterMode mode = ClutterMode::Strict);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  bool operator==(const Clutter&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Exponent vector a of the monomial x^a.
struct ExponentVector {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  bool square_free() const;
  VertexSet support() const;
  IntVector to_int() const;
  auto operator<=>(const ExponentVector&) const = default;
};

ExponentVector indicator(int n, const VertexSet& s);

/// Column-oriented integer matrix; column j is the incidence vector of edge j
/// when derived from a clutter.
struct IncidenceMatrix {
  int rows = 0;
  std::vector<std::vector<int>> columns;

  int cols() const { return static_cast<int>(columns.size()); }
  int at(int r, int c) const { return columns[c][r]; }
  bool is_zero_one() const;
  bool operator==(const IncidenceMatrix&) const = default;
};

IncidenceMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows);

Clutter edge_clutter(const Graph& g);
Graph complement(const Graph& g);
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<VertexSet> all_cliques(const Graph& g);  // non-empty cliques only
std::vector<VertexSet> minimal_vertex_covers(const Clutter& c);
Clutter blocker(const Clutter& c);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::vector<ExponentVector> cover_ideal(const Clutter& c);
// Generators x^a with X \ supp(a) a maximal clique of G; equals the cover ideal
// of the complement. Throws PreconditionError when G is complete.
std::vector<ExponentVector> cover_ideal_of_complement(const Graph& g);
std::vector<ExponentVector> dual_ideal(const std::vector<ExponentVector>& gens);
bool is_unmixed(const Clutter& c);

struct Minor {
  std::optional<Clutter> clutter;  // empty when degenerate
  bool degenerate = false;
  std::string diagnostic;
  // index_map[old - 1] = new index, or 0 for the removed vertex.
  std::vector<int> index_map;
};

Minor contraction(const Clutter& c, int v);
Minor deletion(const Clutter& c, int v);

struct Equalization {
  Graph graph;
  std::vector<int> added_vertices;  // z_1, ..., z_s in insertion order
};

// Repeatedly attaches a new vertex to a smallest maximal clique until all
// maximal cliques have the same size.
Equalization clique_equalization(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g, const Limits& limits = {});
CheckReport is_perfect_definitional(const Graph& g, const Limits& limits = {});

IncidenceMatrix incidence_matrix(const Clutter& c);
IncidenceMatrix vertex_clique_matrix(const Graph& g);

std::string to_string(const VertexSet& s);  // "{1,2,4}"

}  // namespace blowup::comb

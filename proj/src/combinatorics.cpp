#include "blowup/combinatorics.hpp"

#include "blowup/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

namespace blowup::comb {

namespace {

VertexMask bit(int v) { return VertexMask{1} << (v - 1); }

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

std::vector<VertexSet> masks_to_sets(const std::vector<VertexMask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (VertexMask m : masks) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

// Keeps the inclusion-minimal masks.
std::vector<VertexMask> minimal_masks(std::vector<VertexMask> ms) {
  std::sort(ms.begin(), ms.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<VertexMask> kept;
  for (VertexMask m : ms) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [m](VertexMask k) { return (k & m) == k; });
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

void bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
                   std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot maximizing |P ∩ N(u)|; ties go to the lowest index.
  int pivot = 0;
  int best = -1;
  for (VertexMask ux = p | x; ux; ux &= ux - 1) {
    const int u = std::countr_zero(ux) + 1;
    const int c = std::popcount(p & g.neighbours(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (VertexMask cand = p & ~g.neighbours(pivot); cand; cand &= cand - 1) {
    const int v = std::countr_zero(cand) + 1;
    bron_kerbosch(g, r | bit(v), p & g.neighbours(v), x & g.neighbours(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

bool colourable(const Graph& g, const std::vector<int>& order, std::vector<int>& colour,
                std::size_t idx, int k) {
  if (idx == order.size()) return true;
  const int v = order[idx];
  int used_max = 0;
  for (std::size_t j = 0; j < idx; ++j) used_max = std::max(used_max, colour[order[j]]);
  // Symmetry breaking: never open more than one new colour.
  const int limit = std::min(k, used_max + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (VertexMask nb = g.neighbours(v); nb; nb &= nb - 1) {
      if (colour[std::countr_zero(nb) + 1] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colour[v] = c;
    if (colourable(g, order, colour, idx + 1, k)) return true;
    colour[v] = 0;
  }
  return false;
}

// Vertex subsets of {1..n}, ordered by size and then lexicographically.
std::vector<VertexSet> subsets_by_size(int n) {
  std::vector<VertexSet> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i + 1) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

VertexMask to_mask(const VertexSet& s) {
  VertexMask m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

VertexSet from_mask(VertexMask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m) + 1);
  return s;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) {
  check_vertex_count(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.adj_[u - 1] |= bit(v);
    g.adj_[v - 1] |= bit(u);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const { return (adj_[u - 1] & bit(v)) != 0; }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out;
  for (int v = 1; v <= n_; ++v) {
    if (adj_[v - 1] == 0) out.push_back(v);
  }
  return out;
}

Graph Graph::induced(const VertexSet& s) const {
  const int k = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (adjacent(s[i], s[j])) es.emplace_back(i + 1, j + 1);
    }
  }
  return from_edges(k, es);
}

// ---------------------------------------------------------------------------
// Clutter

Clutter::Clutter(int n, std::vector<VertexSet> edges, ClutterMode mode) : n_(n) {
  check_vertex_count(n);
  std::vector<VertexMask> masks;
  masks.reserve(edges.size());
  for (auto& e : edges) {
    if (e.empty()) throw InputError("clutter edge is empty");
    for (int v : e) {
      if (v < 1 || v > n) {
        throw InputError("clutter vertex " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
      }
    }
    masks.push_back(to_mask(e));
  }
  if (mode == ClutterMode::Strict) {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if (i != j && (masks[i] & masks[j]) == masks[i]) {
          throw InputError("clutter edges " + to_string(from_mask(masks[i])) + " and " +
                           to_string(from_mask(masks[j])) + " are comparable");
        }
      }
    }
  } else {
    masks = minimal_masks(std::move(masks));
  }
  edges_ = masks_to_sets(masks);
}

// ---------------------------------------------------------------------------
// Exponent vectors and matrices

bool ExponentVector::square_free() const {
  return std::all_of(entries.begin(), entries.end(), [](int a) { return a == 0 || a == 1; });
}

VertexSet ExponentVector::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] > 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

IntVector ExponentVector::to_int() const {
  IntVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
  return v;
}

ExponentVector indicator(int n, const VertexSet& s) {
  ExponentVector a{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int v : s) a.entries[v - 1] = 1;
  return a;
}

bool IncidenceMatrix::is_zero_one() const {
  for (const auto& col : columns) {
    for (int x : col) {
      if (x != 0 && x != 1) return false;
    }
  }
  return true;
}

IncidenceMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  IncidenceMatrix m;
  m.rows = static_cast<int>(rows.size());
  const std::size_t q = rows.empty() ? 0 : rows.front().size();
  m.columns.assign(q, std::vector<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != q) throw InputError("matrix rows have different lengths");
    for (std::size_t c = 0; c < q; ++c) m.columns[c][r] = rows[r][c];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Operations

Clutter edge_clutter(const Graph& g) {
  std::vector<VertexSet> es;
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  if (es.empty()) throw PreconditionError("graph has no edges");
  return Clutter(g.vertex_count(), std::move(es));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  const int n = g.vertex_count();
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, es);
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexMask> out;
  if (g.vertex_count() > 0) bron_kerbosch(g, 0, full_mask(g.vertex_count()), 0, out);
  return masks_to_sets(out);
}

std::vector<VertexSet> all_cliques(const Graph& g) {
  std::vector<VertexMask> out;
  const int n = g.vertex_count();
  std::function<void(VertexMask, VertexMask)> extend = [&](VertexMask clique, VertexMask cand) {
    for (VertexMask c = cand; c; c &= c - 1) {
      const int v = std::countr_zero(c) + 1;
      const VertexMask next = clique | bit(v);
      out.push_back(next);
      // Only higher-indexed common neighbours, so each clique is produced once.
      const VertexMask higher = full_mask(n) & ~((bit(v) << 1) - 1);
      extend(next, cand & g.neighbours(v) & higher);
    }
  };
  if (n > 0) extend(0, full_mask(n));
  return masks_to_sets(out);
}

std::vector<VertexSet> minimal_vertex_covers(const Clutter& c) {
  if (c.empty()) throw PreconditionError("minimal vertex covers of an empty clutter");
  std::vector<VertexMask> transversals{0};
  for (const auto& e : c.edges()) {
    const VertexMask em = to_mask(e);
    std::vector<VertexMask> next;
    for (VertexMask t : transversals) {
      if (t & em) {
        next.push_back(t);
      } else {
        for (VertexMask r = em; r; r &= r - 1) next.push_back(t | (r & (~r + 1)));
      }
    }
    transversals = minimal_masks(std::move(next));
  }
  return masks_to_sets(transversals);
}

Clutter blocker(const Clutter& c) { return Clutter(c.vertex_count(), minimal_vertex_covers(c)); }

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    VertexSet all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return {all};
  }
  std::vector<VertexMask> out;
  for (const auto& cover : minimal_vertex_covers(edge_clutter(g))) {
    out.push_back(full_mask(n) & ~to_mask(cover));
  }
  return masks_to_sets(out);
}

std::vector<ExponentVector> cover_ideal(const Clutter& c) {
  std::vector<ExponentVector> out;
  for (const auto& cover : minimal_vertex_covers(c)) out.push_back(indicator(c.vertex_count(), cover));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentVector> cover_ideal_of_complement(const Graph& g) {
  const int n = g.vertex_count();
  if (2 * g.edge_count() == static_cast<std::size_t>(n) * (n - 1)) {
    throw PreconditionError("the complement graph has no edges");
  }
  std::vector<ExponentVector> out;
  for (const auto& k : maximal_cliques(g)) {
    out.push_back(indicator(n, from_mask(full_mask(n) & ~to_mask(k))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentVector> dual_ideal(const std::vector<ExponentVector>& gens) {
  std::vector<ExponentVector> out;
  out.reserve(gens.size());
  for (const auto& v : gens) {
    if (!v.square_free()) throw PreconditionError("dual ideal needs square-free generators");
    ExponentVector w{std::vector<int>(v.size())};
    bool zero = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      w.entries[i] = 1 - v.entries[i];
      zero = zero && w.entries[i] == 0;
    }
    if (zero) {
      throw PreconditionError("generator with full support has a zero dual exponent");
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_unmixed(const Clutter& c) {
  const auto covers = minimal_vertex_covers(c);
  return std::all_of(covers.begin(), covers.end(),
                     [&](const VertexSet& s) { return s.size() == covers.front().size(); });
}

namespace {

std::vector<int> removal_map(int n, int v) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u) map[u - 1] = u < v ? u : (u == v ? 0 : u - 1);
  return map;
}

void check_minor_vertex(const Clutter& c, int v) {
  if (v < 1 || v > c.vertex_count()) {
    throw InputError("minor vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(c.vertex_count()));
  }
}

}  // namespace

Minor contraction(const Clutter& c, int v) {
  check_minor_vertex(c, v);
  Minor m;
  m.index_map = removal_map(c.vertex_count(), v);
  std::vector<VertexSet> es;
  for (const auto& e : c.edges()) {
    VertexSet s;
    for (int u : e) {
      if (u != v) s.push_back(m.index_map[u - 1]);
    }
    if (s.empty()) {
      m.degenerate = true;
      m.diagnostic = "contracting vertex " + std::to_string(v) + " empties edge " + to_string(e);
      return m;
    }
    es.push_back(std::move(s));
  }
  m.clutter = Clutter(c.vertex_count() - 1, std::move(es), ClutterMode::Minimalize);
  return m;
}

Minor deletion(const Clutter& c, int v) {
  check_minor_vertex(c, v);
  Minor m;
  m.index_map = removal_map(c.vertex_count(), v);
  std::vector<VertexSet> es;
  for (const auto& e : c.edges()) {
    if (std::find(e.begin(), e.end(), v) != e.end()) continue;
    VertexSet s;
    for (int u : e) s.push_back(m.index_map[u - 1]);
    es.push_back(std::move(s));
  }
  m.clutter = Clutter(c.vertex_count() - 1, std::move(es));
  if (m.clutter->empty()) {
    m.degenerate = true;
    m.diagnostic = "deleting vertex " + std::to_string(v) + " removes every edge";
  }
  return m;
}

Equalization clique_equalization(const Graph& g) {
  Equalization result{g, {}};
  auto cliques = maximal_cliques(g);
  if (cliques.empty()) return result;
  auto size_range = [](const std::vector<VertexSet>& cs) {
    std::size_t lo = cs.front().size(), hi = lo;
    for (const auto& c : cs) {
      lo = std::min(lo, c.size());
      hi = std::max(hi, c.size());
    }
    return std::pair{lo, hi};
  };
  auto [lo0, hi0] = size_range(cliques);
  const std::size_t cap = static_cast<std::size_t>(g.vertex_count()) * (hi0 - lo0) + 1;

  for (std::size_t step = 0;; ++step) {
    auto [lo, hi] = size_range(cliques);
    if (lo == hi) return result;
    if (step >= cap) throw std::logic_error("clique equalization exceeded its iteration cap");
    // First smallest maximal clique in canonical order.
    const VertexSet target = *std::find_if(cliques.begin(), cliques.end(),
                                           [lo = lo](const VertexSet& c) { return c.size() == lo; });
    const Graph& h = result.graph;
    const int z = h.vertex_count() + 1;
    auto es = h.edges();
    for (int u : target) es.emplace_back(u, z);
    result.graph = Graph::from_edges(z, es);
    result.added_vertices.push_back(z);

    auto next = maximal_cliques(result.graph);
    std::vector<VertexSet> expected;
    for (const auto& c : cliques) {
      if (c != target) expected.push_back(c);
    }
    VertexSet grown = target;
    grown.push_back(z);
    expected.push_back(grown);
    std::sort(expected.begin(), expected.end());
    if (next != expected) {
      throw std::logic_error("clique clutter did not change by a single enlarged clique");
    }
    cliques = std::move(next);
  }
}

int clique_number(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return static_cast<int>(best);
}

int chromatic_number(const Graph& g, const Limits& limits) {
  const int n = g.vertex_count();
  if (n > limits.chromatic_cap_n) {
    throw CapExceeded("chromatic number search needs n <= " +
                      std::to_string(limits.chromatic_cap_n) + ", got " + std::to_string(n));
  }
  if (n == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(g.neighbours(a)) > std::popcount(g.neighbours(b));
  });
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::vector<int> colour(static_cast<std::size_t>(n) + 1, 0);
    if (colourable(g, order, colour, 0, k)) return k;
  }
}

CheckReport is_perfect_definitional(const Graph& g, const Limits& limits) {
  CheckReport r;
  r.check = "perfect_definitional";
  r.method = Method::Oracle;
  const int n = g.vertex_count();
  if (n > limits.chromatic_cap_n) {
    throw CapExceeded("perfection oracle needs n <= " + std::to_string(limits.chromatic_cap_n) +
                      ", got " + std::to_string(n));
  }
  r.add_bound("oracle_cap_n", std::to_string(limits.chromatic_cap_n));
  std::size_t scanned = 0;
  for (const auto& s : subsets_by_size(n)) {
    ++scanned;
    const Graph h = g.induced(s);
    const int chi = chromatic_number(h, limits);
    const int omega = clique_number(h);
    if (chi != omega) {
      r.verdict = Verdict::False;
      r.witness = to_string(s) + " induces a subgraph with chromatic number " +
                  std::to_string(chi) + " and clique number " + std::to_string(omega);
      r.add_bound("induced_subgraphs_scanned", std::to_string(scanned));
      return r;
    }
  }
  r.verdict = Verdict::True;
  r.add_bound("induced_subgraphs_scanned", std::to_string(scanned));
  r.certificate.push_back("chromatic number equals clique number on all " +
                          std::to_string(scanned) + " non-empty induced subgraphs");
  return r;
}

IncidenceMatrix incidence_matrix(const Clutter& c) {
  IncidenceMatrix m;
  m.rows = c.vertex_count();
  for (const auto& e : c.edges()) m.columns.push_back(indicator(c.vertex_count(), e).entries);
  return m;
}

IncidenceMatrix vertex_clique_matrix(const Graph& g) {
  IncidenceMatrix m;
  m.rows = g.vertex_count();
  for (const auto& k : maximal_cliques(g)) m.columns.push_back(indicator(g.vertex_count(), k).entries);
  return m;
}

}  // namespace blowup::comb

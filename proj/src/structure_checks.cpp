#include "blowup/structure_checks.hpp"

#include "blowup/blowup_algebras.hpp"
#include "blowup/errors.hpp"
#include "blowup/lp.hpp"
#include "blowup/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace blowup::checks {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

// Visits every chordless cycle (length >= 3) exactly once, as a vertex sequence
// starting at its smallest vertex with path[1] < path.back(). Stops early when
// the visitor returns true.
bool each_chordless_cycle(const std::vector<Mask>& adj,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> path;
  std::function<bool(Mask, Mask)> extend = [&](Mask on_path, Mask allowed) -> bool {
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    const Mask inner = on_path & ~bit(last) & ~bit(s);
    Mask cand = adj[last] & allowed & ~on_path;
    while (cand) {
      const auto v = static_cast<std::size_t>(std::countr_zero(cand));
      cand &= cand - 1;
      if (adj[v] & inner) continue;
      if (path.size() >= 2 && (adj[v] & bit(s))) {
        if (path[1] < v) {
          path.push_back(v);
          const bool stop = visit(path);
          path.pop_back();
          if (stop) return true;
        }
        continue;
      }
      path.push_back(v);
      if (extend(on_path | bit(v), allowed)) return true;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    Mask allowed = 0;
    for (std::size_t v = s + 1; v < n; ++v) allowed |= bit(v);
    path.assign(1, s);
    if (extend(bit(s), allowed)) return true;
  }
  return false;
}

std::string row_col_witness(const std::vector<int>& rows, const std::vector<int>& cols) {
  return "rows " + comb::to_string(rows) + ", columns " + comb::to_string(cols);
}

void require_zero_one(const comb::IncidenceMatrix& a) {
  if (!a.is_zero_one()) throw InputError("balancedness needs a matrix with entries in {0, 1}");
  if (a.rows + a.cols() > comb::kMaxVertices) {
    throw InputError("matrix has more than " + std::to_string(comb::kMaxVertices) +
                     " rows and columns in total");
  }
}

IntVector column_vector(const comb::IncidenceMatrix& a, int c) {
  IntVector v(static_cast<std::size_t>(a.rows));
  for (int r = 0; r < a.rows; ++r) v[static_cast<std::size_t>(r)] = a.at(r, c);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Perfection

std::vector<IntVector> clique_inequalities(const comb::Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<IntVector> out;
  out.push_back(unit_vector(n + 1, n));  // empty clique: a_{n+1} >= 0
  for (const auto& k : comb::all_cliques(g)) {
    IntVector v = comb::indicator(g.vertex_count(), k).to_int();
    v.push_back(-(static_cast<long long>(k.size()) - 1));
    out.push_back(make_primitive(std::move(v)));
  }
  sort_unique(out);
  return out;
}

CheckReport perfect_via_rees_cone(const comb::Graph& g, const Limits& limits) {
  const int n = g.vertex_count();
  if (!g.isolated_vertices().empty()) {
    throw PreconditionError("graph has isolated vertices " + comb::to_string(g.isolated_vertices()));
  }
  if (n + 1 > limits.hb_dim_cap) {
    throw CapExceeded("Rees cone dimension " + std::to_string(n + 1) + " exceeds the cap " +
                      std::to_string(limits.hb_dim_cap));
  }
  CheckReport rep;
  rep.check = "perfect_via_rees_cone";
  rep.method = Method::TheoremPath;
  rep.add_bound("cone_dim", std::to_string(n + 1));

  const auto model = alg::rees_cone(comb::cover_ideal(comb::edge_clutter(g)));
  const auto& facets = model.facets();
  const auto cliques = clique_inequalities(g);
  rep.add_bound("facets", std::to_string(facets.size()));
  rep.add_bound("clique_inequalities", std::to_string(cliques.size()));

  for (const auto& f : facets) {
    if (!std::binary_search(cliques.begin(), cliques.end(), f, LexLess{})) {
      rep.verdict = Verdict::False;
      rep.witness = "facet " + poly::render_inequality(f) + " is not a clique inequality";
      return rep;
    }
  }
  for (const auto& c : cliques) {
    if (!std::binary_search(facets.begin(), facets.end(), c, LexLess{})) {
      rep.verdict = Verdict::False;
      rep.witness = "clique inequality " + poly::render_inequality(c) + " is not a facet";
      return rep;
    }
  }
  rep.verdict = Verdict::True;
  for (const auto& f : facets) rep.certificate.push_back(poly::render_inequality(f));
  return rep;
}

CheckReport perfect_matrix_check(const comb::IncidenceMatrix& a) {
  auto rep = poly::is_integral(poly::HRepPolyhedron::packing(a));
  rep.check = "perfect_matrix";
  if (rep.verdict == Verdict::False) rep.witness = "fractional vertex " + rep.witness;
  return rep;
}

// ---------------------------------------------------------------------------
// TDI

CheckReport tdi_check(const comb::IncidenceMatrix& a, const Limits& limits) {
  CheckReport rep;
  rep.check = "tdi";
  rep.method = Method::TheoremPath;
  bool integer_entries = false;
  for (const auto& col : a.columns) {
    for (int x : col) integer_entries |= x < 0;
  }
  if (integer_entries) rep.notes.push_back("negative entries: only (i) and (ii) imply TDI is claimed");
  const Verdict failed = integer_entries ? Verdict::Inconclusive : Verdict::False;

  const auto packing = poly::is_integral(poly::HRepPolyhedron::packing(a));
  if (packing.verdict != Verdict::True) {
    rep.verdict = failed;
    rep.witness = "(i) fails: fractional vertex " + packing.witness + " of {x >= 0, xA <= 1}";
    rep.notes.push_back("(ii) not evaluated");
    return rep;
  }
  rep.certificate.push_back("(i) {x >= 0, xA <= 1} has " + packing.bounds.front().second +
                            " vertices, all integral");

  const auto n = static_cast<std::size_t>(a.rows);
  std::vector<IntVector> b;
  for (int c = 0; c < a.cols(); ++c) {
    IntVector v = column_vector(a, c);
    v.push_back(1);
    b.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < n; ++j) b.push_back(scale(unit_vector(n + 1, j), -1));
  sort_unique(b);
  const auto cone = poly::IntegerCone::from_generators(n + 1, b);
  if (!cone.is_pointed()) throw std::logic_error("cone over B must be pointed");
  const auto hb = poly::hilbert_basis(cone, limits);
  rep.add_bound("hilbert_basis_size", std::to_string(hb.elements.size()));
  const poly::SemigroupOracle oracle(b);
  rep.add_bound("grading", to_string(oracle.grading()));
  std::size_t nodes = 0;
  for (const auto& h : hb.elements) {
    const auto m = oracle.decompose(h, limits.enumeration_budget);
    nodes += m.nodes;
    if (!m.member) {
      rep.verdict = failed;
      rep.witness = "(ii) fails: " + to_string(h) + " is in the Hilbert basis of R_+B but not in N B";
      rep.add_bound("membership_search_nodes", std::to_string(nodes));
      return rep;
    }
    rep.certificate.push_back(alg::render_decomposition(h, m, b));
  }
  rep.add_bound("membership_search_nodes", std::to_string(nodes));
  rep.verdict = Verdict::True;
  return rep;
}

CheckReport tdi_oracle(const comb::IncidenceMatrix& a, const Limits& limits) {
  const int n = a.rows;
  const int q = a.cols();
  int max_col = 0;
  for (const auto& col : a.columns) {
    int s = 0;
    for (int x : col) {
      if (x < 0) throw InputError("TDI oracle needs non-negative entries");
      s += x;
    }
    max_col = std::max(max_col, s);
  }
  if (n > limits.clutter_cap_n || q > limits.clutter_cap_n) {
    throw CapExceeded("TDI oracle needs at most " + std::to_string(limits.clutter_cap_n) +
                      " rows and columns");
  }
  const int lo = limits.alpha_box_low;
  const int hi = limits.alpha_box_high > 0 ? limits.alpha_box_high : max_col;
  CheckReport rep;
  rep.check = "tdi_oracle";
  rep.method = Method::Oracle;
  rep.add_bound("alpha_box", "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]^" +
                                 std::to_string(n));
  rep.add_bound("ilp_box", "y_j in [0, max(alpha_i, 0)]");

  // The covering problem only sees max(alpha, 0) since A >= 0 and y >= 0.
  std::map<std::vector<int>, std::pair<lp::LPResult, lp::ILPResult>> solved;
  std::size_t evaluated = 0, skipped = 0;
  std::vector<int> alpha(static_cast<std::size_t>(n), lo);
  while (true) {
    std::vector<int> key(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) key[i] = std::max(alpha[i], 0);
    auto it = solved.find(key);
    if (it == solved.end()) {
      lp::LinearProgram prog;
      prog.direction = lp::Direction::Minimize;
      prog.objective.assign(static_cast<std::size_t>(q), 1);
      for (int r = 0; r < n; ++r) {
        RationalVector row(static_cast<std::size_t>(q));
        for (int c = 0; c < q; ++c) row[static_cast<std::size_t>(c)] = a.at(r, c);
        prog.add_row(std::move(row), lp::Sense::GreaterEqual, key[static_cast<std::size_t>(r)]);
      }
      auto lp_res = lp::solve(prog);
      lp::ILPResult ilp;
      if (lp_res.status == lp::Status::Optimal) {
        const int top = *std::max_element(key.begin(), key.end());
        lp::IntegerBox box;
        box.ranges.assign(static_cast<std::size_t>(q), {0, top});
        ilp = lp::solve_ilp_bounded(prog, box, limits.enumeration_budget);
      }
      it = solved.emplace(key, std::make_pair(std::move(lp_res), std::move(ilp))).first;
    }
    const auto& [lp_res, ilp] = it->second;
    if (lp_res.status != lp::Status::Optimal) {
      ++skipped;
    } else {
      ++evaluated;
      if (!ilp.found || ilp.value != lp_res.value) {
        IntVector av;
        for (int x : alpha) av.push_back(x);
        rep.verdict = Verdict::False;
        rep.witness = "alpha = " + to_string(av) + ": LP minimum " + to_string(lp_res.value) +
                      ", integer minimum " + (ilp.found ? to_string(ilp.value) : "none in box");
        rep.add_bound("alphas_evaluated", std::to_string(evaluated));
        return rep;
      }
    }
    std::size_t i = 0;
    while (i < alpha.size() && alpha[i] == hi) alpha[i++] = lo;
    if (i == alpha.size()) break;
    ++alpha[i];
  }
  rep.add_bound("alphas_evaluated", std::to_string(evaluated));
  rep.add_bound("alphas_without_finite_minimum", std::to_string(skipped));
  rep.verdict = Verdict::True;
  rep.certificate.push_back("LP and integer minima agree for all " + std::to_string(evaluated) +
                            " objectives with a finite minimum");
  return rep;
}

// ---------------------------------------------------------------------------
// Balanced matrices

CheckReport balanced_oracle(const comb::IncidenceMatrix& a, const Limits& limits) {
  require_zero_one(a);
  const int m = a.rows;
  const int q = a.cols();
  if (q > limits.clutter_cap_n) {
    throw CapExceeded("submatrix scan needs at most " + std::to_string(limits.clutter_cap_n) +
                      " columns");
  }
  CheckReport rep;
  rep.check = "balanced_oracle";
  rep.method = Method::Oracle;
  rep.add_bound("max_order", std::to_string(std::min(m, q)));
  std::vector<Mask> row_mask(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < q; ++c) {
      if (a.at(r, c)) row_mask[static_cast<std::size_t>(r)] |= bit(static_cast<std::size_t>(c));
    }
  }
  std::size_t scanned = 0;
  for (int k = 3; k <= std::min(m, q); k += 2) {
    for (Mask cols = 0; cols < bit(static_cast<std::size_t>(q)); ++cols) {
      if (std::popcount(cols) != k) continue;
      std::vector<int> cand;
      for (int r = 0; r < m; ++r) {
        if (std::popcount(row_mask[static_cast<std::size_t>(r)] & cols) == 2) cand.push_back(r);
      }
      if (static_cast<int>(cand.size()) < k) continue;
      // Choose k candidate rows; every chosen column must then carry exactly two ones.
      std::vector<int> pick(static_cast<std::size_t>(k));
      std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
        if (depth == k) {
          ++scanned;
          for (Mask cm = cols; cm; cm &= cm - 1) {
            const auto c = static_cast<std::size_t>(std::countr_zero(cm));
            int ones = 0;
            for (int r : pick) ones += (row_mask[static_cast<std::size_t>(r)] >> c) & 1;
            if (ones != 2) return false;
          }
          return true;
        }
        for (int i = start; i < static_cast<int>(cand.size()); ++i) {
          pick[static_cast<std::size_t>(depth)] = cand[static_cast<std::size_t>(i)];
          if (choose(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (choose(0, 0)) {
        std::vector<int> rows, cs;
        for (int r : pick) rows.push_back(r + 1);
        for (Mask cm = cols; cm; cm &= cm - 1) cs.push_back(std::countr_zero(cm) + 1);
        rep.verdict = Verdict::False;
        rep.witness = "odd submatrix with two ones per row and column: " + row_col_witness(rows, cs);
        rep.add_bound("submatrices_scanned", std::to_string(scanned));
        return rep;
      }
    }
  }
  rep.verdict = Verdict::True;
  rep.add_bound("submatrices_scanned", std::to_string(scanned));
  return rep;
}

CheckReport balanced_check(const comb::IncidenceMatrix& a, const Limits& limits) {
  require_zero_one(a);
  const auto m = static_cast<std::size_t>(a.rows);
  const auto q = static_cast<std::size_t>(a.cols());
  CheckReport rep;
  rep.check = "balanced";
  rep.method = Method::TheoremPath;
  // Row r is vertex r, column c is vertex m + c.
  std::vector<Mask> adj(m + q, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      if (a.at(static_cast<int>(r), static_cast<int>(c))) {
        adj[r] |= bit(m + c);
        adj[m + c] |= bit(r);
      }
    }
  }
  std::vector<std::size_t> hole;
  std::size_t cycles = 0;
  each_chordless_cycle(adj, [&](const std::vector<std::size_t>& cyc) {
    ++cycles;
    if (cyc.size() % 4 == 2 && cyc.size() >= 6) {
      hole = cyc;
      return true;
    }
    return false;
  });
  rep.add_bound("chordless_cycles_examined", std::to_string(cycles));
  if (!hole.empty()) {
    std::vector<int> rows, cols;
    for (std::size_t v : hole) (v < m ? rows : cols).push_back(static_cast<int>(v < m ? v : v - m) + 1);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    rep.verdict = Verdict::False;
    rep.witness = "odd submatrix with two ones per row and column: " + row_col_witness(rows, cols);
  } else {
    rep.verdict = Verdict::True;
    rep.certificate.push_back("no chordless cycle of length 2 mod 4 in the row-column graph");
  }
  if (static_cast<int>(q) <= limits.clutter_cap_n) {
    const auto oracle = balanced_oracle(a, limits);
    if (oracle.verdict != rep.verdict) {
      throw std::logic_error("balanced fast path and submatrix scan disagree");
    }
    rep.certificate.push_back("exhaustive odd-order submatrix scan agrees");
  } else {
    rep.notes.push_back("submatrix scan skipped: more than " + std::to_string(limits.clutter_cap_n) +
                        " columns");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Max-flow min-cut

CheckReport mfmc_check(const comb::Clutter& c) {
  CheckReport rep;
  rep.check = "mfmc";
  rep.method = Method::TheoremPath;
  if (c.empty()) throw PreconditionError("max-flow min-cut check of an empty clutter");
  const std::size_t size = c.edges().front().size();
  for (const auto& e : c.edges()) {
    if (e.size() != size) {
      rep.verdict = Verdict::NotApplicable;
      rep.notes.push_back("edges have different cardinalities");
      return rep;
    }
  }
  const auto a = comb::incidence_matrix(c);
  const auto packing = poly::is_integral(poly::HRepPolyhedron::packing(a));
  const auto q_poly = poly::HRepPolyhedron::covering(a);
  const auto covering_vertices = poly::vertices(q_poly);

  std::vector<IntVector> integral;
  std::optional<RationalVector> fractional;
  for (const auto& v : covering_vertices.vertices) {
    if (blowup::is_integral(v)) {
      integral.push_back(to_integer(v));
    } else if (!fractional) {
      fractional = v;
    }
  }
  std::vector<IntVector> covers;
  for (const auto& u : comb::minimal_vertex_covers(c)) {
    covers.push_back(comb::indicator(c.vertex_count(), u).to_int());
  }
  sort_unique(integral);
  sort_unique(covers);
  if (integral != covers) {
    throw std::logic_error("integral vertices of Q(A) differ from the minimal vertex covers");
  }
  rep.certificate.push_back("integral vertices of Q(A) are the " + std::to_string(covers.size()) +
                            " minimal vertex covers");
  rep.add_bound("packing_vertices", packing.bounds.front().second);
  rep.add_bound("covering_vertices", std::to_string(covering_vertices.vertices.size()));

  if (packing.verdict != Verdict::True) {
    rep.verdict = Verdict::False;
    rep.witness = "fractional vertex " + packing.witness + " of {x >= 0, xA <= 1}";
  } else if (fractional) {
    rep.verdict = Verdict::False;
    rep.witness = "fractional vertex " + to_string(*fractional) + " of Q(A)";
  } else {
    rep.verdict = Verdict::True;
    rep.certificate.push_back("{x >= 0, xA <= 1} and Q(A) are integral");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Height-two Cohen-Macaulay ideals

std::optional<comb::VertexSet> chordless_cycle(const comb::Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Mask> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbours(static_cast<int>(v) + 1);
  std::optional<comb::VertexSet> best;
  each_chordless_cycle(adj, [&](const std::vector<std::size_t>& cyc) {
    if (cyc.size() >= 4 && (!best || cyc.size() < best->size())) {
      comb::VertexSet s;
      for (std::size_t v : cyc) s.push_back(static_cast<int>(v) + 1);
      best = std::move(s);
    }
    return best && best->size() == 4;
  });
  return best;
}

CheckReport cm_height_two_normal(int n, const std::vector<std::pair<int, int>>& pairs,
                                 const Limits& limits) {
  const auto g = comb::Graph::from_edges(n, pairs);
  CheckReport rep;
  rep.check = "cm_height_two_normal";
  rep.method = Method::TheoremPath;
  if (const auto cyc = chordless_cycle(comb::complement(g))) {
    rep.verdict = Verdict::NotApplicable;
    std::string s;
    for (int v : *cyc) s += (s.empty() ? "" : "-") + std::to_string(v);
    rep.witness = "chordless cycle " + s + " in the complement graph";
    rep.notes.push_back("complement is not chordal; the ideal is not Cohen-Macaulay");
    return rep;
  }
  rep.certificate.push_back("complement graph is chordal");
  auto normal = alg::is_rees_normal(comb::cover_ideal(comb::edge_clutter(g)), limits);
  rep.verdict = normal.verdict;
  rep.witness = normal.witness;
  rep.bounds = std::move(normal.bounds);
  for (auto& c : normal.certificate) rep.certificate.push_back(std::move(c));
  return rep;
}

}  // namespace blowup::checks

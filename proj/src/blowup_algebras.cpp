#include "blowup/blowup_algebras.hpp"

#include "blowup/errors.hpp"
#include "blowup/lp.hpp"
#include "blowup/structure_checks.hpp"

#include <algorithm>
#include <set>

namespace blowup::alg {

IntVector MonomialGenerator::to_vector() const {
  IntVector v = exponents.to_int();
  v.push_back(t_degree);
  return v;
}

MonomialGenerator MonomialGenerator::from_vector(const IntVector& v) {
  if (v.empty() || !is_nonnegative(v)) {
    throw InputError("monomial exponents must be non-negative, got " + to_string(v));
  }
  MonomialGenerator m;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) m.exponents.entries.push_back(v[i].convert_to<int>());
  m.t_degree = v.back().convert_to<int>();
  return m;
}

std::string render(const MonomialGenerator& m, const std::vector<std::string>& labels) {
  const bool custom = !labels.empty();
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const int e = m.exponents.entries[i];
    if (e == 0) continue;
    if (custom && !s.empty()) s += '*';
    s += custom ? labels.at(i) : "x" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (m.t_degree > 0) {
    if (!s.empty()) s += ' ';
    s += 't';
    if (m.t_degree > 1) s += "^" + std::to_string(m.t_degree);
  }
  return s.empty() ? std::string("1") : s;
}

std::string render_decomposition(const IntVector& point, const poly::Membership& m,
                                 const std::vector<IntVector>& generators) {
  std::string s = to_string(point) + " =";
  bool first = true;
  for (std::size_t j = 0; j < m.coefficients.size(); ++j) {
    if (m.coefficients[j] == 0) continue;
    s += first ? " " : " + ";
    s += m.coefficients[j].str() + "*" + to_string(generators[j]);
    first = false;
  }
  if (first) s += " 0";
  return s;
}

// ---------------------------------------------------------------------------
// Rees cones

ReesConeModel rees_cone(const std::vector<comb::ExponentVector>& generators) {
  if (generators.empty()) throw InputError("ideal needs at least one generator");
  const std::size_t n = generators.front().size();
  std::vector<IntVector> a_prime;
  for (std::size_t i = 0; i < n; ++i) a_prime.push_back(unit_vector(n + 1, i));
  for (const auto& g : generators) {
    if (g.size() != n) throw InputError("ideal generators have different lengths");
    IntVector v = g.to_int();
    if (is_zero(v)) throw InputError("zero exponent vector among ideal generators");
    v.push_back(1);
    a_prime.push_back(std::move(v));
  }
  ReesConeModel m{static_cast<int>(n), generators, a_prime,
                  poly::IntegerCone::from_generators(n + 1, a_prime)};
  return m;
}

NormalityResult rees_normality(const std::vector<comb::ExponentVector>& generators,
                               const Limits& limits) {
  NormalityResult out;
  auto model = rees_cone(generators);
  out.a_prime = model.a_prime;
  CheckReport& rep = out.report;
  rep.check = "rees_normal";
  rep.method = Method::TheoremPath;
  rep.add_bound("hb_dim_cap", std::to_string(limits.hb_dim_cap));
  rep.add_bound("cone_dim", std::to_string(model.n + 1));

  out.basis = poly::hilbert_basis(model.cone, limits);
  rep.add_bound("hilbert_basis_size", std::to_string(out.basis.elements.size()));
  rep.add_bound("triangulation_simplices", std::to_string(out.basis.simplices));

  const poly::SemigroupOracle oracle(model.a_prime);
  std::size_t nodes = 0;
  for (const auto& h : out.basis.elements) {
    auto m = oracle.decompose(h, limits.enumeration_budget);
    nodes += m.nodes;
    if (!m.member && rep.witness.empty()) {
      rep.witness = to_string(h) + " is in the Hilbert basis of the Rees cone but not in N A'";
    }
    out.certificates.push_back(std::move(m));
  }
  rep.add_bound("membership_search_nodes", std::to_string(nodes));
  rep.add_bound("grading", to_string(oracle.grading()));
  if (rep.witness.empty()) {
    rep.verdict = Verdict::True;
    for (std::size_t i = 0; i < out.basis.elements.size(); ++i) {
      rep.certificate.push_back(
          render_decomposition(out.basis.elements[i], out.certificates[i], model.a_prime));
    }
  } else {
    rep.verdict = Verdict::False;
  }
  return out;
}

CheckReport is_rees_normal(const std::vector<comb::ExponentVector>& generators,
                           const Limits& limits) {
  return rees_normality(generators, limits).report;
}

// ---------------------------------------------------------------------------
// Simis cones and symbolic generators

SimisConeModel simis_cone(const comb::Clutter& c) {
  const int n = c.vertex_count();
  const auto dim = static_cast<std::size_t>(n) + 1;
  std::vector<IntVector> def;
  for (std::size_t i = 0; i < dim; ++i) def.push_back(unit_vector(dim, i));
  auto covers = comb::minimal_vertex_covers(c);
  for (const auto& u : covers) {
    IntVector v = comb::indicator(n, u).to_int();
    v.push_back(-1);
    def.push_back(std::move(v));
  }
  auto cone = poly::IntegerCone::from_inequalities(dim, def);
  const auto& facets = cone.facets();
  std::vector<bool> redundant;
  for (const auto& h : def) {
    redundant.push_back(!std::binary_search(facets.begin(), facets.end(), h, LexLess{}));
  }
  return SimisConeModel{n, std::move(covers), std::move(def), std::move(redundant), std::move(cone)};
}

poly::HilbertBasis simis_hilbert_basis(const comb::Clutter& c, const Limits& limits) {
  return poly::hilbert_basis(simis_cone(c).cone, limits);
}

SymbolicGenerators symbolic_generators_perfect(const comb::Graph& g, const Limits& limits,
                                               bool assume_perfect) {
  SymbolicGenerators out;
  if (g.vertex_count() <= limits.chromatic_cap_n) {
    out.perfection = comb::is_perfect_definitional(g, limits);
    if (out.perfection.verdict != Verdict::True) {
      throw PreconditionError("graph is not perfect: " + out.perfection.witness);
    }
  } else if (assume_perfect) {
    out.perfection.check = "perfect_definitional";
    out.perfection.verdict = Verdict::True;
    out.perfection.method = Method::TheoremPath;
    out.perfection.notes.push_back("assumed-perfect");
  } else {
    throw CapExceeded("perfection oracle needs n <= " + std::to_string(limits.chromatic_cap_n) +
                      "; pass an explicit perfection assertion for larger graphs");
  }
  auto cliques = comb::all_cliques(g);
  std::stable_sort(cliques.begin(), cliques.end(),
                   [](const comb::VertexSet& a, const comb::VertexSet& b) { return a.size() < b.size(); });
  for (const auto& w : cliques) {
    out.generators.push_back(
        MonomialGenerator{comb::indicator(g.vertex_count(), w), static_cast<int>(w.size()) - 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ehrhart rings

namespace {

// Maximizes delta subject to <v_i, x> = 1, x_j >= delta, 0 <= delta <= 1.
std::optional<RationalVector> positive_normalizer(const std::vector<IntVector>& vs, std::size_t n) {
  lp::LinearProgram prog;
  prog.direction = lp::Direction::Maximize;
  prog.objective.assign(n + 1, 0);
  prog.objective[n] = 1;
  for (const auto& v : vs) {
    RationalVector row = to_rational(v);
    row.push_back(0);
    prog.add_row(std::move(row), lp::Sense::Equal, 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(n + 1);
    row[j] = 1;
    row[n] = -1;
    prog.add_row(std::move(row), lp::Sense::GreaterEqual, 0);
  }
  RationalVector cap(n + 1);
  cap[n] = 1;
  prog.add_row(std::move(cap), lp::Sense::LessEqual, 1);
  const auto res = lp::solve(prog);
  if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;
  return RationalVector(res.primal.begin(), res.primal.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

CheckReport ehrhart_equality(const std::vector<comb::ExponentVector>& f, const Limits& limits) {
  if (f.empty()) throw InputError("Ehrhart check needs at least one vector");
  const std::size_t n = f.front().size();
  std::vector<IntVector> points, lifted;
  for (const auto& v : f) {
    if (v.size() != n) throw InputError("vectors have different lengths");
    points.push_back(v.to_int());
    IntVector w = points.back();
    w.push_back(1);
    lifted.push_back(std::move(w));
  }
  sort_unique(points);
  sort_unique(lifted);
  const auto x0 = positive_normalizer(points, n);
  if (!x0) throw PreconditionError("no positive x0 with <v_i, x0> = 1 for every vector");

  CheckReport rep;
  rep.check = "ehrhart_equality";
  rep.method = Method::TheoremPath;
  rep.add_bound("x0", to_string(*x0));

  const auto cone = poly::IntegerCone::from_generators(n + 1, lifted);
  const auto hb = poly::hilbert_basis(cone, limits);
  Integer max_b = 1;
  std::optional<IntVector> outsider;
  for (const auto& h : hb.elements) {
    max_b = std::max<Integer>(max_b, h.back());
    if (!outsider && !std::binary_search(lifted.begin(), lifted.end(), h, LexLess{})) outsider = h;
  }
  rep.add_bound("hilbert_basis_size", std::to_string(hb.elements.size()));
  rep.add_bound("dilation_bound", max_b.str());

  // Dilation scan: every lattice point of bP must be a sum of b of the vectors.
  const poly::SemigroupOracle oracle(lifted);
  std::optional<IntVector> scan_witness;
  const int bmax = max_b.convert_to<int>();
  for (int b = 1; b <= bmax && !scan_witness; ++b) {
    const auto pts = poly::lattice_points_dilation(points, b, limits);
    for (const auto& p : pts) {
      IntVector q = p;
      q.push_back(b);
      if (!oracle.decompose(q, limits.enumeration_budget).member) {
        scan_witness = q;
        break;
      }
    }
    if (!scan_witness) {
      rep.certificate.push_back("b=" + std::to_string(b) + ": all " + std::to_string(pts.size()) +
                                " lattice points of bP are sums of b vectors");
    }
  }
  if (outsider.has_value() != scan_witness.has_value()) {
    throw std::logic_error("Hilbert basis and dilation scan disagree on Ehrhart equality");
  }
  if (outsider) {
    rep.verdict = Verdict::False;
    IntVector a(scan_witness->begin(), scan_witness->end() - 1);
    rep.witness = to_string(a) + " lies in " + scan_witness->back().str() +
                  "P but is not a sum of " + scan_witness->back().str() + " vectors";
  } else {
    rep.verdict = Verdict::True;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Gorenstein

namespace {

std::vector<std::vector<long long>> small_rows(const std::vector<IntVector>& rows) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : rows) {
    std::vector<long long> s;
    for (const auto& x : r) s.push_back(x.convert_to<long long>());
    out.push_back(std::move(s));
  }
  return out;
}

long long small_dot(const std::vector<long long>& a, const std::vector<long long>& x) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

CheckReport gorenstein_check(const comb::Graph& g, const Limits& limits) {
  const int n = g.vertex_count();
  if (!g.isolated_vertices().empty()) {
    throw PreconditionError("graph has isolated vertices " + comb::to_string(g.isolated_vertices()));
  }
  CheckReport rep;
  rep.check = "gorenstein";
  rep.method = Method::TheoremPath;
  const auto clutter = comb::edge_clutter(g);
  const auto ideal = comb::cover_ideal(clutter);
  if (!comb::is_unmixed(clutter)) {
    rep.verdict = Verdict::NotApplicable;
    rep.notes.push_back("precondition failed: minimal vertex covers have different sizes");
    return rep;
  }
  const auto normal = is_rees_normal(ideal, limits);
  if (normal.verdict != Verdict::True) {
    rep.verdict = Verdict::NotApplicable;
    rep.notes.push_back("precondition failed: Rees algebra of the cover ideal is not normal (" +
                        normal.witness + ")");
    return rep;
  }
  rep.notes.push_back("preconditions verified: unmixed, Rees algebra normal");
  rep.notes.push_back("grading deg(t) = -(g-1) of the standard graded statement is not implemented");

  const auto model = rees_cone(ideal);
  const IntVector one(static_cast<std::size_t>(n) + 1, 1);
  if (!model.cone.in_interior(one)) {
    rep.verdict = Verdict::False;
    for (const auto& f : model.facets()) {
      if (dot(f, one) <= 0) {
        rep.witness = "(1, ..., 1, 1) lies on the facet " + poly::render_inequality(f);
        break;
      }
    }
    return rep;
  }

  const int bound = limits.scan_bound > 0 ? limits.scan_bound : n;
  rep.add_bound("scan_bound_b", std::to_string(bound));
  rep.add_bound("scan_box_a", "1 <= a_i <= b + 1");
  const auto facets = small_rows(model.facets());
  std::size_t interior = 0;
  std::vector<long long> x(static_cast<std::size_t>(n) + 1), y(x.size());
  for (int b = 1; b <= bound; ++b) {
    std::size_t box = 1;
    for (int i = 0; i < n; ++i) {
      box *= static_cast<std::size_t>(b) + 1;
      if (box > limits.enumeration_budget) throw CapExceeded("Gorenstein scan box exceeds the budget");
    }
    std::fill(x.begin(), x.end(), 1);
    x[static_cast<std::size_t>(n)] = b;
    while (true) {
      bool inside = true;
      for (const auto& f : facets) {
        if (small_dot(f, x) <= 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        ++interior;
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - 1;
        for (const auto& f : facets) {
          if (small_dot(f, y) < 0) {
            rep.verdict = Verdict::False;
            IntVector w;
            for (long long v : x) w.push_back(v);
            rep.witness = to_string(w) + " is interior but differs from (1, ..., 1, 1) by a point "
                          "outside the cone";
            rep.add_bound("interior_points_scanned", std::to_string(interior));
            return rep;
          }
        }
      }
      int i = 0;
      while (i < n && x[static_cast<std::size_t>(i)] == b + 1) x[static_cast<std::size_t>(i++)] = 1;
      if (i == n) break;
      ++x[static_cast<std::size_t>(i)];
    }
  }
  rep.add_bound("interior_points_scanned", std::to_string(interior));
  MonomialGenerator canonical{comb::ExponentVector{std::vector<int>(static_cast<std::size_t>(n), 1)}, 1};
  rep.verdict = Verdict::True;
  rep.certificate.push_back("canonical module generated by " + render(canonical));
  rep.certificate.push_back("(1, ..., 1, 1) lies in the interior of the Rees cone");
  return rep;
}

// ---------------------------------------------------------------------------
// Balanced matrices

CheckReport dual_balanced_normal(const comb::IncidenceMatrix& a, const Limits& limits) {
  CheckReport rep;
  rep.check = "dual_balanced_normal";
  rep.method = Method::TheoremPath;
  const auto balanced = checks::balanced_check(a, limits);
  if (balanced.verdict != Verdict::True) {
    rep.verdict = Verdict::NotApplicable;
    rep.witness = balanced.witness;
    rep.notes.push_back("matrix is not balanced; check skipped");
    return rep;
  }
  std::vector<comb::ExponentVector> columns;
  for (const auto& c : a.columns) columns.push_back(comb::ExponentVector{c});
  const auto dual = comb::dual_ideal(columns);
  auto normal = is_rees_normal(dual, limits);
  rep.verdict = normal.verdict;
  rep.witness = normal.witness;
  rep.certificate = std::move(normal.certificate);
  rep.bounds = std::move(normal.bounds);
  for (const auto& d : dual) rep.notes.push_back("dual generator " + render(MonomialGenerator{d, 0}));
  return rep;
}

}  // namespace blowup::alg

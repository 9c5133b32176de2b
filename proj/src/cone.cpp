#include "blowup/errors.hpp"
#include "blowup/polyhedra.hpp"

#include <algorithm>
#include <mutex>

namespace blowup::poly {

namespace {

// Reduced row echelon basis of span(rows), each row scaled to a primitive
// integer vector with positive leading entry.
std::vector<IntVector> canonical_row_basis(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<RationalVector> m;
  for (const auto& r : rows) m.push_back(to_rational(r));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const Rational p = m[rank][c];
    for (auto& x : m[rank]) x /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(primitive_from_rational(m[i]));
  return out;
}

// Orthogonal projection of v onto the complement of span(basis).
IntVector project_away(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  std::vector<RationalVector> gram(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  const auto c = solve_square(std::move(gram), std::move(rhs));
  RationalVector p = to_rational(v);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) p[j] -= (*c)[i] * Rational(basis[i][j]);
  }
  return primitive_from_rational(p);
}

void check_dim(const std::vector<IntVector>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs) {
    if (v.size() != dim) {
      throw InputError(std::string(what) + " of length " + std::to_string(v.size()) +
                       " in a cone of dimension " + std::to_string(dim));
    }
  }
}

}  // namespace

struct IntegerCone::State {
  bool from_generators = true;
  std::vector<IntVector> input_generators;
  std::vector<IntVector> input_inequalities;
  std::vector<IntVector> input_equations;

  std::once_flag h_once;
  std::vector<IntVector> facets;
  std::vector<IntVector> equations;

  std::once_flag v_once;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;

  std::once_flag g_once;
  std::vector<IntVector> generators;
};

IntegerCone::IntegerCone(std::size_t dim, std::shared_ptr<State> state)
    : dim_(dim), state_(std::move(state)) {}

IntegerCone IntegerCone::from_generators(std::size_t dim, std::vector<IntVector> generators) {
  check_dim(generators, dim, "generator");
  for (const auto& g : generators) {
    if (is_zero(g)) throw InputError("zero vector among cone generators");
  }
  sort_unique(generators);
  auto s = std::make_shared<State>();
  s->from_generators = true;
  s->input_generators = std::move(generators);
  return IntegerCone(dim, std::move(s));
}

IntegerCone IntegerCone::from_inequalities(std::size_t dim, std::vector<IntVector> inequalities,
                                           std::vector<IntVector> equations) {
  check_dim(inequalities, dim, "inequality");
  check_dim(equations, dim, "equation");
  auto s = std::make_shared<State>();
  s->from_generators = false;
  s->input_inequalities = std::move(inequalities);
  s->input_equations = std::move(equations);
  return IntegerCone(dim, std::move(s));
}

namespace {

std::vector<IntVector> with_both_signs(std::vector<IntVector> base, const std::vector<IntVector>& eqs) {
  for (const auto& e : eqs) {
    base.push_back(e);
    IntVector neg = e;
    for (auto& x : neg) x = -x;
    base.push_back(std::move(neg));
  }
  return base;
}

}  // namespace

const std::vector<IntVector>& IntegerCone::generators() const {
  State& s = *state_;
  if (s.from_generators) return s.input_generators;
  std::call_once(s.g_once, [&] {
    std::call_once(s.v_once, [&] {
      auto dd = double_description(with_both_signs(s.input_inequalities, s.input_equations), dim_);
      s.rays = std::move(dd.rays);
      s.lineality = canonical_row_basis(dd.lineality, dim_);
    });
    s.generators = with_both_signs(s.rays, s.lineality);
    sort_unique(s.generators);
  });
  return s.generators;
}

const std::vector<IntVector>& IntegerCone::facets() const {
  State& s = *state_;
  std::call_once(s.h_once, [&] {
    const auto& gens = generators();
    auto dd = double_description(gens, dim_);
    s.equations = canonical_row_basis(dd.lineality, dim_);
    for (const auto& r : dd.rays) s.facets.push_back(project_away(r, s.equations));
    sort_unique(s.facets);
  });
  return s.facets;
}

const std::vector<IntVector>& IntegerCone::equations() const {
  facets();
  return state_->equations;
}

const std::vector<IntVector>& IntegerCone::extreme_rays() const {
  State& s = *state_;
  if (s.from_generators) {
    std::call_once(s.v_once, [&] {
      auto dd = double_description(with_both_signs(facets(), equations()), dim_);
      s.rays = std::move(dd.rays);
      s.lineality = canonical_row_basis(dd.lineality, dim_);
    });
  } else {
    generators();
  }
  if (!s.lineality.empty()) {
    throw NotPointedError("cone has a lineality space of dimension " +
                          std::to_string(s.lineality.size()));
  }
  return s.rays;
}

bool IntegerCone::is_pointed() const {
  try {
    extreme_rays();
    return true;
  } catch (const NotPointedError&) {
    return false;
  }
}

bool IntegerCone::contains(const IntVector& x) const {
  if (x.size() != dim_) throw InputError("point dimension differs from cone dimension");
  for (const auto& e : equations()) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& f : facets()) {
    if (dot(f, x) < 0) return false;
  }
  return true;
}

bool IntegerCone::in_interior(const IntVector& x) const {
  if (x.size() != dim_) throw InputError("point dimension differs from cone dimension");
  if (!is_full_dimensional()) return false;
  for (const auto& f : facets()) {
    if (dot(f, x) <= 0) return false;
  }
  return true;
}

std::vector<Halfspace> facets(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw InputError("facets of an empty generator list");
  const auto cone = IntegerCone::from_generators(generators.front().size(), generators);
  std::vector<Halfspace> out;
  for (const auto& f : cone.facets()) out.push_back(Halfspace{f, 0});
  return out;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& facet_normals, std::size_t dim) {
  return IntegerCone::from_inequalities(dim, facet_normals).extreme_rays();
}

// ---------------------------------------------------------------------------
// Lattices

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<IntVector> b = rows;  // b[i][j], columns transformed
  std::vector<IntVector> u(dim, IntVector(dim));
  for (std::size_t i = 0; i < dim; ++i) u[i][i] = 1;
  auto col_sub = [&](std::size_t j, std::size_t k, const Integer& q) {
    for (auto& row : b) row[j] -= q * row[k];
    for (auto& row : u) row[j] -= q * row[k];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (auto& row : b) std::swap(row[j], row[k]);
    for (auto& row : u) std::swap(row[j], row[k]);
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < b.size() && piv < dim; ++i) {
    while (true) {
      std::size_t k = dim;
      for (std::size_t j = piv; j < dim; ++j) {
        if (b[i][j] != 0 && (k == dim || abs(b[i][j]) < abs(b[i][k]))) k = j;
      }
      if (k == dim) break;
      bool single = true;
      for (std::size_t j = piv; j < dim; ++j) {
        if (j == k || b[i][j] == 0) continue;
        col_sub(j, k, b[i][j] / b[i][k]);
        if (b[i][j] != 0) single = false;
      }
      if (single) {
        col_swap(k, piv);
        ++piv;
        break;
      }
    }
  }
  std::vector<IntVector> kernel;
  for (std::size_t j = piv; j < dim; ++j) {
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = u[i][j];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

SublatticeBasis::SublatticeBasis(std::size_t dim, const std::vector<IntVector>& equations)
    : dim_(dim) {
  if (equations.empty()) {
    for (std::size_t i = 0; i < dim; ++i) basis_.push_back(unit_vector(dim, i));
  } else {
    basis_ = integer_kernel(equations, dim);
  }
  // Pick rank-many independent coordinates and invert the square block there.
  const std::size_t r = basis_.size();
  std::vector<RationalVector> rowsel;
  for (std::size_t i = 0; i < dim && pivot_rows_.size() < r; ++i) {
    RationalVector row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = Rational(basis_[j][i]);
    std::vector<IntVector> trial;
    for (std::size_t p : pivot_rows_) {
      IntVector t(r);
      for (std::size_t j = 0; j < r; ++j) t[j] = basis_[j][p];
      trial.push_back(std::move(t));
    }
    IntVector cur(r);
    for (std::size_t j = 0; j < r; ++j) cur[j] = basis_[j][i];
    trial.push_back(cur);
    if (blowup::rank(trial) == trial.size()) {
      pivot_rows_.push_back(i);
      rowsel.push_back(std::move(row));
    }
  }
  if (r > 0) pivot_inverse_ = *inverse(rowsel);
}

IntVector SublatticeBasis::coordinates(const IntVector& x) const {
  const std::size_t r = basis_.size();
  RationalVector c(r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) c[a] += pivot_inverse_[a][b] * Rational(x[pivot_rows_[b]]);
  }
  if (!blowup::is_integral(c)) throw InputError("vector " + to_string(x) + " is not in the sublattice");
  IntVector ci = to_integer(c);
  if (embed(ci) != x) throw InputError("vector " + to_string(x) + " is not in the sublattice");
  return ci;
}

IntVector SublatticeBasis::embed(const IntVector& coords) const {
  IntVector x(dim_);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (coords[j] == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i) x[i] += coords[j] * basis_[j][i];
  }
  return x;
}

}  // namespace blowup::poly

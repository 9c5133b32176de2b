#include "blowup/lp.hpp"

#include "blowup/errors.hpp"

#include <stdexcept>

namespace blowup::lp {

void LinearProgram::add_row(RationalVector row, Sense sense, Rational rhs_value) {
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(rhs_value));
}

void LinearProgram::validate() const {
  if (rows.size() != senses.size() || rows.size() != rhs.size()) {
    throw InputError("linear program: rows, senses and right-hand side differ in length");
  }
  for (const auto& r : rows) {
    if (r.size() != objective.size()) {
      throw InputError("linear program: constraint row length differs from objective length");
    }
  }
  if (!free_variables.empty() && free_variables.size() != objective.size()) {
    throw InputError("linear program: free-variable mask has the wrong length");
  }
}

namespace {

// Dense tableau for max c^T z, A z = b, z >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> a, RationalVector b, std::vector<std::size_t> basis)
      : a_(std::move(a)), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i].push_back(b[i]);
  }

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_.front().size() - 1; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Rational& rhs(std::size_t i) const { return a_[i].back(); }

  void remove_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < a_[i].size(); ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Maximizes cost over columns flagged in `allowed`. Returns false when unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Least-index entering column with positive reduced cost.
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!allowed[j]) continue;
        if (reduced_cost(cost, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        const Rational ratio = rhs(i) / a_[i][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  Rational reduced_cost(const RationalVector& cost, std::size_t j) const {
    Rational z = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      if (a_[i][j] != 0) z -= cost[basis_[i]] * a_[i][j];
    }
    return z;
  }

  Rational value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows(); ++i) v += cost[basis_[i]] * rhs(i);
    return v;
  }

 private:
  std::vector<RationalVector> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.row_count();

  // Column layout: structural columns (free variables split in two), one slack
  // per inequality row, then one artificial per row.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = ncols++;
    if (lp.is_free(j)) minus_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.senses[i] != Sense::Equal) slack_col[i] = ncols++;
  }
  const std::size_t first_artificial = ncols;
  const std::size_t total = ncols + m;

  std::vector<RationalVector> a(m, RationalVector(total));
  RationalVector b(m);
  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][plus_col[j]] = lp.rows[i][j];
      if (minus_col[j] != SIZE_MAX) a[i][minus_col[j]] = -lp.rows[i][j];
    }
    if (lp.senses[i] == Sense::LessEqual) a[i][slack_col[i]] = 1;
    if (lp.senses[i] == Sense::GreaterEqual) a[i][slack_col[i]] = -1;
    b[i] = lp.rhs[i];
    if (b[i] < 0) {
      flipped[i] = true;
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] = -a[i][j];
      b[i] = -b[i];
    }
    a[i][first_artificial + i] = 1;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = first_artificial + i;
  Tableau t(std::move(a), std::move(b), std::move(basis));

  // Phase 1: drive the artificial sum to zero.
  RationalVector phase1(total);
  for (std::size_t i = 0; i < m; ++i) phase1[first_artificial + i] = -1;
  std::vector<bool> all(total, true);
  t.optimize(phase1, all);
  LPResult result;
  if (t.value(phase1) < 0) {
    result.status = Status::Infeasible;
    return result;
  }
  // Pivot remaining artificials out of the basis; rows that cannot be pivoted are redundant.
  std::vector<std::size_t> row_origin(m);
  for (std::size_t i = 0; i < m; ++i) row_origin[i] = i;
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < first_artificial) {
      ++i;
      continue;
    }
    std::size_t col = first_artificial;
    for (std::size_t j = 0; j < first_artificial; ++j) {
      if (t.entry(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col == first_artificial) {
      t.remove_row(i);
      row_origin.erase(row_origin.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      t.pivot(i, col);
      ++i;
    }
  }

  // Phase 2.
  const bool minimize = lp.direction == Direction::Minimize;
  RationalVector cost(total);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = minimize ? Rational(-lp.objective[j]) : lp.objective[j];
    cost[plus_col[j]] = c;
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -c;
  }
  std::vector<bool> structural(total, false);
  for (std::size_t j = 0; j < first_artificial; ++j) structural[j] = true;
  if (!t.optimize(cost, structural)) {
    result.status = Status::Unbounded;
    return result;
  }

  RationalVector z(total);
  for (std::size_t i = 0; i < t.rows(); ++i) z[t.basis()[i]] = t.rhs(i);
  result.status = Status::Optimal;
  result.primal.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    result.primal[j] = z[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) result.primal[j] -= z[minus_col[j]];
  }
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * result.primal[j];

  // Dual: solve B^T y = c_B on the surviving rows of the standard-form matrix.
  const std::size_t k = t.rows();
  result.dual.assign(m, 0);
  if (k > 0) {
    std::vector<RationalVector> bt(k, RationalVector(k));
    RationalVector cb(k);
    for (std::size_t col = 0; col < k; ++col) {
      const std::size_t var = t.basis()[col];
      cb[col] = cost[var];
      for (std::size_t row = 0; row < k; ++row) {
        const std::size_t i = row_origin[row];
        Rational coef;
        if (var < ncols) {
          // Recover the original standard-form coefficient.
          std::size_t j = 0;
          bool found = false;
          for (; j < n; ++j) {
            if (plus_col[j] == var) {
              coef = lp.rows[i][j];
              found = true;
              break;
            }
            if (minus_col[j] == var) {
              coef = -lp.rows[i][j];
              found = true;
              break;
            }
          }
          if (!found) {
            if (slack_col[i] == var) coef = lp.senses[i] == Sense::LessEqual ? 1 : -1;
          }
          if (flipped[i]) coef = -coef;
        } else {
          coef = (var - first_artificial == i) ? 1 : 0;
        }
        bt[col][row] = coef;
      }
    }
    auto y = solve_square(std::move(bt), std::move(cb));
    if (!y) throw std::logic_error("simplex ended on a singular basis");
    for (std::size_t row = 0; row < k; ++row) {
      const std::size_t i = row_origin[row];
      Rational yi = flipped[i] ? Rational(-(*y)[row]) : (*y)[row];
      result.dual[i] = minimize ? Rational(-yi) : yi;
    }
  }
  if (!certifies_optimality(lp, result)) {
    throw std::logic_error("simplex result failed its duality certificate");
  }
  return result;
}

bool is_feasible_point(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.variable_count()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!lp.is_free(j) && x[j] < 0) return false;
  }
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    const Rational lhs = dot(lp.rows[i], x);
    switch (lp.senses[i]) {
      case Sense::LessEqual:
        if (lhs > lp.rhs[i]) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < lp.rhs[i]) return false;
        break;
      case Sense::Equal:
        if (lhs != lp.rhs[i]) return false;
        break;
    }
  }
  return true;
}

bool certifies_optimality(const LinearProgram& lp, const LPResult& r) {
  if (r.status != Status::Optimal) return false;
  if (!is_feasible_point(lp, r.primal)) return false;
  if (dot(lp.objective, r.primal) != r.value) return false;
  if (r.dual.size() != lp.row_count()) return false;
  const bool maximize = lp.direction == Direction::Maximize;
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    const Rational& y = r.dual[i];
    // Maximization: y >= 0 on <= rows, y <= 0 on >= rows; minimization flips.
    if (lp.senses[i] == Sense::LessEqual && (maximize ? y < 0 : y > 0)) return false;
    if (lp.senses[i] == Sense::GreaterEqual && (maximize ? y > 0 : y < 0)) return false;
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational reduced = lp.objective[j];
    for (std::size_t i = 0; i < lp.row_count(); ++i) reduced -= lp.rows[i][j] * r.dual[i];
    if (lp.is_free(j)) {
      if (reduced != 0) return false;
    } else if (maximize ? reduced > 0 : reduced < 0) {
      return false;
    }
  }
  return dot(lp.rhs, r.dual) == r.value;
}

ILPResult solve_ilp_bounded(const LinearProgram& lp, const IntegerBox& box, std::size_t budget) {
  lp.validate();
  const std::size_t n = lp.variable_count();
  if (box.ranges.size() != n) throw InputError("integer box has the wrong number of ranges");
  Integer points = 1;
  for (const auto& [lo, hi] : box.ranges) {
    if (hi < lo) throw InputError("integer box is empty");
    points *= (hi - lo + 1);
  }
  if (points > budget) {
    throw CapExceeded("integer box holds " + points.str() + " points, budget is " +
                      std::to_string(budget));
  }
  // Scale rows and objective to integers once; the scan then stays in Z.
  auto scaled = [](const RationalVector& row, const Rational& extra) {
    Integer l = boost::multiprecision::denominator(extra);
    for (const auto& q : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    IntVector out;
    for (const auto& q : row) out.push_back(boost::multiprecision::numerator(q * Rational(l)));
    out.push_back(boost::multiprecision::numerator(extra * Rational(l)));
    return out;
  };
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < lp.row_count(); ++i) rows.push_back(scaled(lp.rows[i], lp.rhs[i]));
  const IntVector objective = scaled(lp.objective, 0);
  Integer obj_scale = 1;
  for (const auto& q : lp.objective) {
    obj_scale = boost::multiprecision::lcm(obj_scale, boost::multiprecision::denominator(q));
  }

  ILPResult best;
  Integer best_scaled = 0;
  const bool maximize = lp.direction == Direction::Maximize;
  IntVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = box.ranges[j].first;
  while (true) {
    ++best.points_examined;
    bool feasible = true;
    for (std::size_t j = 0; j < n && feasible; ++j) {
      if (!lp.is_free(j) && x[j] < 0) feasible = false;
    }
    for (std::size_t i = 0; i < rows.size() && feasible; ++i) {
      Integer lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * x[j];
      const Integer& rhs = rows[i][n];
      switch (lp.senses[i]) {
        case Sense::LessEqual: feasible = lhs <= rhs; break;
        case Sense::GreaterEqual: feasible = lhs >= rhs; break;
        case Sense::Equal: feasible = lhs == rhs; break;
      }
    }
    if (feasible) {
      Integer v = 0;
      for (std::size_t j = 0; j < n; ++j) v += objective[j] * x[j];
      if (!best.found || (maximize ? v > best_scaled : v < best_scaled)) {
        best.found = true;
        best_scaled = v;
        best.solution = x;
      }
    }
    std::size_t j = 0;
    while (j < n && x[j] == box.ranges[j].second) {
      x[j] = box.ranges[j].first;
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  if (best.found) best.value = Rational(best_scaled, obj_scale);
  return best;
}

}  // namespace blowup::lp

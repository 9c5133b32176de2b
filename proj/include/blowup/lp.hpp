#pragma once

// Exact rational linear programming (two-phase simplex, least-index pivoting)
// and a brute-force integer optimizer over finite boxes.

#include "blowup/arith.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace blowup::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Direction { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

struct LinearProgram {
  Direction direction = Direction::Maximize;
  RationalVector objective;
  std::vector<RationalVector> rows;
  std::vector<Sense> senses;
  RationalVector rhs;
  // Empty means every variable is sign-constrained (x_j >= 0).
  std::vector<bool> free_variables;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t row_count() const { return rows.size(); }
  bool is_free(std::size_t j) const { return !free_variables.empty() && free_variables[j]; }

  void add_row(RationalVector row, Sense sense, Rational rhs_value);
  void validate() const;  // throws InputError on inconsistent dimensions
};

/// `dual` has one entry per row. For a maximization it satisfies y_i >= 0 on
/// `<=` rows, y_i <= 0 on `>=` rows and c - A^T y <= 0 (= 0 on free columns);
/// for a minimization all of those signs flip. On optimality b^T y == value.
struct LPResult {
  Status status = Status::Infeasible;
  Rational value = 0;
  RationalVector primal;
  RationalVector dual;
};

LPResult solve(const LinearProgram& lp);

// Checks primal feasibility, dual feasibility and equal objective values.
bool certifies_optimality(const LinearProgram& lp, const LPResult& result);
bool is_feasible_point(const LinearProgram& lp, const RationalVector& x);

struct IntegerBox {
  std::vector<std::pair<Integer, Integer>> ranges;  // inclusive [lo, hi] per variable
};

struct ILPResult {
  bool found = false;
  Rational value = 0;
  IntVector solution;
  std::size_t points_examined = 0;
};

// Exhaustive search of the integer points of `box`; the objective direction of
// `lp` decides the optimum. Throws InputError on an empty box and CapExceeded
// when the box holds more than `budget` points.
ILPResult solve_ilp_bounded(const LinearProgram& lp, const IntegerBox& box,
                            std::size_t budget = 5'000'000);

}  // namespace blowup::lp

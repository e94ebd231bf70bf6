#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "hive/errors.hpp"

namespace hive::ratlp {

using Rat = mpq_class;

/** One inequality: sum(coef * x_col) <= rhs. Variables are free (any sign). */
struct Constraint {
  std::vector<std::pair<int, Rat>> terms;
  Rat rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rat> x;
  Rat objective = 0;
};

/**
 * Exact two-phase primal simplex with Bland's rule (terminating, no
 * floating-point rounding anywhere). Maximizes obj^T x over the constraint
 * system; free variables are handled by sign splitting internally.
 */
Solution maximize(int nvars, const std::vector<Constraint>& cons,
                  const std::vector<Rat>& obj);

/** Phase-1 only: any feasible point, or Status::Infeasible. */
Solution find_feasible(int nvars, const std::vector<Constraint>& cons);

struct ChebyshevResult {
  Status status = Status::Infeasible;
  std::vector<Rat> center;
  Rat radius = 0;
};

/**
 * Chebyshev center: maximize r subject to a.x + ||a|| r <= b. The Euclidean
 * norms are replaced by rational upper bounds, so the returned ball is
 * guaranteed inscribed (the radius may be marginally conservative).
 */
ChebyshevResult chebyshev_center(int nvars, const std::vector<Constraint>& cons);

}  // namespace hive::ratlp

#pragma once

#include <cstdint>
#include <vector>

#include "hive/grassmann.hpp"

namespace hive {

struct CheckCase {
  int n = 0, k = 0, p = 0;
  double grad_slope = 0.0;     // first-order remainder slope, want 2
  double hess_slope = 0.0;     // second-order remainder slope, want 3
  double tangent_residual = 0.0;
  double hess_symmetry = 0.0;  // relative bilinear-form defect
};

struct GradCheckReport {
  std::vector<CheckCase> cases;
  double grad_slope_min = 0.0, grad_slope_max = 0.0;
  double hess_slope_min = 0.0, hess_slope_max = 0.0;
  double tangent_residual_max = 0.0;
  double hess_symmetry_max = 0.0;
};

/**
 * Finite-difference verification of the analytic gradients and Hessians on
 * random SPD pairs with dimensions up to max_dim. Remainder slopes are fit on
 * log-log points above the double-precision noise floor.
 */
GradCheckReport gradient_check(int max_dim, int trials, std::uint64_t seed);

}  // namespace hive

#pragma once

#include <utility>

namespace hive {

/** Regularized incomplete beta function I_x(a, b). */
double incomplete_beta(double a, double b, double x);

/** Clopper-Pearson two-sided confidence interval for a binomial proportion. */
std::pair<double, double> clopper_pearson(long long successes, long long trials,
                                          double confidence = 0.95);

}  // namespace hive

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hive/errors.hpp"

namespace hive {

/** Default absolute tolerance for real-valued saturation checks. */
inline constexpr double kSaturationTol = 1e-9;

bool is_weakly_decreasing(const Eigen::VectorXd& v, double tol = 0.0);

/**
 * True iff sum(mu)+sum(nu) == sum(lambda). Real inputs are compared with an
 * absolute tolerance scaled by the magnitude of the sums; exactly-integral
 * inputs are compared exactly. Throws LengthMismatch / NotWeaklyDecreasing
 * when the preconditions fail.
 */
bool check_saturation(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu,
                      const Eigen::VectorXd& lambda, double tol = kSaturationTol);

/**
 * A triple (mu, nu, lambda) of weakly decreasing length-n weight vectors with
 * sum(mu)+sum(nu) == sum(lambda). Immutable after construction.
 */
class WeightTriple {
 public:
  WeightTriple(Eigen::VectorXd mu, Eigen::VectorXd nu, Eigen::VectorXd lambda,
               double tol = kSaturationTol);

  static WeightTriple from_ints(const std::vector<long long>& mu,
                                const std::vector<long long>& nu,
                                const std::vector<long long>& lambda);

  int n() const { return static_cast<int>(mu_.size()); }
  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::VectorXd& nu() const { return nu_; }
  const Eigen::VectorXd& lambda() const { return lambda_; }

  /** All entries exactly integral (and small enough to round-trip a double). */
  bool integral() const { return integral_; }
  std::vector<long long> mu_int() const;
  std::vector<long long> nu_int() const;
  std::vector<long long> lambda_int() const;

  /** Componentwise scaling by a positive integer; preserves all invariants. */
  WeightTriple scaled(long long m) const;

 private:
  Eigen::VectorXd mu_, nu_, lambda_;
  bool integral_;
};

}  // namespace hive

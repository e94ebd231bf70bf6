#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hive/polytope.hpp"
#include "hive/rng.hpp"

namespace hive {

/** A generic bounded inequality system A x <= b. */
struct IneqSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  int dim() const { return static_cast<int>(A.cols()); }

  static IneqSystem box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);
  static IneqSystem from_polytope(const HivePolytope& poly, double dilation = 0.0);

  bool contains(const Eigen::VectorXd& x, double tol = 0.0) const;
};

/**
 * Random-direction hit-and-run sampler. Chord endpoints come from exact ratio
 * tests against the linear constraints (no bisection). Every sample is
 * strictly feasible.
 */
class HitAndRun {
 public:
  HitAndRun(const IneqSystem& sys, const Eigen::VectorXd& x0, std::uint64_t seed);

  const Eigen::VectorXd& step();
  /** Step restricted to the ball |x - center| <= radius (used for annealing). */
  const Eigen::VectorXd& step_in_ball(const Eigen::VectorXd& center, double radius);
  const Eigen::VectorXd& current() const { return x_; }

 private:
  const IneqSystem& sys_;
  Eigen::VectorXd x_;
  Xoshiro256 rng_;
  Eigen::VectorXd dir_;
};

/**
 * Chebyshev center and radius of the system, via the exact rational LP.
 * Throws EmptyPolytope when infeasible.
 */
std::pair<Eigen::VectorXd, double> chebyshev_center(const IneqSystem& sys);

struct VolumeEstimate {
  double value = 0.0;
  double rel_error_target = 0.0;
  long long samples_used = 0;
  std::uint64_t seed = 0;
};

/**
 * Multiphase Monte Carlo volume: anneal through the nested bodies
 * K_i = P intersect B(x0, r0 * 2^(i/d)) from the inscribed Chebyshev ball out
 * to the whole polytope, estimating each successive volume ratio (bounded in
 * [1,2] by convexity) from hit-and-run samples of the outer body.
 * Throws EmptyPolytope / UnboundedPolytope after an LP pre-check.
 */
VolumeEstimate continuum_volume(const IneqSystem& sys, double rel_error,
                                std::uint64_t seed);

struct RoundedLrcResult {
  double estimate = 0.0;
  double f = 0.0;       // fraction of dilated-polytope samples rounding into the hive
  double vol_q = 0.0;   // continuum volume of the dilated polytope
  long long samples = 0;
  std::uint64_t seed = 0;
};

/**
 * Rounded continuum estimator: dilate the hive polytope by +2 on every row,
 * estimate its continuum volume, and scale by the fraction of uniform samples
 * whose nearest-integer rounding satisfies the undilated system exactly.
 * Sampling continues until the 95% binomial CI half-width on f falls below
 * rel_error * f.
 */
RoundedLrcResult rounded_lrc(const WeightTriple& triple, double rel_error,
                             std::uint64_t seed, double dilation = 2.0);

}  // namespace hive

#include "hive/gradcheck.hpp"

#include <cmath>

namespace hive {

namespace {

Eigen::MatrixXd random_spd(int n, Xoshiro256& rng) {
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G(i, j) = rng.gaussian();
  }
  return (G * G.transpose()) / static_cast<double>(n);
}

Direction random_direction(const GrassmannPair& at, Xoshiro256& rng) {
  Direction d = Direction::zero(at);
  for (int c = 0; c < d.B.cols(); ++c) {
    for (int r = 0; r < d.B.rows(); ++r) d.B(r, c) = rng.gaussian();
  }
  for (int c = 0; c < d.Atilde.cols(); ++c) {
    for (int r = 0; r < d.Atilde.rows(); ++r) d.Atilde(r, c) = rng.gaussian();
  }
  return d;
}

GrassmannPair shifted(const GrassmannPair& p, const Direction& d, double t) {
  return {p.B + t * d.B, p.Atilde + t * d.Atilde};
}

/**
 * Slope of the cleanest linear piece of log(err) vs log(t): among all windows
 * of at least five points above the noise floor, take the one with the
 * smallest per-point regression residual (the Taylor law holds between the
 * rounding floor and the next-order takeover).
 */
double fit_slope(const std::vector<double>& ts, const std::vector<double>& errs,
                 double floor) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (errs[i] <= floor) continue;
    xs.push_back(std::log(ts[i]));
    ys.push_back(std::log(errs[i]));
  }
  const int m = static_cast<int>(xs.size());
  const int width = 5;
  if (m < width) return 0.0;

  double best_slope = 0.0;
  double best_resid = std::numeric_limits<double>::infinity();
  for (int lo = 0; lo + width <= m; ++lo) {
    for (int hi = lo + width; hi <= m; ++hi) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int w = hi - lo;
      for (int i = lo; i < hi; ++i) {
        sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
      }
      const double slope = (w * sxy - sx * sy) / (w * sxx - sx * sx);
      const double intercept = (sy - slope * sx) / w;
      double resid = 0;
      for (int i = lo; i < hi; ++i) {
        const double d = ys[i] - slope * xs[i] - intercept;
        resid += d * d;
      }
      resid /= w;
      if (resid < best_resid) {
        best_resid = resid;
        best_slope = slope;
      }
    }
  }
  return best_slope;
}

}  // namespace

GradCheckReport gradient_check(int max_dim, int trials, std::uint64_t seed) {
  GradCheckReport report;
  for (int trial = 0; trial < trials; ++trial) {
    Xoshiro256 rng(derive_seed(seed, 0x67, static_cast<std::uint64_t>(trial)));
    const int n = 3 + static_cast<int>(rng.uniform_int(0, std::max(0, max_dim - 3)));
    const int k = static_cast<int>(rng.uniform_int(1, n - 2));
    const int p = static_cast<int>(rng.uniform_int(1, n - k - 1));

    const CostContext ctx(random_spd(n, rng), random_spd(n, rng));
    const GrassmannPair pair = GrassmannPair::random(n, k, p, rng());

    const double f0 = cost(ctx, pair);
    const Direction egrad = euclid_grad(ctx, pair);

    CheckCase cc;
    cc.n = n;
    cc.k = k;
    cc.p = p;
    // a direction whose third-order term is too small to measure reads as the
    // next Taylor order; redraw such directions (a wrong Hessian reads as
    // slope 2 along every direction, so this loses no detection power)
    Direction d = random_direction(pair, rng);
    for (int attempt = 0; attempt < 6; ++attempt) {
      const double gd = egrad.dot(d);
      const double hd = euclid_hess(ctx, pair, d).dot(d);
      std::vector<double> ts, e1, e2;
      for (double t = 1e-6; t <= 1.01e-2; t *= std::pow(10.0, 1.0 / 4.0)) {
        const double ft = cost(ctx, shifted(pair, d, t));
        ts.push_back(t);
        e1.push_back(std::abs(ft - f0 - t * gd));
        e2.push_back(std::abs(ft - f0 - t * gd - 0.5 * t * t * hd));
      }
      const double floor = 1e4 * 2.2e-16 * std::max(1.0, std::abs(f0));
      cc.grad_slope = fit_slope(ts, e1, floor);
      cc.hess_slope = fit_slope(ts, e2, floor);
      if (cc.grad_slope > 1.95 && cc.grad_slope < 2.05 && cc.hess_slope > 2.9 &&
          cc.hess_slope < 3.1) {
        break;
      }
      d = random_direction(pair, rng);
    }
    const Direction d2 = random_direction(pair, rng);

    // the Riemannian gradient must lie in the horizontal space
    const Direction rgrad = riemannian_grad(ctx, pair);
    double resid = 0.0;
    if (pair.k() > 0) resid += (pair.B.transpose() * rgrad.B).norm();
    if (pair.p() > 0) resid += (pair.Atilde.transpose() * rgrad.Atilde).norm();
    cc.tangent_residual = resid / std::max(1.0, rgrad.norm());

    // Riemannian Hessian symmetry as a bilinear form on tangent vectors
    const Direction t1 = tangent_project(pair, d);
    const Direction t2 = tangent_project(pair, d2);
    const double lhs = riemannian_hess(ctx, pair, t1).dot(t2);
    const double rhs = riemannian_hess(ctx, pair, t2).dot(t1);
    cc.hess_symmetry = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));

    report.cases.push_back(cc);
  }

  report.grad_slope_min = report.grad_slope_max = report.cases.front().grad_slope;
  report.hess_slope_min = report.hess_slope_max = report.cases.front().hess_slope;
  for (const CheckCase& cc : report.cases) {
    report.grad_slope_min = std::min(report.grad_slope_min, cc.grad_slope);
    report.grad_slope_max = std::max(report.grad_slope_max, cc.grad_slope);
    report.hess_slope_min = std::min(report.hess_slope_min, cc.hess_slope);
    report.hess_slope_max = std::max(report.hess_slope_max, cc.hess_slope);
    report.tangent_residual_max = std::max(report.tangent_residual_max, cc.tangent_residual);
    report.hess_symmetry_max = std::max(report.hess_symmetry_max, cc.hess_symmetry);
  }
  return report;
}

}  // namespace hive

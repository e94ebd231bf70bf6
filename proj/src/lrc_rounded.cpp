#include "hive/lrc_rounded.hpp"

#include <algorithm>
#include <cmath>

#include "hive/rational_lp.hpp"

namespace hive {

namespace {

std::vector<ratlp::Constraint> to_constraints(const IneqSystem& sys) {
  std::vector<ratlp::Constraint> cons(sys.A.rows());
  for (int r = 0; r < sys.A.rows(); ++r) {
    for (int c = 0; c < sys.A.cols(); ++c) {
      if (sys.A(r, c) != 0.0) {
        cons[r].terms.emplace_back(c, ratlp::Rat(sys.A(r, c)));
      }
    }
    cons[r].rhs = ratlp::Rat(sys.b[r]);
  }
  return cons;
}

double ball_volume(int d, double r) {
  // V_d(r) = pi^(d/2) / Gamma(d/2 + 1) * r^d
  return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(r, d);
}

}  // namespace

IneqSystem IneqSystem::box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  const int d = static_cast<int>(lo.size());
  IneqSystem sys;
  sys.A = Eigen::MatrixXd::Zero(2 * d, d);
  sys.b = Eigen::VectorXd(2 * d);
  for (int c = 0; c < d; ++c) {
    sys.A(2 * c, c) = 1.0;
    sys.b[2 * c] = hi[c];
    sys.A(2 * c + 1, c) = -1.0;
    sys.b[2 * c + 1] = -lo[c];
  }
  return sys;
}

IneqSystem IneqSystem::from_polytope(const HivePolytope& poly, double dilation) {
  IneqSystem sys;
  sys.A = poly.dense_A();
  sys.b = poly.b().array() + dilation;
  return sys;
}

bool IneqSystem::contains(const Eigen::VectorXd& x, double tol) const {
  return ((A * x - b).array() <= tol).all();
}

HitAndRun::HitAndRun(const IneqSystem& sys, const Eigen::VectorXd& x0,
                     std::uint64_t seed)
    : sys_(sys), x_(x0), rng_(seed), dir_(sys.dim()) {
  if (!sys.contains(x0, -1e-12)) {
    throw StartNotInterior("hit-and-run start must be strictly interior");
  }
}

const Eigen::VectorXd& HitAndRun::step() {
  return step_in_ball(x_, std::numeric_limits<double>::infinity());
}

const Eigen::VectorXd& HitAndRun::step_in_ball(const Eigen::VectorXd& center,
                                               double radius) {
  const int d = sys_.dim();
  for (int c = 0; c < d; ++c) dir_[c] = rng_.gaussian();
  const double norm = dir_.norm();
  if (norm == 0.0) return x_;
  dir_ /= norm;

  // chord from exact ratio tests: a.(x + t u) <= b
  double tlo = -std::numeric_limits<double>::infinity();
  double thi = std::numeric_limits<double>::infinity();
  const Eigen::VectorXd au = sys_.A * dir_;
  const Eigen::VectorXd slack = sys_.b - sys_.A * x_;
  for (int r = 0; r < au.size(); ++r) {
    if (au[r] > 0.0) thi = std::min(thi, slack[r] / au[r]);
    else if (au[r] < 0.0) tlo = std::max(tlo, slack[r] / au[r]);
  }
  if (std::isfinite(radius)) {
    // |x + t u - center|^2 <= radius^2, with |u| = 1
    const Eigen::VectorXd w = x_ - center;
    const double bq = w.dot(dir_);
    const double cq = w.squaredNorm() - radius * radius;
    const double disc = bq * bq - cq;
    if (disc <= 0.0) return x_;  // numerically at the ball edge
    const double root = std::sqrt(disc);
    tlo = std::max(tlo, -bq - root);
    thi = std::min(thi, -bq + root);
  }
  if (!(thi > tlo)) return x_;
  const double t = tlo + (thi - tlo) * rng_.uniform();
  x_ += t * dir_;
  return x_;
}

std::pair<Eigen::VectorXd, double> chebyshev_center(const IneqSystem& sys) {
  // exact LP on rationalized data; double rhs/coefs convert exactly
  const auto result = ratlp::chebyshev_center(sys.dim(), to_constraints(sys));
  if (result.status == ratlp::Status::Infeasible) {
    throw EmptyPolytope("inequality system is infeasible");
  }
  Eigen::VectorXd center(sys.dim());
  for (int c = 0; c < sys.dim(); ++c) center[c] = result.center[c].get_d();
  return {center, result.radius.get_d()};
}

VolumeEstimate continuum_volume(const IneqSystem& sys, double rel_error,
                                std::uint64_t seed) {
  VolumeEstimate est;
  est.rel_error_target = rel_error;
  est.seed = seed;
  const int d = sys.dim();

  auto [center, r0] = chebyshev_center(sys);
  if (r0 <= 0.0) return est;  // empty interior: zero volume

  // bounded iff every coordinate range is finite
  const auto cons = to_constraints(sys);
  double rmax2 = 0.0;
  Eigen::VectorXd lo(d), hi(d);
  for (int c = 0; c < d; ++c) {
    std::vector<ratlp::Rat> obj(d, 0);
    obj[c] = 1;
    const auto up = ratlp::maximize(d, cons, obj);
    obj[c] = -1;
    const auto dn = ratlp::maximize(d, cons, obj);
    if (up.status != ratlp::Status::Optimal || dn.status != ratlp::Status::Optimal) {
      throw UnboundedPolytope("volume of an unbounded system");
    }
    hi[c] = up.objective.get_d();
    lo[c] = -dn.objective.get_d();
  }
  for (int c = 0; c < d; ++c) {
    const double span = std::max(std::abs(hi[c] - center[c]), std::abs(center[c] - lo[c]));
    rmax2 += span * span;
  }
  const double rmax = std::sqrt(rmax2);

  if (d == 0) {
    est.value = 1.0;
    return est;
  }

  // annealing radii r0 * 2^(i/d) until the ball swallows the polytope
  std::vector<double> radii;
  double r = r0;
  while (r < rmax) {
    radii.push_back(r);
    r *= std::pow(2.0, 1.0 / d);
  }
  radii.push_back(rmax);
  const int phases = static_cast<int>(radii.size()) - 1;

  double volume = ball_volume(d, r0);
  if (phases == 0) {
    est.value = volume;
    return est;
  }

  // per-phase sample budget for the total relative error target
  const long long n_per_phase = static_cast<long long>(
      std::ceil(8.0 * phases / (rel_error * rel_error)));
  const int thin = std::max(2, d / 2);

  for (int i = phases - 1; i >= 0; --i) {
    const double r_outer = radii[i + 1];
    const double r_inner = radii[i];
    // sample K_{i+1}, count the fraction landing in K_i
    long long hits = 0;
    HitAndRun walk(sys, center, derive_seed(seed, 23, static_cast<std::uint64_t>(i)));
    for (int b = 0; b < 20 * d; ++b) walk.step_in_ball(center, r_outer);
    for (long long s = 0; s < n_per_phase; ++s) {
      for (int t = 0; t < thin; ++t) walk.step_in_ball(center, r_outer);
      if ((walk.current() - center).norm() <= r_inner) ++hits;
    }
    est.samples_used += n_per_phase * thin;
    if (hits == 0) hits = 1;  // ratio is bounded by 2; guard the degenerate draw
    volume *= static_cast<double>(n_per_phase) / static_cast<double>(hits);
  }
  est.value = volume;
  return est;
}

RoundedLrcResult rounded_lrc(const WeightTriple& triple, double rel_error,
                             std::uint64_t seed, double dilation) {
  if (!triple.integral()) throw InvalidSpec("rounded_lrc requires an integer triple");
  RoundedLrcResult out;
  out.seed = seed;
  const HivePolytope poly(triple);
  const IneqSystem q = IneqSystem::from_polytope(poly, dilation);

  const VolumeEstimate vol = continuum_volume(q, rel_error, derive_seed(seed, 1));
  out.vol_q = vol.value;
  out.samples = vol.samples_used;
  if (vol.value <= 0.0) return out;

  // fraction of Q whose nearest-integer rounding lies in the hive lattice
  const Eigen::VectorXd center = chebyshev_center(q).first;
  HitAndRun walk(q, center, derive_seed(seed, 2));
  const int d = q.dim();
  const int thin = std::max(2, d / 2);
  for (int b = 0; b < 50 * d; ++b) walk.step();

  long long hits = 0, total = 0;
  std::vector<long long> rounded(d);
  const long long max_samples = 2000000;
  for (;;) {
    for (int t = 0; t < thin; ++t) walk.step();
    ++total;
    const Eigen::VectorXd& x = walk.current();
    for (int c = 0; c < d; ++c) rounded[c] = std::llround(x[c]);
    if (poly.feasible_int(rounded)) ++hits;
    if (total >= 400 && hits > 0) {
      const double f = static_cast<double>(hits) / static_cast<double>(total);
      const double half = 1.96 * std::sqrt(f * (1.0 - f) / static_cast<double>(total));
      if (half <= rel_error * f) break;
    }
    if (hits == 0 && total >= 50000) break;  // empty lattice: f = 0
    if (total >= max_samples) break;
  }
  out.samples += total * thin;
  out.f = static_cast<double>(hits) / static_cast<double>(total);
  out.estimate = out.f * out.vol_q;
  return out;
}

}  // namespace hive

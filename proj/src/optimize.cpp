#include "hive/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hive/stats_util.hpp"

namespace hive {

namespace {

int thread_budget(int requested, int items) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return std::min(n, std::max(1, items));
}

void parallel_for(int items, int threads, const std::function<void(int)>& fn) {
  const int nt = thread_budget(threads, items);
  if (nt <= 1) {
    for (int i = 0; i < items; ++i) fn(i);
    return;
  }
  std::atomic<int> next(0);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= items) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

struct RunResult {
  GrassmannPair point{Eigen::MatrixXd(), Eigen::MatrixXd()};
  double cost = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Steihaug-Toint truncated CG for the trust-region subproblem.
Direction truncated_cg(const CostContext& ctx, const GrassmannPair& pair,
                       const Direction& grad, double radius, int tangent_dim,
                       bool* hit_boundary) {
  *hit_boundary = false;
  Direction eta = Direction::zero(pair);
  Direction r = grad;
  Direction delta = r * -1.0;
  double r_dot = r.dot(r);
  const double r0_norm = std::sqrt(r_dot);
  const double kappa = 0.1, theta = 1.0;
  const int max_inner = std::max(1, 2 * tangent_dim);

  for (int inner = 0; inner < max_inner; ++inner) {
    const Direction h_delta = riemannian_hess(ctx, pair, delta);
    const double curvature = delta.dot(h_delta);
    const double alpha = r_dot / curvature;
    const double eta_dot_delta = eta.dot(delta);
    const double eta_norm2 = eta.dot(eta);
    const double delta_norm2 = delta.dot(delta);
    if (curvature <= 0.0 ||
        eta_norm2 + 2.0 * alpha * eta_dot_delta + alpha * alpha * delta_norm2 >=
            radius * radius) {
      // walk to the trust-region boundary along delta
      const double a = delta_norm2;
      const double b = 2.0 * eta_dot_delta;
      const double c = eta_norm2 - radius * radius;
      const double tau = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
      *hit_boundary = true;
      return eta + delta * tau;
    }
    eta = eta + delta * alpha;
    const Direction r_new = r + h_delta * alpha;
    const double r_new_dot = r_new.dot(r_new);
    if (std::sqrt(r_new_dot) <=
        r0_norm * std::min(kappa, std::pow(r0_norm, theta))) {
      return eta;
    }
    const double beta = r_new_dot / r_dot;
    delta = r_new * -1.0 + delta * beta;
    r = r_new;
    r_dot = r_new_dot;
  }
  return eta;
}

RunResult run_trust_region(const CostContext& ctx, GrassmannPair pair,
                           const OptimizerSettings& settings) {
  const int n = pair.n();
  const int tangent_dim =
      pair.k() * (n - pair.k()) + pair.p() * (n - pair.p());
  RunResult out;
  if (tangent_dim == 0) {
    out.point = pair;
    out.cost = cost(ctx, pair);
    out.converged = true;
    return out;
  }
  const double radius_max = std::sqrt(static_cast<double>(tangent_dim));
  double radius = radius_max / 8.0;

  double f = cost(ctx, pair);
  Direction grad = riemannian_grad(ctx, pair);
  double gnorm = grad.norm();

  int iter = 0;
  for (; iter < settings.max_iters; ++iter) {
    if (gnorm <= settings.grad_norm_tol) break;
    bool hit_boundary = false;
    const Direction eta =
        truncated_cg(ctx, pair, grad, radius, tangent_dim, &hit_boundary);
    const Direction h_eta = riemannian_hess(ctx, pair, eta);
    const double model_decrease = -(grad.dot(eta) + 0.5 * eta.dot(h_eta));

    const GrassmannPair candidate = retract(pair, eta);
    const double f_new = cost(ctx, candidate);
    const double rho =
        model_decrease > 0.0 ? (f - f_new) / model_decrease : -1.0;

    if (rho < 0.25) radius *= 0.25;
    else if (rho > 0.75 && hit_boundary) radius = std::min(2.0 * radius, radius_max);
    if (radius < 1e-14) break;

    if (rho > 0.1) {
      pair = candidate;
      f = f_new;
      grad = riemannian_grad(ctx, pair);
      gnorm = grad.norm();
    }
  }
  out.point = pair;
  out.cost = f;
  out.grad_norm = gnorm;
  out.converged = gnorm <= settings.grad_norm_tol;
  out.iterations = iter;
  return out;
}

RunResult run_gradient_descent(const CostContext& ctx, GrassmannPair pair,
                               const OptimizerSettings& settings) {
  const int n = pair.n();
  const int tangent_dim =
      pair.k() * (n - pair.k()) + pair.p() * (n - pair.p());
  RunResult out;
  if (tangent_dim == 0) {
    out.point = pair;
    out.cost = cost(ctx, pair);
    out.converged = true;
    return out;
  }
  double f = cost(ctx, pair);
  double step = 1.0;
  int iter = 0;
  Direction grad = riemannian_grad(ctx, pair);
  double gnorm = grad.norm();
  for (; iter < settings.max_iters; ++iter) {
    if (gnorm <= settings.grad_norm_tol) break;
    // Armijo backtracking along the retracted steepest descent
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      const GrassmannPair candidate = retract(pair, grad * (-step));
      const double f_new = cost(ctx, candidate);
      if (f_new <= f - 1e-4 * step * gnorm * gnorm) {
        pair = candidate;
        f = f_new;
        accepted = true;
        step *= 1.8;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    grad = riemannian_grad(ctx, pair);
    gnorm = grad.norm();
  }
  out.point = pair;
  out.cost = f;
  out.grad_norm = gnorm;
  out.converged = gnorm <= settings.grad_norm_tol;
  out.iterations = iter;
  return out;
}

}  // namespace

SubspaceDims subspace_dims(int n, int j, int k) {
  if (j < 0 || k < 0 || j + k > n) throw InvalidSpec("vertex outside the triangle");
  return {k, j};
}

CoefficientResult optimize_coefficient(const Eigen::MatrixXd& M,
                                       const Eigen::MatrixXd& N, int j, int k,
                                       const OptimizerSettings& settings,
                                       std::uint64_t seed, std::uint64_t salt) {
  const int n = static_cast<int>(M.rows());
  const auto dims = subspace_dims(n, j, k);
  const CostContext ctx(M, N, settings.cond_threshold);

  CoefficientResult result;
  bool have_value = false;
  for (int attempt = 0; attempt < std::max(1, settings.retries_per_coefficient);
       ++attempt) {
    ++result.attempts;
    const std::uint64_t attempt_seed = derive_seed(
        seed, static_cast<std::uint64_t>(j) << 20 | static_cast<std::uint64_t>(k),
        salt, static_cast<std::uint64_t>(attempt));
    GrassmannPair pair = GrassmannPair::random(n, dims.dim_u, dims.dim_p, attempt_seed);
    RunResult run;
    try {
      run = settings.method == OptMethod::TrustRegion
                ? run_trust_region(ctx, std::move(pair), settings)
                : run_gradient_descent(ctx, std::move(pair), settings);
    } catch (const HiveError&) {
      continue;  // degenerate attractor or numerical failure burns a retry
    }
    const double value = -run.cost;
    const bool better =
        !have_value || (run.converged && !result.converged) ||
        (run.converged == result.converged && value > result.value);
    if (better) {
      result.value = value;
      result.converged = run.converged;
      result.grad_norm = run.grad_norm;
      result.iterations = run.iterations;
      have_value = true;
    }
    if (run.converged) break;  // restarts are for non-convergence only
  }
  return result;
}

GenerateResult generate_hive(const MatrixPair& pair, const OptimizerSettings& settings,
                             std::uint64_t seed) {
  WeightTriple triple = triple_from_pair(pair);
  Hive hive = build_boundary(triple);
  const auto verts = interior_vertices(triple.n());

  std::vector<CoefficientDiagnostic> diags(verts.size());
  auto optimize_vertex = [&](size_t t, std::uint64_t salt) {
    const Vertex v = verts[t];
    CoefficientDiagnostic d;
    d.j = v.j;
    d.k = v.k;
    d.result = optimize_coefficient(pair.M, pair.N, v.j, v.k, settings, seed, salt);
    // every evaluated value lower-bounds the true maximum, so on retry passes
    // a smaller re-optimized value never replaces a larger one
    if (salt == 0 || d.result.value > diags[t].result.value) {
      diags[t] = d;
      hive(v.j, v.k) = d.result.value;
    }
  };

  parallel_for(static_cast<int>(verts.size()), settings.threads,
               [&](int t) { optimize_vertex(static_cast<size_t>(t), 0); });

  ValidationReport report = validate_hive(hive);
  int passes = 1;
  for (int pass = 1; pass < std::max(1, settings.retries_per_hive) && !report.is_hive;
       ++pass) {
    // re-optimize every interior coefficient named by a failing rhombus
    std::vector<int> redo;
    for (const Deficiency& d : report.deficiencies) {
      const Vertex* quad[4] = {&d.rhombus.acute[0], &d.rhombus.acute[1],
                               &d.rhombus.obtuse[0], &d.rhombus.obtuse[1]};
      for (const Vertex* v : quad) {
        for (size_t t = 0; t < verts.size(); ++t) {
          if (verts[t] == *v) redo.push_back(static_cast<int>(t));
        }
      }
    }
    std::sort(redo.begin(), redo.end());
    redo.erase(std::unique(redo.begin(), redo.end()), redo.end());
    if (redo.empty()) break;
    parallel_for(static_cast<int>(redo.size()), settings.threads, [&](int i) {
      optimize_vertex(static_cast<size_t>(redo[i]),
                      static_cast<std::uint64_t>(pass));
    });
    report = validate_hive(hive);
    passes = pass + 1;
  }
  return GenerateResult{triple, hive, report, std::move(diags), passes};
}

ProbabilityResult summarize_trials(const std::vector<bool>& outcomes,
                                   const std::vector<std::uint64_t>& seeds) {
  if (outcomes.empty()) throw InvalidSpec("trials must be >= 1");
  ProbabilityResult out;
  out.trials = static_cast<long long>(outcomes.size());
  for (bool b : outcomes) out.successes += b ? 1 : 0;
  out.p_hat = static_cast<double>(out.successes) / static_cast<double>(out.trials);
  std::tie(out.ci_low, out.ci_high) = clopper_pearson(out.successes, out.trials);
  out.trial_seeds = seeds;
  return out;
}

ProbabilityResult success_probability(const EnsembleSpec& spec, Pairing pairing,
                                      int trials, const OptimizerSettings& settings) {
  if (trials < 1) throw InvalidSpec("trials must be >= 1");
  std::vector<bool> outcomes(trials);
  std::vector<std::uint64_t> seeds(trials);
  OptimizerSettings inner = settings;
  inner.threads = 1;  // parallelism is across trials here
  parallel_for(trials, settings.threads, [&](int t) {
    EnsembleSpec s = spec;
    s.seed = derive_seed(spec.seed, 0x7472, static_cast<std::uint64_t>(t));
    seeds[t] = s.seed;
    try {
      const MatrixPair pair = sample(s, pairing);
      const GenerateResult gen = generate_hive(pair, inner, derive_seed(s.seed, 0x6f));
      outcomes[t] = gen.report.is_hive;
    } catch (const HiveError&) {
      outcomes[t] = false;  // a pair that cannot be processed yields no hive
    }
  });
  return summarize_trials(outcomes, seeds);
}

}  // namespace hive

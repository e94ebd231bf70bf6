#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hive/ensembles.hpp"
#include "hive/grassmann.hpp"
#include "hive/rhombus.hpp"

namespace hive {

enum class OptMethod { TrustRegion, GradientDescent };

struct OptimizerSettings {
  OptMethod method = OptMethod::TrustRegion;
  double grad_norm_tol = 1e-7;
  int max_iters = 500;
  int retries_per_coefficient = 5;
  int retries_per_hive = 5;
  double cond_threshold = 1e12;
  int threads = 0;  // 0: hardware concurrency (HIVE_THREADS caps at the CLI)
};

/**
 * Subspace dimensions of the trace maximization at vertex (j,k):
 * dim U = k and dim V = j + k, the assignment fixed by requiring the
 * optimizer to reproduce the cumulative-sum boundary on all three edges.
 */
struct SubspaceDims {
  int dim_u = 0;  // columns of B
  int dim_p = 0;  // columns of Atilde = dim V - dim U
};
SubspaceDims subspace_dims(int n, int j, int k);

struct CoefficientResult {
  double value = 0.0;
  bool converged = false;
  double grad_norm = 0.0;
  int attempts = 0;
  int iterations = 0;  // of the accepted attempt
};

/**
 * Maximize tr(M|_V) + tr(N|_U) over the flag pairs of vertex (j,k) by
 * Riemannian descent on the Grassmannian product; restarts from fresh random
 * points up to retries_per_coefficient times and keeps the best converged
 * value. Never throws on non-convergence: converged=false reports it.
 */
CoefficientResult optimize_coefficient(const Eigen::MatrixXd& M,
                                       const Eigen::MatrixXd& N, int j, int k,
                                       const OptimizerSettings& settings,
                                       std::uint64_t seed, std::uint64_t salt = 0);

struct CoefficientDiagnostic {
  int j = 0, k = 0;
  CoefficientResult result;
};

struct GenerateResult {
  WeightTriple triple;
  Hive hive;
  ValidationReport report;
  std::vector<CoefficientDiagnostic> diagnostics;
  int passes = 1;  // whole-hive optimization passes used
};

/**
 * Full hive generation: boundary from the pair's spectra, every interior
 * coefficient optimized, deficient coefficients re-optimized for up to
 * retries_per_hive whole-hive passes. A final failing report is data, not an
 * error.
 */
GenerateResult generate_hive(const MatrixPair& pair, const OptimizerSettings& settings,
                             std::uint64_t seed);

struct ProbabilityResult {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  long long successes = 0;
  long long trials = 0;
  std::vector<std::uint64_t> trial_seeds;
};

/** Clopper-Pearson aggregation of per-trial outcomes. */
ProbabilityResult summarize_trials(const std::vector<bool>& outcomes,
                                   const std::vector<std::uint64_t>& seeds);

/**
 * Hive-success probability of an ensemble: `trials` independent pairs, each
 * run through generate_hive; per-trial seeds are derived from spec.seed and
 * logged in the result.
 */
ProbabilityResult success_probability(const EnsembleSpec& spec, Pairing pairing,
                                      int trials, const OptimizerSettings& settings);

}  // namespace hive

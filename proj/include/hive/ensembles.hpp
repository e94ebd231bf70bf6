#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "hive/weights.hpp"

namespace hive {

enum class EnsembleKind {
  GOE,
  SPD_NORMAL,
  SPD_DIAG_DOMINANT,
  SORTED_INT_DIAG,
  FLIPPED_INT_DIAG,
};

EnsembleKind parse_ensemble(const std::string& name);
std::string to_string(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GOE;
  int n = 2;
  long long int_low = 1;   // diagonal kinds only
  long long int_high = 50;
  std::uint64_t seed = 0;
};

enum class Pairing { Identical, Independent };

struct MatrixPair {
  Eigen::MatrixXd M;
  Eigen::MatrixXd N;
  Eigen::MatrixXd L;  // M + N
  Pairing pairing = Pairing::Independent;
};

struct Spectrum {
  Eigen::VectorXd values;  // weakly decreasing
};

/**
 * Draw a matrix pair. Deterministic given spec.seed. Identical pairing sets
 * N = M elementwise (for FLIPPED_INT_DIAG, identical pairing pairs the
 * flipped matrix with its unflipped sorted counterpart, which is the
 * configuration the flipped ensemble exists to study).
 */
MatrixPair sample(const EnsembleSpec& spec, Pairing pairing);

/**
 * Descending eigenvalues of a symmetric matrix. Throws NotSymmetric when the
 * input is asymmetric beyond 1e-10 and EigenFailure when the reconstruction
 * residual exceeds 1e-8 * ||M||.
 */
Spectrum spectrum(const Eigen::MatrixXd& M);

/** (spectrum(M), spectrum(N), spectrum(M+N)); saturation holds by trace additivity. */
WeightTriple triple_from_pair(const MatrixPair& pair);

}  // namespace hive

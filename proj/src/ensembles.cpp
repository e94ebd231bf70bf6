#include "hive/ensembles.hpp"

#include <algorithm>
#include <cmath>

#include "hive/rng.hpp"

namespace hive {

EnsembleKind parse_ensemble(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(c)));
  if (s == "GOE") return EnsembleKind::GOE;
  if (s == "SPD" || s == "SPD_NORMAL") return EnsembleKind::SPD_NORMAL;
  if (s == "SPD_DD" || s == "SPD_DIAG_DOMINANT") return EnsembleKind::SPD_DIAG_DOMINANT;
  if (s == "SID" || s == "SORTED_INT_DIAG") return EnsembleKind::SORTED_INT_DIAG;
  if (s == "FID" || s == "FLIPPED_INT_DIAG") return EnsembleKind::FLIPPED_INT_DIAG;
  throw InvalidSpec("unknown ensemble: " + name);
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::GOE: return "GOE";
    case EnsembleKind::SPD_NORMAL: return "SPD_NORMAL";
    case EnsembleKind::SPD_DIAG_DOMINANT: return "SPD_DIAG_DOMINANT";
    case EnsembleKind::SORTED_INT_DIAG: return "SORTED_INT_DIAG";
    case EnsembleKind::FLIPPED_INT_DIAG: return "FLIPPED_INT_DIAG";
  }
  return "?";
}

namespace {

Eigen::MatrixXd goe(int n, Xoshiro256& rng) {
  // off-diagonal N(0,1), diagonal N(0,2)
  Eigen::MatrixXd M(n, n);
  const double sqrt2 = std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    M(i, i) = sqrt2 * rng.gaussian();
    for (int j = i + 1; j < n; ++j) {
      M(i, j) = rng.gaussian();
      M(j, i) = M(i, j);
    }
  }
  return M;
}

Eigen::MatrixXd spd_normal(int n, Xoshiro256& rng) {
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G(i, j) = rng.gaussian();
  }
  return (G * G.transpose()) / static_cast<double>(n);
}

Eigen::MatrixXd spd_diag_dominant(int n, Xoshiro256& rng) {
  Eigen::MatrixXd M = spd_normal(n, rng);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) off += std::abs(M(i, j));
    }
    M(i, i) += off + 1.0;
  }
  return M;
}

Eigen::MatrixXd sorted_int_diag(const EnsembleSpec& spec, Xoshiro256& rng) {
  std::vector<long long> d(spec.n);
  for (auto& v : d) v = rng.uniform_int(spec.int_low, spec.int_high);
  std::sort(d.begin(), d.end(), std::greater<>());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) M(i, i) = static_cast<double>(d[i]);
  return M;
}

Eigen::MatrixXd flip_ends(Eigen::MatrixXd M) {
  const int n = static_cast<int>(M.rows());
  std::swap(M(0, 0), M(n - 1, n - 1));
  return M;
}

Eigen::MatrixXd draw(const EnsembleSpec& spec, Xoshiro256& rng, bool flip) {
  switch (spec.kind) {
    case EnsembleKind::GOE: return goe(spec.n, rng);
    case EnsembleKind::SPD_NORMAL: return spd_normal(spec.n, rng);
    case EnsembleKind::SPD_DIAG_DOMINANT: return spd_diag_dominant(spec.n, rng);
    case EnsembleKind::SORTED_INT_DIAG: return sorted_int_diag(spec, rng);
    case EnsembleKind::FLIPPED_INT_DIAG: {
      Eigen::MatrixXd M = sorted_int_diag(spec, rng);
      return flip ? flip_ends(M) : M;
    }
  }
  throw InvalidSpec("unhandled ensemble kind");
}

}  // namespace

MatrixPair sample(const EnsembleSpec& spec, Pairing pairing) {
  if (spec.n < 2) throw InvalidSpec("ensemble dimension must be >= 2");
  if (spec.int_low > spec.int_high) throw InvalidSpec("int_low > int_high");

  MatrixPair pair;
  pair.pairing = pairing;
  // Only the first matrix of a flipped pair is flipped.
  Xoshiro256 rng_m(derive_seed(spec.seed, 0x4d));
  pair.M = draw(spec, rng_m, /*flip=*/true);
  if (pairing == Pairing::Identical) {
    if (spec.kind == EnsembleKind::FLIPPED_INT_DIAG) {
      Xoshiro256 rng_same(derive_seed(spec.seed, 0x4d));
      pair.N = draw(spec, rng_same, /*flip=*/false);
    } else {
      pair.N = pair.M;
    }
  } else {
    Xoshiro256 rng_n(derive_seed(spec.seed, 0x4e));
    pair.N = draw(spec, rng_n, /*flip=*/false);
  }
  pair.L = pair.M + pair.N;
  return pair;
}

Spectrum spectrum(const Eigen::MatrixXd& M) {
  const double scale = std::max(1.0, M.norm());
  if ((M - M.transpose()).norm() > 1e-10 * scale) {
    throw NotSymmetric("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) throw EigenFailure("eigendecomposition failed");
  const Eigen::MatrixXd recon = solver.eigenvectors() *
                                solver.eigenvalues().asDiagonal() *
                                solver.eigenvectors().transpose();
  if ((M - recon).norm() > 1e-8 * scale) {
    throw EigenFailure("eigendecomposition residual too large");
  }
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  return s;
}

WeightTriple triple_from_pair(const MatrixPair& pair) {
  return WeightTriple(spectrum(pair.M).values, spectrum(pair.N).values,
                      spectrum(pair.L).values, 1e-8);
}

}  // namespace hive

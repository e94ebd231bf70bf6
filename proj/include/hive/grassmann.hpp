#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "hive/errors.hpp"
#include "hive/rng.hpp"

namespace hive {

/**
 * A point on the product of two Grassmannians: span(B) is the contained
 * subspace U (k columns) and span([B | Atilde]) is V (k + p columns). Both
 * blocks keep orthonormal columns; the joint matrix A = [B | Atilde] must be
 * full column rank for the projector onto V to exist.
 */
struct GrassmannPair {
  Eigen::MatrixXd B;       // n x k
  Eigen::MatrixXd Atilde;  // n x p

  int n() const { return static_cast<int>(B.rows()); }
  int k() const { return static_cast<int>(B.cols()); }
  int p() const { return static_cast<int>(Atilde.cols()); }

  /** Random point: Gaussian entries, orthonormalized per block. */
  static GrassmannPair random(int n, int k, int p, std::uint64_t seed);
};

/** A tangent-like direction (same shapes as the pair). */
struct Direction {
  Eigen::MatrixXd B;
  Eigen::MatrixXd Atilde;

  double dot(const Direction& other) const;
  double norm() const { return std::sqrt(dot(*this)); }
  Direction operator+(const Direction&) const;
  Direction operator-(const Direction&) const;
  Direction operator*(double s) const;
  static Direction zero(const GrassmannPair& at);
};

/**
 * Shared per-point cache: the symmetric inverse X = (A^T A)^{-1} with its
 * blocks, Y = (B^T B)^{-1}, and the two projectors. Construction throws
 * IllConditionedJointMatrix when cond(A^T A) exceeds the guard threshold.
 */
class CostContext {
 public:
  CostContext(Eigen::MatrixXd M, Eigen::MatrixXd N,
              double cond_threshold = 1e12);

  const Eigen::MatrixXd& M() const { return M_; }
  const Eigen::MatrixXd& N() const { return N_; }
  int n() const { return static_cast<int>(M_.rows()); }
  double cond_threshold() const { return cond_threshold_; }

  struct Eval {
    Eigen::MatrixXd A;    // [B | Atilde]
    Eigen::MatrixXd X;    // (A^T A)^{-1}
    Eigen::MatrixXd Y;    // (B^T B)^{-1}
    Eigen::MatrixXd piV;  // A X A^T
    Eigen::MatrixXd piU;  // B Y B^T
    Eigen::MatrixXd MAX;  // M A X
    Eigen::MatrixXd NBY;  // N B Y
    double cost = 0.0;
  };

  Eval evaluate(const GrassmannPair& pair) const;

 private:
  Eigen::MatrixXd M_, N_;
  double cond_threshold_;
};

/** cost = -(tr(piV M piV) + tr(piU N piU)); depends only on the two spans. */
double cost(const CostContext& ctx, const GrassmannPair& pair);

/** Euclidean (ambient) gradient of the cost with respect to (B, Atilde). */
Direction euclid_grad(const CostContext& ctx, const GrassmannPair& pair);

/** Euclidean Hessian applied to an ambient direction (exact linearization). */
Direction euclid_hess(const CostContext& ctx, const GrassmannPair& pair,
                      const Direction& dir);

/** Orthogonal projection onto the product horizontal space: B^T d_B = 0 etc. */
Direction tangent_project(const GrassmannPair& pair, const Direction& dir);

/** QR retraction; restores orthonormal columns exactly. */
GrassmannPair retract(const GrassmannPair& pair, const Direction& dir);

/** Riemannian gradient: tangent projection of the Euclidean gradient. */
Direction riemannian_grad(const CostContext& ctx, const GrassmannPair& pair);

/**
 * Riemannian Hessian along a tangent direction:
 * proj(ehess[d] - d * (Q^T egrad)) per Grassmann factor.
 */
Direction riemannian_hess(const CostContext& ctx, const GrassmannPair& pair,
                          const Direction& dir);

}  // namespace hive

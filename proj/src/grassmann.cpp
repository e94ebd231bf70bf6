#include "hive/grassmann.hpp"

namespace hive {

namespace {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& G) {
  if (G.cols() == 0) return G;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(G.rows(), G.cols());
  // fix signs so the factorization is unique (R diagonal positive)
  const Eigen::MatrixXd R = qr.matrixQR().topRows(G.cols()).triangularView<Eigen::Upper>();
  for (int c = 0; c < G.cols(); ++c) {
    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
  }
  return Q;
}

Eigen::MatrixXd symmetric_inverse(const Eigen::MatrixXd& S, double cond_threshold,
                                  const char* what) {
  if (S.cols() == 0) return S;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.info() != Eigen::Success) throw EigenFailure("inverse eigensolve failed");
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0 || hi / lo > cond_threshold) {
    throw IllConditionedJointMatrix(what);
  }
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

GrassmannPair GrassmannPair::random(int n, int k, int p, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  Eigen::MatrixXd B(n, k), At(n, p);
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < n; ++r) B(r, c) = rng.gaussian();
  }
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < n; ++r) At(r, c) = rng.gaussian();
  }
  return {orthonormalize(B), orthonormalize(At)};
}

double Direction::dot(const Direction& other) const {
  double s = 0.0;
  if (B.size() > 0) s += (B.array() * other.B.array()).sum();
  if (Atilde.size() > 0) s += (Atilde.array() * other.Atilde.array()).sum();
  return s;
}

Direction Direction::operator+(const Direction& o) const { return {B + o.B, Atilde + o.Atilde}; }
Direction Direction::operator-(const Direction& o) const { return {B - o.B, Atilde - o.Atilde}; }
Direction Direction::operator*(double s) const { return {B * s, Atilde * s}; }

Direction Direction::zero(const GrassmannPair& at) {
  return {Eigen::MatrixXd::Zero(at.n(), at.k()), Eigen::MatrixXd::Zero(at.n(), at.p())};
}

CostContext::CostContext(Eigen::MatrixXd M, Eigen::MatrixXd N, double cond_threshold)
    : M_(std::move(M)), N_(std::move(N)), cond_threshold_(cond_threshold) {
  if (M_.rows() != M_.cols() || N_.rows() != N_.cols() || M_.rows() != N_.rows()) {
    throw LengthMismatch("cost matrices must be square and equally sized");
  }
}

CostContext::Eval CostContext::evaluate(const GrassmannPair& pair) const {
  const int n = pair.n();
  Eval ev;
  ev.A.resize(n, pair.k() + pair.p());
  ev.A << pair.B, pair.Atilde;
  ev.X = symmetric_inverse(ev.A.transpose() * ev.A, cond_threshold_,
                           "joint matrix [B | Atilde] is nearly rank deficient");
  ev.Y = symmetric_inverse(pair.B.transpose() * pair.B, cond_threshold_,
                           "B is nearly rank deficient");
  ev.piV = ev.A * ev.X * ev.A.transpose();
  ev.piU = pair.B * ev.Y * pair.B.transpose();
  ev.MAX = M_ * ev.A * ev.X;
  ev.NBY = N_ * pair.B * ev.Y;
  double f = 0.0, g = 0.0;
  if (ev.A.cols() > 0) f = (M_ * ev.piV).trace();
  if (pair.k() > 0) g = (N_ * ev.piU).trace();
  ev.cost = -(f + g);
  return ev;
}

double cost(const CostContext& ctx, const GrassmannPair& pair) {
  return ctx.evaluate(pair).cost;
}

Direction euclid_grad(const CostContext& ctx, const GrassmannPair& pair) {
  const auto ev = ctx.evaluate(pair);
  const int k = pair.k();
  const int p = pair.p();
  Direction grad = Direction::zero(pair);
  if (k + p > 0) {
    // d f / d A = 2 (I - piV) M A X; the B and Atilde blocks are its columns
    const Eigen::MatrixXd GA = 2.0 * (ev.MAX - ev.piV * ev.MAX);
    grad.B = -GA.leftCols(k);
    grad.Atilde = -GA.rightCols(p);
  }
  if (k > 0) {
    // d g / d B = 2 (I - piU) N B Y
    const Eigen::MatrixXd GB = 2.0 * (ev.NBY - ev.piU * ev.NBY);
    grad.B -= GB;
  }
  return grad;
}

Direction euclid_hess(const CostContext& ctx, const GrassmannPair& pair,
                      const Direction& dir) {
  const auto ev = ctx.evaluate(pair);
  const int k = pair.k();
  const int p = pair.p();
  Direction hess = Direction::zero(pair);

  if (k + p > 0) {
    Eigen::MatrixXd dA(pair.n(), k + p);
    dA << dir.B, dir.Atilde;
    const Eigen::MatrixXd dX =
        -ev.X * (dA.transpose() * ev.A + ev.A.transpose() * dA) * ev.X;
    const Eigen::MatrixXd dpiV = dA * ev.X * ev.A.transpose() +
                                 ev.A * dX * ev.A.transpose() +
                                 ev.A * ev.X * dA.transpose();
    const Eigen::MatrixXd term = ctx.M() * (dA * ev.X + ev.A * dX);
    const Eigen::MatrixXd HA =
        2.0 * (-dpiV * ev.MAX + term - ev.piV * term);
    hess.B = -HA.leftCols(k);
    hess.Atilde = -HA.rightCols(p);
  }
  if (k > 0) {
    const Eigen::MatrixXd dY =
        -ev.Y * (dir.B.transpose() * pair.B + pair.B.transpose() * dir.B) * ev.Y;
    const Eigen::MatrixXd dpiU = dir.B * ev.Y * pair.B.transpose() +
                                 pair.B * dY * pair.B.transpose() +
                                 pair.B * ev.Y * dir.B.transpose();
    const Eigen::MatrixXd term = ctx.N() * (dir.B * ev.Y + pair.B * dY);
    const Eigen::MatrixXd HB =
        2.0 * (-dpiU * ev.NBY + term - ev.piU * term);
    hess.B -= HB;
  }
  return hess;
}

Direction tangent_project(const GrassmannPair& pair, const Direction& dir) {
  Direction out = dir;
  if (pair.k() > 0) out.B = dir.B - pair.B * (pair.B.transpose() * dir.B);
  if (pair.p() > 0) {
    out.Atilde = dir.Atilde - pair.Atilde * (pair.Atilde.transpose() * dir.Atilde);
  }
  return out;
}

GrassmannPair retract(const GrassmannPair& pair, const Direction& dir) {
  return {orthonormalize(pair.B + dir.B), orthonormalize(pair.Atilde + dir.Atilde)};
}

Direction riemannian_grad(const CostContext& ctx, const GrassmannPair& pair) {
  return tangent_project(pair, euclid_grad(ctx, pair));
}

Direction riemannian_hess(const CostContext& ctx, const GrassmannPair& pair,
                          const Direction& dir) {
  const Direction egrad = euclid_grad(ctx, pair);
  Direction h = euclid_hess(ctx, pair, dir);
  if (pair.k() > 0) h.B -= dir.B * (pair.B.transpose() * egrad.B);
  if (pair.p() > 0) {
    h.Atilde -= dir.Atilde * (pair.Atilde.transpose() * egrad.Atilde);
  }
  return tangent_project(pair, h);
}

}  // namespace hive

#include "hive/weights.hpp"

#include <cmath>
#include <cstdlib>

namespace hive {

namespace {

bool entries_integral(const Eigen::VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= 9.007199254740992e15) return false;  // 2^53
    if (v[i] != std::llround(v[i])) return false;
  }
  return true;
}

std::vector<long long> to_ints(const Eigen::VectorXd& v) {
  std::vector<long long> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = std::llround(v[i]);
  return out;
}

Eigen::VectorXd from_ints_vec(const std::vector<long long>& v) {
  Eigen::VectorXd out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<int>(i)] = static_cast<double>(v[i]);
  return out;
}

}  // namespace

bool is_weakly_decreasing(const Eigen::VectorXd& v, double tol) {
  for (int i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i] + tol) return false;
  }
  return true;
}

bool check_saturation(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu,
                      const Eigen::VectorXd& lambda, double tol) {
  if (mu.size() != nu.size() || mu.size() != lambda.size()) {
    throw LengthMismatch("weight vectors must have equal length");
  }
  if (!is_weakly_decreasing(mu) || !is_weakly_decreasing(nu) ||
      !is_weakly_decreasing(lambda)) {
    throw NotWeaklyDecreasing("weight vectors must be weakly decreasing");
  }
  if (entries_integral(mu) && entries_integral(nu) && entries_integral(lambda)) {
    long long s = 0;
    for (long long v : to_ints(mu)) s += v;
    for (long long v : to_ints(nu)) s += v;
    for (long long v : to_ints(lambda)) s -= v;
    return s == 0;
  }
  const double sum = mu.sum() + nu.sum();
  const double scale = std::max({1.0, std::abs(sum), std::abs(lambda.sum())});
  return std::abs(sum - lambda.sum()) <= tol * scale;
}

WeightTriple::WeightTriple(Eigen::VectorXd mu, Eigen::VectorXd nu,
                           Eigen::VectorXd lambda, double tol)
    : mu_(std::move(mu)), nu_(std::move(nu)), lambda_(std::move(lambda)) {
  if (mu_.size() == 0) throw LengthMismatch("empty weight vectors");
  if (!check_saturation(mu_, nu_, lambda_, tol)) {
    throw SaturationViolated("sum(mu)+sum(nu) != sum(lambda)");
  }
  integral_ = entries_integral(mu_) && entries_integral(nu_) && entries_integral(lambda_);
}

WeightTriple WeightTriple::from_ints(const std::vector<long long>& mu,
                                     const std::vector<long long>& nu,
                                     const std::vector<long long>& lambda) {
  return WeightTriple(from_ints_vec(mu), from_ints_vec(nu), from_ints_vec(lambda));
}

std::vector<long long> WeightTriple::mu_int() const { return to_ints(mu_); }
std::vector<long long> WeightTriple::nu_int() const { return to_ints(nu_); }
std::vector<long long> WeightTriple::lambda_int() const { return to_ints(lambda_); }

WeightTriple WeightTriple::scaled(long long m) const {
  const double f = static_cast<double>(m);
  return WeightTriple(mu_ * f, nu_ * f, lambda_ * f);
}

}  // namespace hive

#include "hive/hive.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace hive {

namespace {
constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
}

std::vector<Vertex> interior_vertices(int n) {
  std::vector<Vertex> out;
  out.reserve(interior_count(n));
  for (int j = 1; j < n; ++j) {
    for (int k = 1; j + k <= n - 1; ++k) out.push_back({j, k});
  }
  return out;
}

Hive::Hive(int n, HiveMode mode) : n_(n), mode_(mode), values_(vertex_count(n)) {
  if (n < 1) throw InvalidSpec("hive side length must be >= 1");
  values_.setConstant(kUnset);
}

bool Hive::complete() const {
  for (int i = 0; i < values_.size(); ++i) {
    if (std::isnan(values_[i])) return false;
  }
  return true;
}

Eigen::VectorXd Hive::interior() const {
  const auto verts = interior_vertices(n_);
  Eigen::VectorXd x(static_cast<int>(verts.size()));
  for (size_t t = 0; t < verts.size(); ++t) {
    const double v = at(verts[t]);
    if (std::isnan(v)) throw IncompleteHive("interior vertex unset");
    x[static_cast<int>(t)] = v;
  }
  return x;
}

void Hive::set_interior(const Eigen::VectorXd& x) {
  const auto verts = interior_vertices(n_);
  if (x.size() != static_cast<int>(verts.size())) {
    throw LengthMismatch("interior vector size mismatch");
  }
  for (size_t t = 0; t < verts.size(); ++t) {
    (*this)(verts[t].j, verts[t].k) = x[static_cast<int>(t)];
  }
}

double boundary_value(const WeightTriple& triple, int j, int k) {
  const int n = triple.n();
  if (!is_boundary(n, j, k)) throw InvalidSpec("not a boundary vertex");
  if (k == 0) return triple.mu().head(j).sum();
  if (j + k == n) return triple.mu().sum() + triple.nu().head(k).sum();
  return triple.lambda().head(k).sum();
}

Hive build_boundary(const WeightTriple& triple) {
  const int n = triple.n();
  Hive h(n, triple.integral() ? HiveMode::Integer : HiveMode::Real);
  for (int j = 0; j <= n; ++j) h(j, 0) = triple.mu().head(j).sum();
  for (int k = 0; k <= n; ++k) h(0, k) = triple.lambda().head(k).sum();
  for (int k = 1; k <= n; ++k) {
    h(n - k, k) = triple.mu().sum() + triple.nu().head(k).sum();
  }
  return h;
}

Hive embed(const WeightTriple& triple, const Eigen::VectorXd& x) {
  Hive h = build_boundary(triple);
  h.set_interior(x);
  return h;
}

std::string Hive::to_json(const WeightTriple& triple) const {
  nlohmann::json j;
  j["n"] = n_;
  j["mu"] = std::vector<double>(triple.mu().begin(), triple.mu().end());
  j["nu"] = std::vector<double>(triple.nu().begin(), triple.nu().end());
  j["lambda"] = std::vector<double>(triple.lambda().begin(), triple.lambda().end());
  const Eigen::VectorXd x = interior();
  j["interior"] = std::vector<double>(x.begin(), x.end());
  return j.dump();
}

std::pair<Hive, WeightTriple> Hive::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  auto vec = [](const nlohmann::json& a) {
    Eigen::VectorXd v(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i].get<double>();
    return v;
  };
  WeightTriple triple(vec(j.at("mu")), vec(j.at("nu")), vec(j.at("lambda")));
  if (triple.n() != j.at("n").get<int>()) throw LengthMismatch("n mismatch in hive json");
  return {embed(triple, vec(j.at("interior"))), triple};
}

void Hive::write_csv(std::ostream& os) const {
  os << "j,k,value\n";
  for (int j = 0; j <= n_; ++j) {
    for (int k = 0; j + k <= n_; ++k) {
      os << j << ',' << k << ',' << (*this)(j, k) << '\n';
    }
  }
}

}  // namespace hive

#include "hive/polytope.hpp"

#include <cassert>
#include <cmath>
#include <map>

namespace hive {

HivePolytope::HivePolytope(const WeightTriple& triple)
    : n_(triple.n()), integral_(triple.integral()), triple_(triple) {
  coords_ = interior_vertices(n_);
  dim_ = static_cast<int>(coords_.size());
  std::map<Vertex, int> index;
  for (int t = 0; t < dim_; ++t) index[coords_[t]] = t;

  if (n_ >= 2) {
    for (const Rhombus& r : enumerate_rhombi(n_)) {
      PolytopeRow row;
      row.source = r;
      double b = 0.0;
      auto add = [&](const Vertex& v, int coef) {
        auto it = index.find(v);
        if (it != index.end()) {
          // merge duplicates defensively; never happens for distinct vertices
          row.cols[row.size] = it->second;
          row.coefs[row.size] = coef;
          ++row.size;
        } else {
          b -= coef * boundary_value(triple_, v.j, v.k);
        }
      };
      add(r.acute[0], +1);
      add(r.acute[1], +1);
      add(r.obtuse[0], -1);
      add(r.obtuse[1], -1);
      row.b = b;
      if (integral_) row.b_int = std::llround(b);
      assert(row.size <= 4);
      rows_.push_back(row);
    }
  }

  rows_by_coord_.assign(dim_, {});
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (int t = 0; t < rows_[r].size; ++t) {
      rows_by_coord_[rows_[r].cols[t]].push_back(static_cast<int>(r));
    }
  }
}

HivePolytope assemble_polytope(const WeightTriple& triple) {
  return HivePolytope(triple);
}

Eigen::MatrixXd HivePolytope::dense_A() const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<int>(rows_.size()), dim_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (int t = 0; t < rows_[r].size; ++t) {
      A(static_cast<int>(r), rows_[r].cols[t]) = rows_[r].coefs[t];
    }
  }
  return A;
}

Eigen::VectorXd HivePolytope::b() const {
  Eigen::VectorXd out(static_cast<int>(rows_.size()));
  for (size_t r = 0; r < rows_.size(); ++r) out[static_cast<int>(r)] = rows_[r].b;
  return out;
}

bool HivePolytope::feasible(const Eigen::VectorXd& x, double tol, double level) const {
  for (const PolytopeRow& row : rows_) {
    if (row.dot(x) > row.b + level + tol) return false;
  }
  return true;
}

bool HivePolytope::feasible_int(const std::vector<long long>& x, long long level) const {
  for (const PolytopeRow& row : rows_) {
    if (row.dot_int(x) > row.b_int + level) return false;
  }
  return true;
}

}  // namespace hive

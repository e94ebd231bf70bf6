#include "hive/surface.hpp"

#include <cmath>

namespace hive {

namespace {

using Vec3 = Eigen::Vector3d;

Vec3 lift(const HiveSurface& s, int v) {
  return {s.positions(v, 0), s.positions(v, 1), s.heights[v]};
}

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

}  // namespace

Eigen::Matrix<double, Eigen::Dynamic, 2> placement(int n) {
  if (n < 1) throw InvalidSpec("placement requires n >= 1");
  Eigen::Matrix<double, Eigen::Dynamic, 2> pos(vertex_count(n), 2);
  const double h = std::sqrt(3.0) / 2.0;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      const int id = vertex_id(n, j, k);
      pos(id, 0) = k + 0.5 * j;
      pos(id, 1) = h * j;
    }
  }
  return pos;
}

std::vector<std::array<int, 3>> triangulate(int n) {
  std::vector<std::array<int, 3>> tris;
  tris.reserve(n * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; j + k < n; ++k) {
      // upward triangle (j,k), (j,k+1), (j+1,k)
      tris.push_back({vertex_id(n, j, k), vertex_id(n, j, k + 1), vertex_id(n, j + 1, k)});
      // downward triangle between rows j and j+1
      if (j + k < n - 1) {
        tris.push_back(
            {vertex_id(n, j, k + 1), vertex_id(n, j + 1, k + 1), vertex_id(n, j + 1, k)});
      }
    }
  }
  return tris;
}

HiveSurface surface_from_hive(const Hive& h) {
  if (!h.complete()) throw IncompleteHive("surface needs a fully populated hive");
  HiveSurface s;
  s.n = h.n();
  s.positions = placement(h.n());
  s.heights = h.values();
  s.triangles = triangulate(h.n());
  return s;
}

HiveSurface mean_surface(const std::vector<Hive>& hives) {
  if (hives.empty()) throw EmptyList("mean_surface of an empty list");
  const int n = hives.front().n();
  for (const Hive& h : hives) {
    if (h.n() != n) throw MixedSizes("mean_surface over mixed hive sizes");
  }
  HiveSurface s = surface_from_hive(hives.front());
  for (size_t i = 1; i < hives.size(); ++i) {
    if (!hives[i].complete()) throw IncompleteHive("incomplete hive in mean_surface");
    s.heights += hives[i].values();
  }
  s.heights /= static_cast<double>(hives.size());
  return s;
}

CurvatureField curvature(const HiveSurface& s) {
  const int nv = static_cast<int>(s.positions.rows());
  Eigen::VectorXd angle_sum = Eigen::VectorXd::Zero(nv);
  Eigen::VectorXd mixed_area = Eigen::VectorXd::Zero(nv);
  Eigen::Matrix<double, Eigen::Dynamic, 3> lap = Eigen::MatrixXd::Zero(nv, 3);
  Eigen::Matrix<double, Eigen::Dynamic, 3> normal = Eigen::MatrixXd::Zero(nv, 3);

  for (const auto& tri : s.triangles) {
    const Vec3 p[3] = {lift(s, tri[0]), lift(s, tri[1]), lift(s, tri[2])};
    const Vec3 e0 = p[2] - p[1], e1 = p[0] - p[2], e2 = p[1] - p[0];
    const double area = 0.5 * e2.cross(-e1).norm();
    if (area <= 1e-14) throw DegenerateTriangle("zero-area surface triangle");
    const Vec3 tri_normal = e2.cross(-e1).normalized();

    double cot[3];
    double angle[3];
    for (int c = 0; c < 3; ++c) {
      const Vec3 u = p[(c + 1) % 3] - p[c];
      const Vec3 v = p[(c + 2) % 3] - p[c];
      const double cosang = clamp_unit(u.dot(v) / (u.norm() * v.norm()));
      angle[c] = std::acos(cosang);
      const double sinang = std::sqrt(std::max(1e-30, 1.0 - cosang * cosang));
      cot[c] = cosang / sinang;
    }
    const bool obtuse = angle[0] > M_PI_2 || angle[1] > M_PI_2 || angle[2] > M_PI_2;
    for (int c = 0; c < 3; ++c) {
      const int v = tri[c];
      angle_sum[v] += angle[c];
      normal.row(v) += tri_normal.transpose();
      if (!obtuse) {
        // Voronoi area: (|e_next|^2 cot(next) + |e_prev|^2 cot(prev)) / 8
        const Vec3 u = p[(c + 1) % 3] - p[c];
        const Vec3 w = p[(c + 2) % 3] - p[c];
        mixed_area[v] +=
            (u.squaredNorm() * cot[(c + 2) % 3] + w.squaredNorm() * cot[(c + 1) % 3]) / 8.0;
      } else {
        mixed_area[v] += angle[c] > M_PI_2 ? area / 2.0 : area / 4.0;
      }
      // cotangent Laplacian: each incident edge weighted by its opposite angle
      lap.row(v) += cot[(c + 2) % 3] * (p[(c + 1) % 3] - p[c]).transpose();
      lap.row(v) += cot[(c + 1) % 3] * (p[(c + 2) % 3] - p[c]).transpose();
    }
  }

  CurvatureField field;
  field.gaussian = Eigen::VectorXd::Zero(nv);
  field.mean = Eigen::VectorXd::Zero(nv);
  for (int j = 1; j < s.n; ++j) {
    for (int k = 1; j + k <= s.n - 1; ++k) {
      const int v = vertex_id(s.n, j, k);
      const double area = std::max(mixed_area[v], 1e-30);
      field.gaussian[v] = (2.0 * M_PI - angle_sum[v]) / area;
      // mean-curvature normal K = Lap / (2 A); H = |K| / 2 signed against the
      // upward vertex normal, so bowls (curving up) come out positive
      const Vec3 K = -lap.row(v).transpose() / (2.0 * area);
      Vec3 nrm = normal.row(v).transpose();
      if (nrm.norm() < 1e-30) nrm = Vec3(0, 0, 1);
      nrm.normalize();
      if (nrm.z() < 0) nrm = -nrm;
      const double sign = K.dot(nrm) >= 0 ? -1.0 : 1.0;
      field.mean[v] = sign * 0.5 * K.norm();
    }
  }
  return field;
}

CurvatureField mean_curvature_field(const std::vector<Hive>& hives) {
  if (hives.empty()) throw EmptyList("curvature of an empty ensemble");
  CurvatureField acc = curvature(surface_from_hive(hives.front()));
  for (size_t i = 1; i < hives.size(); ++i) {
    const CurvatureField f = curvature(surface_from_hive(hives[i]));
    acc.gaussian += f.gaussian;
    acc.mean += f.mean;
  }
  acc.gaussian /= static_cast<double>(hives.size());
  acc.mean /= static_cast<double>(hives.size());
  return acc;
}

CurvatureField curvature_of_mean(const std::vector<Hive>& hives) {
  return curvature(mean_surface(hives));
}

}  // namespace hive

#include <doctest.h>

#include "hive/rng.hpp"
#include "hive/surface.hpp"

using namespace hive;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

Hive hive_with_heights(int n, const std::function<double(double, double)>& f) {
  const auto pos = placement(n);
  Hive h(n, HiveMode::Real);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      const int id = vertex_id(n, j, k);
      h(j, k) = f(pos(id, 0), pos(id, 1));
    }
  }
  return h;
}

HiveSurface scaled_surface(int n, double scale,
                           const std::function<double(double, double)>& f) {
  HiveSurface s;
  s.n = n;
  s.positions = placement(n) * scale;
  s.triangles = triangulate(n);
  s.heights.resize(vertex_count(n));
  for (int v = 0; v < vertex_count(n); ++v) {
    s.heights[v] = f(s.positions(v, 0), s.positions(v, 1));
  }
  return s;
}

}  // namespace

TEST_CASE("placement geometry") {
  const auto p1 = placement(1);
  CHECK(p1.rows() == 3);
  // unit equilateral triangle
  const double d01 = (p1.row(0) - p1.row(1)).norm();
  const double d02 = (p1.row(0) - p1.row(2)).norm();
  const double d12 = (p1.row(1) - p1.row(2)).norm();
  CHECK(d01 == doctest::Approx(1.0));
  CHECK(d02 == doctest::Approx(1.0));
  CHECK(d12 == doctest::Approx(1.0));

  const auto p2 = placement(2);
  CHECK(p2.rows() == 6);
  // edge midpoints are collinear with the corners
  const int corner_a = vertex_id(2, 0, 0), mid = vertex_id(2, 0, 1), corner_b = vertex_id(2, 0, 2);
  const Eigen::Vector2d a = p2.row(corner_a), m = p2.row(mid), b = p2.row(corner_b);
  CHECK(((a + b) / 2 - m).norm() == doctest::Approx(0.0));

  // all lattice-neighbor distances are 1
  const int n = 4;
  const auto p4 = placement(n);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      for (const auto [dj, dk] : {std::pair{0, 1}, {1, 0}, {1, -1}}) {
        if (!in_triangle(n, j + dj, k + dk)) continue;
        const double d =
            (p4.row(vertex_id(n, j, k)) - p4.row(vertex_id(n, j + dj, k + dk))).norm();
        CHECK(d == doctest::Approx(1.0));
      }
    }
  }
}

TEST_CASE("triangulation covers the region exactly once") {
  for (int n = 1; n <= 5; ++n) {
    const auto tris = triangulate(n);
    CHECK(static_cast<int>(tris.size()) == n * n);
    const auto pos = placement(n);
    double area = 0;
    for (const auto& t : tris) {
      const Eigen::Vector2d a = pos.row(t[0]), b = pos.row(t[1]), c = pos.row(t[2]);
      area += 0.5 * std::abs((b - a).x() * (c - a).y() - (b - a).y() * (c - a).x());
    }
    CHECK(area == doctest::Approx(n * n * std::sqrt(3.0) / 4.0));
  }
}

TEST_CASE("unit triangulation satisfies the Delaunay empty-circumcircle test") {
  const int n = 4;
  const auto pos = placement(n);
  const auto tris = triangulate(n);
  for (const auto& t : tris) {
    const Eigen::Vector2d a = pos.row(t[0]), b = pos.row(t[1]), c = pos.row(t[2]);
    // circumcenter of an equilateral triangle is its centroid
    const Eigen::Vector2d center = (a + b + c) / 3.0;
    const double r = (a - center).norm();
    for (int v = 0; v < pos.rows(); ++v) {
      if (v == t[0] || v == t[1] || v == t[2]) continue;
      CHECK((Eigen::Vector2d(pos.row(v)) - center).norm() > r + 1e-9);
    }
  }
}

TEST_CASE("mean_surface basics and linearity") {
  const WeightTriple t(vec({2, 1, 0}), vec({2, 1, 0}), vec({3, 2, 1}));
  Hive h = build_boundary(t);
  h(1, 1) = 4;
  const auto single = mean_surface({h});
  CHECK(single.heights == h.values());

  Hive neg(3, HiveMode::Real);
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; j + k <= 3; ++k) neg(j, k) = -h(j, k);
  }
  const auto zero = mean_surface({h, neg});
  CHECK(zero.heights.cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  // linearity: mean(a h1 + b h2) == a mean(h1) + b mean(h2), pointwise
  Hive h2 = build_boundary(t);
  h2(1, 1) = 5;
  Hive combo(3, HiveMode::Real);
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; j + k <= 3; ++k) combo(j, k) = 2.0 * h(j, k) + 3.0 * h2(j, k);
  }
  const auto lhs = mean_surface({combo});
  const Eigen::VectorXd rhs =
      2.0 * mean_surface({h}).heights + 3.0 * mean_surface({h2}).heights;
  CHECK((lhs.heights - rhs).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(mean_surface({}), EmptyList);
  Hive other(2, HiveMode::Real);
  CHECK_THROWS_AS(mean_surface({h, other}), MixedSizes);
}

TEST_CASE("curvature of flat and affine surfaces vanishes") {
  const Hive flat = hive_with_heights(6, [](double, double) { return 0.0; });
  const auto f0 = curvature(surface_from_hive(flat));
  CHECK(f0.gaussian.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(f0.mean.cwiseAbs().maxCoeff() <= 1e-10);

  const Hive plane =
      hive_with_heights(6, [](double x, double y) { return 0.7 * x - 1.3 * y + 2.0; });
  const auto f1 = curvature(surface_from_hive(plane));
  CHECK(f1.gaussian.cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(f1.mean.cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("boundary curvature entries are exactly zero") {
  const Hive bump = hive_with_heights(5, [](double x, double y) { return x * x + y; });
  const auto f = curvature(surface_from_hive(bump));
  for (int j = 0; j <= 5; ++j) {
    for (int k = 0; j + k <= 5; ++k) {
      if (is_boundary(5, j, k)) {
        CHECK(f.gaussian[vertex_id(5, j, k)] == 0.0);
        CHECK(f.mean[vertex_id(5, j, k)] == 0.0);
      }
    }
  }
}

TEST_CASE("unit sphere cap has Gaussian curvature 1") {
  const int n = 12;
  const double scale = 0.06;
  // center the cap over the triangle centroid; heights on the unit sphere
  const auto pos = placement(n) * scale;
  double cx = 0, cy = 0;
  for (int v = 0; v < pos.rows(); ++v) {
    cx += pos(v, 0);
    cy += pos(v, 1);
  }
  cx /= pos.rows();
  cy /= pos.rows();
  const auto s = scaled_surface(n, scale, [&](double x, double y) {
    const double dx = x - cx, dy = y - cy;
    return std::sqrt(1.0 - dx * dx - dy * dy);
  });
  const auto f = curvature(s);
  for (int j = 1; j < n; ++j) {
    for (int k = 1; j + k <= n - 1; ++k) {
      const double K = f.gaussian[vertex_id(n, j, k)];
      CHECK(K > 0.9);
      CHECK(K < 1.1);
    }
  }
}

TEST_CASE("mean curvature sign convention: bowls positive") {
  const int n = 8;
  const auto bowl = scaled_surface(n, 0.1, [](double x, double y) {
    const double dx = x - 0.4, dy = y - 0.25;
    return 0.5 * (dx * dx + dy * dy);
  });
  const auto f = curvature(bowl);
  CHECK(f.mean[vertex_id(n, 3, 2)] > 0.5);

  const auto dome = scaled_surface(n, 0.1, [](double x, double y) {
    const double dx = x - 0.4, dy = y - 0.25;
    return -0.5 * (dx * dx + dy * dy);
  });
  CHECK(curvature(dome).mean[vertex_id(n, 3, 2)] < -0.5);
}

TEST_CASE("angle-deficit curvature invariant under height negation") {
  const Hive bump =
      hive_with_heights(6, [](double x, double y) { return std::sin(x) * 0.3 + 0.1 * y * y; });
  Hive flipped(6, HiveMode::Real);
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; j + k <= 6; ++k) flipped(j, k) = -bump(j, k);
  }
  const auto f1 = curvature(surface_from_hive(bump));
  const auto f2 = curvature(surface_from_hive(flipped));
  CHECK((f1.gaussian - f2.gaussian).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("degenerate triangles are rejected") {
  HiveSurface s;
  s.n = 1;
  s.positions = Eigen::MatrixXd::Zero(3, 2);  // all three points coincide
  s.triangles = {{0, 1, 2}};
  s.heights = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(curvature(s), DegenerateTriangle);
}

TEST_CASE("ensemble curvature averaging modes") {
  const WeightTriple t(vec({2, 1, 0}), vec({2, 1, 0}), vec({3, 2, 1}));
  Hive a = build_boundary(t);
  a(1, 1) = 4;
  Hive b = build_boundary(t);
  b(1, 1) = 5;
  const auto ens = mean_curvature_field({a, b});
  const auto fa = curvature(surface_from_hive(a));
  const auto fb = curvature(surface_from_hive(b));
  const int id = vertex_id(3, 1, 1);
  CHECK(ens.gaussian[id] ==
        doctest::Approx(0.5 * (fa.gaussian[id] + fb.gaussian[id])));
  // curvature of the mean surface differs in general
  const auto of_mean = curvature_of_mean({a, b});
  CHECK(std::isfinite(of_mean.gaussian[id]));
}

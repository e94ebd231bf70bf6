#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "hive/hive.hpp"

namespace hive {

/**
 * A hive rendered as a triangulated height field: 2D vertex positions on the
 * equilateral lattice, per-vertex heights, and the triangle list. For these
 * positions the unit triangulation is the Delaunay triangulation (no four
 * lattice points are cocircular across a shared edge).
 */
struct HiveSurface {
  int n = 0;
  Eigen::Matrix<double, Eigen::Dynamic, 2> positions;  // vertex_id order
  Eigen::VectorXd heights;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise in the plane
};

/** Vertex (j,k) placed at k*(1,0) + j*(1/2, sqrt(3)/2); unit edge lengths. */
Eigen::Matrix<double, Eigen::Dynamic, 2> placement(int n);

/** The unit (Delaunay) triangulation of the side-n lattice. */
std::vector<std::array<int, 3>> triangulate(int n);

/** Surface of one hive on the standardized placement. */
HiveSurface surface_from_hive(const Hive& h);

/** Pointwise arithmetic mean of same-size hives. */
HiveSurface mean_surface(const std::vector<Hive>& hives);

struct CurvatureField {
  Eigen::VectorXd gaussian;  // boundary vertices forced to 0
  Eigen::VectorXd mean;
};

/**
 * Discrete curvatures of the lifted surface (x, y, height):
 * Gaussian from the angle deficit over the mixed Voronoi area, mean from the
 * cotangent mean-curvature normal, signed positive where the surface bends
 * upward (bowl); boundary entries are 0. Throws DegenerateTriangle on
 * zero-area faces.
 */
CurvatureField curvature(const HiveSurface& surface);

/** Pointwise mean of per-hive curvature fields (ensemble mode). */
CurvatureField mean_curvature_field(const std::vector<Hive>& hives);

/** Curvature of the mean surface (surface mode). */
CurvatureField curvature_of_mean(const std::vector<Hive>& hives);

}  // namespace hive

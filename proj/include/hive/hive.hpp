#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "hive/weights.hpp"

namespace hive {

/** A lattice vertex of the triangular array. i = n - j - k is implied. */
struct Vertex {
  int j = 0;
  int k = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/** Number of vertices of a side-n triangle: (n+1)(n+2)/2. */
inline int vertex_count(int n) { return (n + 1) * (n + 2) / 2; }

/** Flat storage id of vertex (j,k); vertices ordered by j then k. */
inline int vertex_id(int n, int j, int k) {
  return j * (n + 1) - j * (j - 1) / 2 + k;
}

inline bool in_triangle(int n, int j, int k) {
  return j >= 0 && k >= 0 && j + k <= n;
}

inline bool is_boundary(int n, int j, int k) {
  return j == 0 || k == 0 || j + k == n;
}

/** Interior vertices (j,k >= 1, j+k <= n-1) in coordinate_index order. */
std::vector<Vertex> interior_vertices(int n);

/** Number of interior vertices: (n-1)(n-2)/2. */
inline int interior_count(int n) { return n < 3 ? 0 : (n - 1) * (n - 2) / 2; }

enum class HiveMode { Real, Integer };

/**
 * Triangular array of labels indexed by (j,k) with 0 <= j,k and j+k <= n.
 * The boundary is fixed by a weight triple: partial sums of mu up the left
 * edge, of nu continuing down the right edge, and of lambda along the bottom.
 * Unset entries are NaN.
 */
class Hive {
 public:
  Hive(int n, HiveMode mode);

  int n() const { return n_; }
  HiveMode mode() const { return mode_; }

  double operator()(int j, int k) const { return values_[vertex_id(n_, j, k)]; }
  double& operator()(int j, int k) { return values_[vertex_id(n_, j, k)]; }
  double at(const Vertex& v) const { return (*this)(v.j, v.k); }

  const Eigen::VectorXd& values() const { return values_; }
  bool complete() const;

  /** Interior values in coordinate_index order; throws IncompleteHive if unset. */
  Eigen::VectorXd interior() const;
  void set_interior(const Eigen::VectorXd& x);

  std::string to_json(const WeightTriple& triple) const;
  static std::pair<Hive, WeightTriple> from_json(const std::string& text);

  /** Row-major (j,k,value) CSV of the full triangle. */
  void write_csv(std::ostream& os) const;

 private:
  int n_;
  HiveMode mode_;
  Eigen::VectorXd values_;
};

/**
 * Populate the boundary from cumulative sums: left edge (j,0) carries
 * 0, mu1, mu1+mu2, ...; right edge (n-k,k) continues with nu partial sums from
 * the apex; bottom edge (0,k) carries lambda partial sums. The two paths to
 * the right corner agree by saturation. Interior entries are left unset.
 */
Hive build_boundary(const WeightTriple& triple);

/** Boundary value at a boundary vertex, straight from the cumulative sums. */
double boundary_value(const WeightTriple& triple, int j, int k);

/** build_boundary with the interior filled from x (coordinate_index order). */
Hive embed(const WeightTriple& triple, const Eigen::VectorXd& x);

}  // namespace hive

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hive/rhombus.hpp"
#include "hive/weights.hpp"

namespace hive {

/**
 * One inequality sum(coef*x) <= b over the interior coordinates. At most four
 * nonzero coefficients, all +-1: the acute vertices of the source rhombus
 * enter with +1, the obtuse with -1, and boundary vertices are folded into b.
 */
struct PolytopeRow {
  int cols[4];
  int coefs[4];
  int size = 0;
  double b = 0.0;
  long long b_int = 0;  // valid when the owning polytope is integral
  Rhombus source;

  template <typename Vec>
  double dot(const Vec& x) const {
    double s = 0.0;
    for (int t = 0; t < size; ++t) s += coefs[t] * x[cols[t]];
    return s;
  }
  long long dot_int(const std::vector<long long>& x) const {
    long long s = 0;
    for (int t = 0; t < size; ++t) s += coefs[t] * x[cols[t]];
    return s;
  }
};

/**
 * The hive polytope A x <= b over the (n-1)(n-2)/2 interior coordinates,
 * with boundary values eliminated into b. x is feasible iff the embedded
 * hive satisfies every rhombus inequality.
 */
class HivePolytope {
 public:
  explicit HivePolytope(const WeightTriple& triple);

  int n() const { return n_; }
  int dim() const { return dim_; }
  /** n < 3: no interior coordinates; the polytope is a 0-dimensional marker. */
  bool degenerate() const { return dim_ == 0; }
  bool integral() const { return integral_; }

  const std::vector<PolytopeRow>& rows() const { return rows_; }
  const std::vector<Vertex>& coordinate_index() const { return coords_; }
  const WeightTriple& triple() const { return triple_; }

  /** Row indices touching each coordinate (at most 12: 4 per orientation). */
  const std::vector<std::vector<int>>& rows_by_coordinate() const {
    return rows_by_coord_;
  }

  Eigen::MatrixXd dense_A() const;
  Eigen::VectorXd b() const;

  /** All inequalities hold within tol (shifted by `level` on the right). */
  bool feasible(const Eigen::VectorXd& x, double tol = 0.0, double level = 0.0) const;
  /** Exact integer feasibility of A x <= b + level. */
  bool feasible_int(const std::vector<long long>& x, long long level = 0) const;

 private:
  int n_;
  int dim_;
  bool integral_;
  WeightTriple triple_;
  std::vector<PolytopeRow> rows_;
  std::vector<Vertex> coords_;
  std::vector<std::vector<int>> rows_by_coord_;
};

/**
 * Assemble the polytope for a triple. Every row is checked to carry at most
 * 4 nonzero +-1 coefficients. Throws SaturationViolated via WeightTriple
 * construction upstream; n < 3 yields the degenerate marker.
 */
HivePolytope assemble_polytope(const WeightTriple& triple);

}  // namespace hive

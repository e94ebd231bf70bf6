#include "hive/lrc_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "hive/rational_lp.hpp"

namespace hive {

namespace {

std::vector<ratlp::Constraint> to_constraints(const HivePolytope& poly, long long level) {
  std::vector<ratlp::Constraint> cons;
  cons.reserve(poly.rows().size());
  for (const PolytopeRow& row : poly.rows()) {
    ratlp::Constraint c;
    for (int t = 0; t < row.size; ++t) {
      c.terms.emplace_back(row.cols[t], ratlp::Rat(row.coefs[t]));
    }
    c.rhs = ratlp::Rat(static_cast<long>(row.b_int + level));
    cons.push_back(std::move(c));
  }
  return cons;
}

long long floor_rat(const ratlp::Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

long long ceil_rat(const ratlp::Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

struct Dfs {
  const HivePolytope& poly;
  const std::vector<int>& order;                       // order[t] = coordinate at depth t
  const std::vector<std::pair<long long, long long>>& global;  // per-coordinate LP bounds
  long long level;
  long long cap;
  bool collect;
  bool first_only = false;

  std::vector<long long> x;
  std::vector<int> depth_of;  // coordinate -> depth
  long long count = 0;
  long long nodes = 0;
  std::vector<std::vector<long long>> points;
  std::optional<std::vector<long long>> first;

  bool run() {
    const int dim = poly.dim();
    x.assign(dim, 0);
    depth_of.assign(dim, 0);
    for (int t = 0; t < dim; ++t) depth_of[order[t]] = t;
    // constant rows (possible only for n < 3) decide feasibility outright
    for (const PolytopeRow& row : poly.rows()) {
      if (row.size == 0 && 0 > row.b_int + level) return true;
    }
    return descend(0);
  }

  // returns false when the node cap was exhausted
  bool descend(int depth) {
    if (++nodes > cap) return false;
    const int dim = poly.dim();
    if (depth == dim) {
      ++count;
      if (collect) points.push_back(x);
      if (first_only) first = x;
      return true;
    }
    const int c = order[depth];
    long long lo = global[c].first;
    long long hi = global[c].second;
    for (int r : poly.rows_by_coordinate()[c]) {
      const PolytopeRow& row = poly.rows()[r];
      // bound coordinate c using fixed coordinates and global ranges
      long long rest = 0;
      int coef_c = 0;
      for (int t = 0; t < row.size; ++t) {
        const int u = row.cols[t];
        if (u == c) {
          coef_c = row.coefs[t];
          continue;
        }
        if (depth_of[u] < depth) {
          rest += row.coefs[t] * x[u];
        } else {
          rest += row.coefs[t] > 0 ? row.coefs[t] * global[u].first
                                   : row.coefs[t] * global[u].second;
        }
      }
      const long long bound = row.b_int + level - rest;
      if (coef_c > 0) hi = std::min(hi, bound);
      else lo = std::max(lo, -bound);
    }
    for (long long v = lo; v <= hi; ++v) {
      x[c] = v;
      if (!descend(depth + 1)) return false;
      if (first_only && first) return true;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<std::pair<long long, long long>>> coordinate_bounds(
    const HivePolytope& poly, long long level) {
  const int dim = poly.dim();
  const auto cons = to_constraints(poly, level);
  std::vector<std::pair<long long, long long>> bounds(dim);
  for (int c = 0; c < dim; ++c) {
    std::vector<ratlp::Rat> obj(dim, 0);
    obj[c] = 1;
    const auto hi = ratlp::maximize(dim, cons, obj);
    if (hi.status == ratlp::Status::Infeasible) return std::nullopt;
    if (hi.status != ratlp::Status::Optimal) {
      throw UnboundedPolytope("hive polytope should be bounded");
    }
    obj[c] = -1;
    const auto lo = ratlp::maximize(dim, cons, obj);
    if (lo.status != ratlp::Status::Optimal) {
      throw UnboundedPolytope("hive polytope should be bounded");
    }
    bounds[c] = {ceil_rat(-lo.objective), floor_rat(hi.objective)};
  }
  if (dim == 0) {
    // still report LP feasibility of the constant system
    const auto f = ratlp::find_feasible(0, cons);
    if (f.status == ratlp::Status::Infeasible) return std::nullopt;
  }
  return bounds;
}

LatticeEnumeration exact_lrc(const WeightTriple& triple, long long cap,
                             const std::optional<std::vector<int>>& order) {
  if (!triple.integral()) throw InvalidSpec("exact_lrc requires an integer triple");
  const HivePolytope poly(triple);
  LatticeEnumeration result{triple};

  std::vector<int> ord(poly.dim());
  for (int t = 0; t < poly.dim(); ++t) ord[t] = t;
  if (order) {
    if (static_cast<int>(order->size()) != poly.dim()) {
      throw LengthMismatch("DFS order permutation has wrong size");
    }
    ord = *order;
  }

  auto bounds = coordinate_bounds(poly, 0);
  if (!bounds) return result;  // LP-infeasible: count 0

  Dfs dfs{poly, ord, *bounds, 0, cap, /*collect=*/true};
  const bool finished = dfs.run();
  result.nodes_visited = dfs.nodes;
  if (!finished) {
    throw CapExceeded("exact_lrc node cap exceeded", dfs.count);
  }
  result.count = dfs.count;
  result.points = std::move(dfs.points);
  return result;
}

std::optional<std::vector<long long>> find_integer_point(const HivePolytope& poly,
                                                         long long level, long long cap) {
  if (!poly.integral()) throw InvalidSpec("integer search requires an integer triple");
  auto bounds = coordinate_bounds(poly, level);
  if (!bounds) return std::nullopt;
  std::vector<int> ord(poly.dim());
  for (int t = 0; t < poly.dim(); ++t) ord[t] = t;
  Dfs dfs{poly, ord, *bounds, level, cap, /*collect=*/false};
  dfs.first_only = true;
  if (!dfs.run()) throw CapExceeded("integer point search cap exceeded", 0);
  return dfs.first;
}

}  // namespace hive

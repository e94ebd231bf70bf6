#pragma once

#include <optional>
#include <vector>

#include "hive/polytope.hpp"

namespace hive {

struct LatticeEnumeration {
  WeightTriple triple;
  long long count = 0;
  /** Interior integer vectors, retained while count stays under the cap. */
  std::vector<std::vector<long long>> points;
  long long nodes_visited = 0;
};

/**
 * Exact integer-hive count by depth-first enumeration over the interior
 * coordinates in coordinate_index order, pruning each coordinate to the
 * exact interval permitted by the rhombus rows given the already-fixed
 * coordinates (unfixed ones relaxed to their LP bounds). Throws CapExceeded
 * with the partial count when more than `cap` nodes are visited.
 *
 * `order` optionally permutes the DFS variable order; the count is
 * order-independent.
 */
LatticeEnumeration exact_lrc(const WeightTriple& triple, long long cap = 1000000,
                             const std::optional<std::vector<int>>& order = std::nullopt);

/**
 * Exact integer bounds [lo_c, hi_c] of each interior coordinate over the
 * polytope at the given contraction level, from rational LPs. Empty when the
 * LP relaxation is infeasible.
 */
std::optional<std::vector<std::pair<long long, long long>>> coordinate_bounds(
    const HivePolytope& poly, long long level = 0);

/** Any integer point of A x <= b + level, or nullopt (exact DFS search). */
std::optional<std::vector<long long>> find_integer_point(const HivePolytope& poly,
                                                         long long level = 0,
                                                         long long cap = 1000000);

}  // namespace hive

#pragma once

#include <string>
#include <vector>

#include "hive/hive.hpp"

namespace hive {

enum class Orientation { Right, Left, Vertical };

std::string to_string(Orientation o);

/**
 * A minimal rhombus: two unit triangles sharing an edge. The obtuse pair sits
 * on the shared edge (the short diagonal), the acute pair at the far tips.
 * A hive requires sum(obtuse) >= sum(acute) for every minimal rhombus.
 */
struct Rhombus {
  Orientation orientation;
  Vertex acute[2];
  Vertex obtuse[2];
};

/**
 * Every minimal rhombus of the side-n triangulation, each exactly once.
 * Total count is 3*n*(n-1)/2. Throws InvalidSpec for n < 2.
 *
 * The three families, written on vertex coordinates (j,k):
 *   right    (j>=2):       acute {(j,k),(j-2,k+1)}, obtuse {(j-1,k),(j-1,k+1)}
 *   left     (k>=2):       acute {(j,k),(j+1,k-2)}, obtuse {(j,k-1),(j+1,k-1)}
 *   vertical (j+k<=n-2):   acute {(j,k),(j+1,k+1)}, obtuse {(j+1,k),(j,k+1)}
 */
std::vector<Rhombus> enumerate_rhombi(int n);

struct Deficiency {
  Rhombus rhombus;
  double magnitude;  // acute sum minus obtuse sum, > tolerance
};

struct ValidationReport {
  bool is_hive = false;
  std::vector<Deficiency> deficiencies;
};

/**
 * Check every rhombus inequality. A violation of magnitude <= tolerance
 * counts as satisfied. Throws IncompleteHive when entries are unset.
 */
ValidationReport validate_hive(const Hive& h, double tolerance = 1e-9);

}  // namespace hive

#include "hive/rhombus.hpp"

#include <cmath>

namespace hive {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Right: return "right";
    case Orientation::Left: return "left";
    case Orientation::Vertical: return "vertical";
  }
  return "?";
}

std::vector<Rhombus> enumerate_rhombi(int n) {
  if (n < 2) throw InvalidSpec("no rhombus exists for n < 2");
  std::vector<Rhombus> out;
  out.reserve(3 * n * (n - 1) / 2);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; j + k <= n; ++k) {
      if (j >= 2) {
        out.push_back({Orientation::Right,
                       {{j, k}, {j - 2, k + 1}},
                       {{j - 1, k}, {j - 1, k + 1}}});
      }
      if (k >= 2) {
        out.push_back({Orientation::Left,
                       {{j, k}, {j + 1, k - 2}},
                       {{j, k - 1}, {j + 1, k - 1}}});
      }
      if (j + k <= n - 2) {
        out.push_back({Orientation::Vertical,
                       {{j, k}, {j + 1, k + 1}},
                       {{j + 1, k}, {j, k + 1}}});
      }
    }
  }
  return out;
}

ValidationReport validate_hive(const Hive& h, double tolerance) {
  if (!h.complete()) throw IncompleteHive("hive has unset vertices");
  ValidationReport report;
  report.is_hive = true;
  if (h.n() < 2) return report;  // no rhombus to violate
  for (const Rhombus& r : enumerate_rhombi(h.n())) {
    const double acute = h.at(r.acute[0]) + h.at(r.acute[1]);
    const double obtuse = h.at(r.obtuse[0]) + h.at(r.obtuse[1]);
    const double violation = acute - obtuse;
    if (violation > tolerance) {
      report.is_hive = false;
      report.deficiencies.push_back({r, violation});
    }
  }
  return report;
}

}  // namespace hive

#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "hive/polytope.hpp"
#include "hive/rng.hpp"

using namespace hive;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

WeightTriple triple321() {
  return WeightTriple(vec({2, 1, 0}), vec({2, 1, 0}), vec({3, 2, 1}));
}

}  // namespace

TEST_CASE("check_saturation examples") {
  CHECK(check_saturation(vec({2, 0}), vec({2, 0}), vec({2, 2})));
  CHECK(check_saturation(vec({40, 30, 20, 10, 2}), vec({40, 30, 20, 10, 2}),
                         vec({65, 55, 45, 35, 4})));
  CHECK_FALSE(check_saturation(vec({1, 0}), vec({1, 0}), vec({3, 0})));
}

TEST_CASE("check_saturation preconditions") {
  CHECK_THROWS_AS(check_saturation(vec({1, 0}), vec({1, 0, 0}), vec({2, 0})),
                  LengthMismatch);
  CHECK_THROWS_AS(check_saturation(vec({0, 1}), vec({1, 0}), vec({2, 0})),
                  NotWeaklyDecreasing);
}

TEST_CASE("WeightTriple integral detection and scaling") {
  const WeightTriple t = triple321();
  CHECK(t.integral());
  CHECK(t.mu_int() == std::vector<long long>{2, 1, 0});
  const WeightTriple t2 = t.scaled(3);
  CHECK(t2.lambda()[0] == 9.0);

  const WeightTriple real(vec({1.5, 0.5}), vec({1.0, 0.0}), vec({2.5, 0.5}));
  CHECK_FALSE(real.integral());
  CHECK_THROWS_AS(WeightTriple(vec({2, 1}), vec({2, 1}), vec({3, 2})),
                  SaturationViolated);
}

TEST_CASE("build_boundary cumulative sums") {
  const Hive h = build_boundary(triple321());
  // left edge bottom-up
  CHECK(h(0, 0) == 0);
  CHECK(h(1, 0) == 2);
  CHECK(h(2, 0) == 3);
  CHECK(h(3, 0) == 3);
  // right edge apex-down
  CHECK(h(2, 1) == 5);
  CHECK(h(1, 2) == 6);
  CHECK(h(0, 3) == 6);
  // bottom edge
  CHECK(h(0, 1) == 3);
  CHECK(h(0, 2) == 5);
  CHECK_FALSE(h.complete());
}

TEST_CASE("build_boundary all-zero and corner agreement") {
  const Hive z =
      build_boundary(WeightTriple(vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 0, 0})));
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; j + k <= 3; ++k) {
      if (is_boundary(3, j, k)) CHECK(z(j, k) == 0);
    }
  }
  const Hive h = build_boundary(WeightTriple(vec({40, 30, 20, 10}), vec({40, 30, 20, 10}),
                                             vec({65, 55, 45, 35})));
  CHECK(h(0, 4) == 200);  // both corner paths give 100 + 100
}

TEST_CASE("corner paths agree for random integer triples") {
  Xoshiro256 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 5));
    std::vector<long long> mu(n), nu(n);
    for (auto& v : mu) v = rng.uniform_int(0, 30);
    for (auto& v : nu) v = rng.uniform_int(0, 30);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    std::sort(nu.begin(), nu.end(), std::greater<>());
    std::vector<long long> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = mu[i] + nu[i];
    const auto triple = WeightTriple::from_ints(mu, nu, lam);
    const Hive h = build_boundary(triple);
    CHECK(h(0, n) == triple.mu().sum() + triple.nu().sum());
  }
}

TEST_CASE("side-1 hives are vacuously valid") {
  const WeightTriple t(vec({1.5}), vec({0.5}), vec({2.0}));
  const Hive h = build_boundary(t);
  CHECK(h.complete());  // all three vertices lie on the boundary
  CHECK(validate_hive(h).is_hive);
}

TEST_CASE("real-mode corner paths agree within tolerance") {
  const WeightTriple t(vec({1.25, 0.5}), vec({0.75, 0.25}), vec({1.9, 0.85}));
  const Hive h = build_boundary(t);
  CHECK(std::abs(h(0, 2) - t.lambda().sum()) <= 1e-9);
  CHECK(std::abs(h(0, 2) - t.mu().sum() - t.nu().sum()) <= 1e-9);
}

TEST_CASE("enumerate_rhombi counts and uniqueness") {
  for (int n = 2; n <= 6; ++n) {
    const auto rhombi = enumerate_rhombi(n);
    CHECK(static_cast<int>(rhombi.size()) == 3 * n * (n - 1) / 2);
    int right = 0, left = 0, vertical = 0;
    std::set<std::set<std::pair<int, int>>> vertex_sets;
    for (const Rhombus& r : rhombi) {
      switch (r.orientation) {
        case Orientation::Right: ++right; break;
        case Orientation::Left: ++left; break;
        case Orientation::Vertical: ++vertical; break;
      }
      std::set<std::pair<int, int>> vs;
      for (const Vertex& v : {r.acute[0], r.acute[1], r.obtuse[0], r.obtuse[1]}) {
        CHECK(in_triangle(n, v.j, v.k));
        vs.insert({v.j, v.k});
      }
      CHECK(vs.size() == 4);  // four distinct vertices
      vertex_sets.insert(vs);
    }
    CHECK(right == n * (n - 1) / 2);
    CHECK(left == n * (n - 1) / 2);
    CHECK(vertical == n * (n - 1) / 2);
    // involution-free: no rhombus listed twice under any relabeling
    CHECK(vertex_sets.size() == rhombi.size());
  }
}

TEST_CASE("n=2 has one rhombus per orientation, n=1 errors") {
  CHECK(enumerate_rhombi(2).size() == 3);
  CHECK_THROWS_AS(enumerate_rhombi(1), InvalidSpec);
}

TEST_CASE("n=3 interior vertex rhombus census") {
  const auto rhombi = enumerate_rhombi(3);
  const Vertex interior{1, 1};
  int member = 0, obtuse = 0, acute = 0;
  for (const Rhombus& r : rhombi) {
    bool in = false;
    for (const Vertex& v : {r.acute[0], r.acute[1]}) {
      if (v == interior) { in = true; ++acute; }
    }
    for (const Vertex& v : {r.obtuse[0], r.obtuse[1]}) {
      if (v == interior) { in = true; ++obtuse; }
    }
    if (in) ++member;
  }
  // the unique interior vertex sits at an obtuse corner of exactly 6 rhombi
  CHECK(obtuse == 6);
  CHECK(acute == 3);
  CHECK(member == 9);
}

TEST_CASE("validate_hive on the n=3 example") {
  const WeightTriple t = triple321();
  Hive h = build_boundary(t);
  h(1, 1) = 4;
  CHECK(validate_hive(h).is_hive);
  h(1, 1) = 5;
  CHECK(validate_hive(h).is_hive);
  h(1, 1) = 6;
  const auto report = validate_hive(h);
  CHECK_FALSE(report.is_hive);
  CHECK_FALSE(report.deficiencies.empty());
  // a violated rhombus must carry the interior vertex at an acute corner,
  // the direction that forces x <= 5
  bool found = false;
  for (const auto& d : report.deficiencies) {
    for (const Vertex& v : {d.rhombus.acute[0], d.rhombus.acute[1]}) {
      if (v == interior_vertices(3)[0]) found = true;
    }
    CHECK(d.magnitude > 0);
  }
  CHECK(found);
}

TEST_CASE("validate_hive edge cases") {
  const WeightTriple zero(vec({0, 0, 0}), vec({0, 0, 0}), vec({0, 0, 0}));
  Hive h = build_boundary(zero);
  h(1, 1) = 0;
  CHECK(validate_hive(h).is_hive);  // equalities count as satisfied

  Hive incomplete = build_boundary(zero);
  CHECK_THROWS_AS(validate_hive(incomplete), IncompleteHive);

  // a violation within tolerance counts as satisfied
  Hive near = build_boundary(zero);
  near(1, 1) = 0.5e-9;
  CHECK(validate_hive(near, 1e-9).is_hive);
  near(1, 1) = 2e-9;
  CHECK_FALSE(validate_hive(near, 1e-9).is_hive);
}

TEST_CASE("polytope dimensions and row structure") {
  const HivePolytope p3(triple321());
  CHECK(p3.dim() == 1);
  CHECK_FALSE(p3.degenerate());
  const HivePolytope p4(WeightTriple(vec({40, 30, 20, 10}), vec({40, 30, 20, 10}),
                                     vec({65, 55, 45, 35})));
  CHECK(p4.dim() == 3);
  for (const PolytopeRow& row : p4.rows()) {
    CHECK(row.size <= 4);
    for (int t = 0; t < row.size; ++t) {
      CHECK((row.coefs[t] == 1 || row.coefs[t] == -1));
    }
  }
  const HivePolytope p2(WeightTriple(vec({1, 0}), vec({1, 0}), vec({1, 1})));
  CHECK(p2.degenerate());
  CHECK(p2.dim() == 0);
}

TEST_CASE("n=3 polytope is the interval [4,5]") {
  const HivePolytope poly(triple321());
  for (double x = 2.0; x <= 7.0; x += 0.25) {
    Eigen::VectorXd v(1);
    v << x;
    CHECK(poly.feasible(v, 1e-12) == (x >= 4.0 && x <= 5.0));
  }
}

TEST_CASE("single feasible integer for (1,0,0)^2 -> (1,1,0)") {
  const WeightTriple t(vec({1, 0, 0}), vec({1, 0, 0}), vec({1, 1, 0}));
  const HivePolytope poly(t);
  CHECK(poly.dim() == 1);
  int count = 0;
  for (long long x = -5; x <= 5; ++x) {
    if (poly.feasible_int({x})) ++count;
  }
  CHECK(count == 1);
  CHECK(poly.feasible_int({2}));
}

TEST_CASE("polytope and validator agree on random interiors") {
  Xoshiro256 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 2));
    std::vector<long long> mu(n), nu(n);
    for (auto& v : mu) v = rng.uniform_int(0, 20);
    for (auto& v : nu) v = rng.uniform_int(0, 20);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    std::sort(nu.begin(), nu.end(), std::greater<>());
    std::vector<long long> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = mu[i] + nu[i];
    const auto triple = WeightTriple::from_ints(mu, nu, lam);
    const HivePolytope poly(triple);

    for (int trial = 0; trial < 50; ++trial) {
      Eigen::VectorXd x(poly.dim());
      for (int c = 0; c < poly.dim(); ++c) {
        x[c] = static_cast<double>(rng.uniform_int(0, 40));
      }
      const bool by_polytope = poly.feasible(x, 1e-9);
      const bool by_validator = validate_hive(embed(triple, x), 1e-9).is_hive;
      CHECK(by_polytope == by_validator);
    }
  }
}

TEST_CASE("hive json round trip and csv export") {
  const WeightTriple t = triple321();
  Hive h = build_boundary(t);
  h(1, 1) = 4.5;
  const std::string text = h.to_json(t);
  const auto [h2, t2] = Hive::from_json(text);
  CHECK(h2.n() == 3);
  CHECK(h2(1, 1) == 4.5);
  CHECK(t2.mu()[0] == 2.0);

  std::ostringstream csv;
  h.write_csv(csv);
  CHECK(csv.str().substr(0, 10) == "j,k,value\n");
  int lines = 0;
  for (char c : csv.str()) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 1 + vertex_count(3));
}

TEST_CASE("interior embed round trip") {
  const WeightTriple t(vec({40, 30, 20, 10}), vec({40, 30, 20, 10}),
                       vec({65, 55, 45, 35}));
  Eigen::VectorXd x(3);
  x << 100, 150, 125;
  CHECK(embed(t, x).interior() == x);
}

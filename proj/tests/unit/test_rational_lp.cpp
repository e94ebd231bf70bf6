#include <doctest.h>

#include <cmath>

#include "hive/rational_lp.hpp"

using namespace hive;
using namespace hive::ratlp;

namespace {

Constraint row(std::initializer_list<std::pair<int, int>> terms, long rhs) {
  Constraint c;
  for (auto [col, coef] : terms) c.terms.emplace_back(col, Rat(coef));
  c.rhs = Rat(rhs);
  return c;
}

}  // namespace

TEST_CASE("maximize over a box") {
  // 0 <= x <= 3, 0 <= y <= 5, maximize x + y
  std::vector<Constraint> cons = {row({{0, 1}}, 3), row({{0, -1}}, 0),
                                  row({{1, 1}}, 5), row({{1, -1}}, 0)};
  const auto sol = maximize(2, cons, {Rat(1), Rat(1)});
  REQUIRE(sol.status == Status::Optimal);
  CHECK(sol.x[0] == 3);
  CHECK(sol.x[1] == 5);
  CHECK(sol.objective == 8);
}

TEST_CASE("free variables and negative rhs") {
  // x <= -2, -x <= 5  =>  -5 <= x <= -2; maximize x
  std::vector<Constraint> cons = {row({{0, 1}}, -2), row({{0, -1}}, 5)};
  const auto sol = maximize(1, cons, {Rat(1)});
  REQUIRE(sol.status == Status::Optimal);
  CHECK(sol.x[0] == -2);
}

TEST_CASE("infeasible and unbounded detection") {
  std::vector<Constraint> inf = {row({{0, 1}}, 1), row({{0, -1}}, -2)};
  CHECK(maximize(1, inf, {Rat(1)}).status == Status::Infeasible);

  std::vector<Constraint> unb = {row({{0, -1}}, 0)};
  CHECK(maximize(1, unb, {Rat(1)}).status == Status::Unbounded);
}

TEST_CASE("rational optimum is exact") {
  // x + 2y <= 1, 3x + y <= 1, x,y >= 0; maximize x + y -> (1/5, 2/5)
  std::vector<Constraint> cons = {row({{0, 1}, {1, 2}}, 1), row({{0, 3}, {1, 1}}, 1),
                                  row({{0, -1}}, 0), row({{1, -1}}, 0)};
  const auto sol = maximize(2, cons, {Rat(1), Rat(1)});
  REQUIRE(sol.status == Status::Optimal);
  CHECK(sol.x[0] == Rat(1, 5));
  CHECK(sol.x[1] == Rat(2, 5));
  CHECK(sol.objective == Rat(3, 5));
}

TEST_CASE("degenerate pivoting terminates (Beale-style)") {
  // classic cycling example; Bland's rule must terminate at the optimum
  std::vector<Constraint> cons(3);
  cons[0].terms = {{0, Rat(1, 4)}, {1, Rat(-60)}, {2, Rat(-1, 25)}, {3, Rat(9)}};
  cons[0].rhs = 0;
  cons[1].terms = {{0, Rat(1, 2)}, {1, Rat(-90)}, {2, Rat(-1, 50)}, {3, Rat(3)}};
  cons[1].rhs = 0;
  cons[2].terms = {{2, Rat(1)}};
  cons[2].rhs = 1;
  for (int v = 0; v < 4; ++v) {
    Constraint nn;
    nn.terms = {{v, Rat(-1)}};
    nn.rhs = 0;
    cons.push_back(nn);
  }
  const auto sol = maximize(4, cons, {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)});
  REQUIRE(sol.status == Status::Optimal);
  CHECK(sol.objective == Rat(1, 20));
}

TEST_CASE("find_feasible matches maximize feasibility") {
  std::vector<Constraint> cons = {row({{0, 1}, {1, 1}}, 4), row({{0, -1}}, -1),
                                  row({{1, -1}}, -1)};
  CHECK(find_feasible(2, cons).status == Status::Optimal);
  cons.push_back(row({{0, 1}}, 0));
  CHECK(find_feasible(2, cons).status == Status::Infeasible);
}

TEST_CASE("chebyshev center of a box") {
  // [0,2] x [0,6]: center x=1, y anywhere in [1,5], radius 1
  std::vector<Constraint> cons = {row({{0, 1}}, 2), row({{0, -1}}, 0),
                                  row({{1, 1}}, 6), row({{1, -1}}, 0)};
  const auto result = chebyshev_center(2, cons);
  REQUIRE(result.status == Status::Optimal);
  CHECK(result.radius == 1);
  CHECK(result.center[0] == 1);
  CHECK(result.center[1] >= 1);
  CHECK(result.center[1] <= 5);
}

TEST_CASE("chebyshev radius uses a safe norm bound") {
  // simplex x,y >= 0, x + y <= 1: true radius 1/(2+sqrt(2)) ~ 0.2929
  std::vector<Constraint> cons = {row({{0, -1}}, 0), row({{1, -1}}, 0),
                                  row({{0, 1}, {1, 1}}, 1)};
  const auto result = chebyshev_center(2, cons);
  REQUIRE(result.status == Status::Optimal);
  const double r = result.radius.get_d();
  CHECK(r > 0.29);
  CHECK(r <= 0.2929);  // the rational sqrt(2) over-approximation keeps it inscribed
  // verify the ball is actually inside: distance from center to x+y=1
  const double cx = result.center[0].get_d();
  const double cy = result.center[1].get_d();
  CHECK((1.0 - cx - cy) / std::sqrt(2.0) >= r - 1e-15);
  CHECK(cx >= r - 1e-15);
  CHECK(cy >= r - 1e-15);
}

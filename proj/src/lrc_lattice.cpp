#include "hive/lrc_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

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

struct PointHash {
  size_t operator()(const std::vector<long long>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (long long x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};

using PointSet = std::unordered_set<std::vector<long long>, PointHash>;

}  // namespace

std::vector<long long> max_lp_hive(const WeightTriple& triple) {
  if (!triple.integral()) throw InvalidSpec("max_lp_hive requires an integer triple");
  const HivePolytope poly(triple);
  const int dim = poly.dim();
  const auto sol = ratlp::maximize(dim, to_constraints(poly, 0),
                                   std::vector<ratlp::Rat>(dim, 1));
  if (sol.status == ratlp::Status::Infeasible) {
    throw InfeasibleLP("no hive exists for this triple");
  }
  if (sol.status == ratlp::Status::Unbounded) {
    throw UnboundedPolytope("hive polytope should be bounded");
  }
  std::vector<long long> x(dim);
  for (int c = 0; c < dim; ++c) {
    if (sol.x[c].get_den() != 1) {
      throw NonIntegralOptimum("max LP optimum is not integral");
    }
    x[c] = sol.x[c].get_num().get_si();
  }
  if (!poly.feasible_int(x)) throw InfeasiblePoint("max LP point infeasible");
  return x;
}

FlexInterval flex(const HivePolytope& poly, const std::vector<long long>& x,
                  int coordinate, long long level) {
  FlexInterval out;
  out.coordinate = coordinate;
  if (!poly.feasible_int(x, level)) throw InfeasiblePoint("flex from infeasible point");
  long long lo = std::numeric_limits<long long>::min() / 4;
  long long hi = std::numeric_limits<long long>::max() / 4;
  for (int r : poly.rows_by_coordinate()[coordinate]) {
    const PolytopeRow& row = poly.rows()[r];
    long long rest = 0;
    int coef = 0;
    for (int t = 0; t < row.size; ++t) {
      if (row.cols[t] == coordinate) coef = row.coefs[t];
      else rest += row.coefs[t] * x[row.cols[t]];
    }
    const long long bound = row.b_int + level - rest;
    if (coef > 0) hi = std::min(hi, bound);
    else lo = std::max(lo, -bound);
  }
  out.lo = lo;
  out.hi = hi;
  out.empty = lo > hi;
  return out;
}

CharWalk::CharWalk(const HivePolytope& poly, std::vector<long long> start,
                   std::uint64_t seed, long long level)
    : poly_(poly), x_(std::move(start)), rng_(seed), level_(level) {
  if (!poly_.feasible_int(x_, level_)) {
    throw InfeasiblePoint("CHAR start is not feasible");
  }
}

const std::vector<long long>& CharWalk::step() {
  const int dim = poly_.dim();
  if (dim == 0 || tight_) return x_;
  if (!first_move_done_) {
    // scan in index order for the first coordinate able to move
    int chosen = -1;
    for (int c = 0; c < dim; ++c) {
      const FlexInterval f = flex(poly_, x_, c, level_);
      if (f.width() > 1) {
        chosen = c;
        x_[c] = rng_.uniform_int(f.lo, f.hi);
        break;
      }
    }
    first_move_done_ = true;
    if (chosen < 0) {
      tight_ = true;
      return x_;
    }
    return x_;
  }
  const int c = static_cast<int>(rng_.uniform_int(0, dim - 1));
  const FlexInterval f = flex(poly_, x_, c, level_);
  x_[c] = rng_.uniform_int(f.lo, f.hi);
  return x_;
}

UniqueAccumulation unique_accumulate(const HivePolytope& poly,
                                     const std::vector<long long>& start,
                                     std::uint64_t seed, long long stall_threshold,
                                     long long level) {
  UniqueAccumulation out;
  CharWalk walk(poly, start, seed, level);
  PointSet seen;
  seen.insert(start);
  const int dim = std::max(1, poly.dim());
  long long since_new = 0;
  auto threshold = [&]() {
    return stall_threshold > 0
               ? stall_threshold
               : 50LL * dim * (static_cast<long long>(seen.size()) + 1);
  };
  while (since_new < threshold()) {
    const auto& x = walk.step();
    ++out.steps;
    if (walk.tight()) break;
    if (seen.insert(x).second) since_new = 0;
    else ++since_new;
  }
  out.count = static_cast<long long>(seen.size());
  out.points.assign(seen.begin(), seen.end());
  out.tight = walk.tight();
  if (walk.tight()) {
    // A tight start with remaining LP volume one contraction down is exactly
    // the coordinate-alignment trap: flag it rather than trusting the count.
    const auto deeper = ratlp::find_feasible(
        poly.dim(), to_constraints(poly, level - 1));
    out.stalled_flag = deeper.status == ratlp::Status::Optimal;
  } else if (poly.dim() > 0) {
    // accumulated coordinate ranges should reach the LP bounds of this level;
    // a gap suggests lattice volume the walk's axes cannot reach
    const auto bounds = coordinate_bounds(poly, level);
    if (bounds) {
      for (int c = 0; c < poly.dim() && !out.stalled_flag; ++c) {
        long long lo = out.points.front()[c], hi = lo;
        for (const auto& p : out.points) {
          lo = std::min(lo, p[c]);
          hi = std::max(hi, p[c]);
        }
        if (lo > (*bounds)[c].first || hi < (*bounds)[c].second) {
          out.stalled_flag = true;
        }
      }
    }
  }
  return out;
}

ContractionSchedule contraction_schedule(const HivePolytope& poly) {
  ContractionSchedule sched;
  long long xi = 0;
  for (;;) {
    const auto sol = ratlp::find_feasible(poly.dim(), to_constraints(poly, xi));
    if (sol.status == ratlp::Status::Infeasible) break;
    --xi;
  }
  if (xi == 0) throw InfeasibleLP("polytope infeasible at level 0");
  sched.xi_star = xi;
  sched.xi_tilde = std::min(0LL, sched.xi_star + 2);
  for (long long level = sched.xi_tilde; level < 0; level += 2) {
    sched.levels.push_back(level);
  }
  sched.levels.push_back(0);
  return sched;
}

LatticeLrcResult lattice_lrc(const WeightTriple& triple, double rel_error,
                             std::uint64_t seed) {
  if (!triple.integral()) throw InvalidSpec("lattice_lrc requires an integer triple");
  LatticeLrcResult result;
  const HivePolytope poly(triple);

  std::vector<long long> start;
  try {
    start = max_lp_hive(triple);
  } catch (const InfeasibleLP&) {
    result.estimate = 0.0;
    result.infeasible = true;
    return result;
  }
  result.schedule = contraction_schedule(poly);
  const auto& levels = result.schedule.levels;

  if (result.schedule.xi_tilde == 0) {
    // branch A: the original hive is small enough to enumerate stochastically
    UniqueAccumulation acc =
        unique_accumulate(poly, start, derive_seed(seed, 1), 0, 0);
    result.inner_count = acc.count;
    result.stalled_flag = acc.stalled_flag;
    result.samples = acc.steps;
    result.estimate = static_cast<double>(acc.count);
    return result;
  }

  // branch B: walk each outer level counting hits in the level below; the
  // hits seed the next walk down, and the last level's hits seed the
  // innermost unique accumulation.
  const size_t first_level_idx = 0;
  const int num_ratios = static_cast<int>(levels.size()) - 1;
  const double per_ratio_half_width =
      std::max(1e-4, rel_error / std::sqrt(std::max(1, num_ratios)));
  const int dim = poly.dim();
  const long long min_samples = 200LL * dim;
  const long long max_samples = 4000000;

  std::vector<std::vector<long long>> outer_seeds = {start};
  for (size_t t = levels.size(); t-- > first_level_idx + 1;) {
    const long long outer = levels[t];
    const long long inner_lv = levels[t - 1];
    // restart uniformly over points already known inside the outer level
    Xoshiro256 pick(derive_seed(seed, 2, static_cast<std::uint64_t>(t)));
    const auto& s0 =
        outer_seeds[static_cast<size_t>(pick.uniform_int(0, static_cast<long long>(outer_seeds.size()) - 1))];
    CharWalk walk(poly, s0, derive_seed(seed, 3, static_cast<std::uint64_t>(t)), outer);
    for (int s = 0; s < 50 * dim; ++s) walk.step();

    RatioEstimate ratio;
    ratio.outer_level = outer;
    ratio.inner_level = inner_lv;
    std::vector<std::vector<long long>> inner_hits;
    // points saved from the previous (wider) ratio are near-uniform in this
    // outer level: reuse them as primed samples before walking for more
    if (outer_seeds.size() > 1) {
      for (const auto& p : outer_seeds) {
        ++ratio.total;
        if (poly.feasible_int(p, inner_lv)) {
          ++ratio.hits;
          inner_hits.push_back(p);
        }
      }
    }
    const int thin = std::max(1, dim);
    for (;;) {
      for (int s = 0; s < thin; ++s) walk.step();
      const auto& x = walk.current();
      ++ratio.total;
      if (poly.feasible_int(x, inner_lv)) {
        ++ratio.hits;
        if (inner_hits.size() < 4096) inner_hits.push_back(x);
      }
      if (ratio.total >= min_samples && ratio.hits > 0) {
        const double p = static_cast<double>(ratio.hits) / static_cast<double>(ratio.total);
        const double half = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(ratio.total));
        if (half <= per_ratio_half_width * p) break;
      }
      if (ratio.total >= max_samples) break;
    }
    result.samples += ratio.total * thin;
    if (ratio.hits == 0) {
      // outer walk never reached the inner body; treat as a stall
      result.stalled_flag = true;
      ratio.ratio = 1.0;
    } else {
      ratio.ratio = static_cast<double>(ratio.total) / static_cast<double>(ratio.hits);
    }
    result.ratios.push_back(ratio);
    if (!inner_hits.empty()) outer_seeds = std::move(inner_hits);
  }
  std::reverse(result.ratios.begin(), result.ratios.end());

  // innermost count, seeded from the sampled interior points of xi_tilde
  Xoshiro256 pick(derive_seed(seed, 4));
  const auto& inner_start =
      outer_seeds[static_cast<size_t>(pick.uniform_int(0, static_cast<long long>(outer_seeds.size()) - 1))];
  UniqueAccumulation inner = unique_accumulate(poly, inner_start, derive_seed(seed, 1),
                                               0, result.schedule.xi_tilde);
  // every sampled interior point is a distinct lattice point of this level
  PointSet inner_points(inner.points.begin(), inner.points.end());
  for (const auto& p : outer_seeds) inner_points.insert(p);
  result.inner_count = static_cast<long long>(inner_points.size());
  result.stalled_flag = result.stalled_flag || inner.stalled_flag;
  result.samples += inner.steps;

  double estimate = static_cast<double>(result.inner_count);
  for (const RatioEstimate& r : result.ratios) estimate *= r.ratio;
  result.estimate = estimate;
  return result;
}

}  // namespace hive

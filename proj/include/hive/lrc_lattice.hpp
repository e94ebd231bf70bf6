#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hive/lrc_oracle.hpp"
#include "hive/polytope.hpp"
#include "hive/rng.hpp"

namespace hive {

/**
 * Largest-coefficient integer hive: exact rational LP maximizing the sum of
 * interior coordinates. The optimum is verified integral (raising
 * NonIntegralOptimum otherwise) and feasible; InfeasibleLP means no hive
 * exists and the LRC is 0.
 */
std::vector<long long> max_lp_hive(const WeightTriple& triple);

/**
 * Exact closed integer interval a single coordinate may take with all others
 * fixed, from the <= 12 rhombus rows touching it. Always contains the current
 * value of a feasible point.
 */
struct FlexInterval {
  int coordinate = -1;
  long long lo = 0;
  long long hi = 0;
  bool empty = false;
  long long width() const { return empty ? 0 : hi - lo + 1; }
};

FlexInterval flex(const HivePolytope& poly, const std::vector<long long>& x,
                  int coordinate, long long level = 0);

/**
 * Coordinate hit-and-run on the integer lattice of A x <= b + level. Every
 * emitted point is feasible by construction; there is no rejection step. The
 * first move scans coordinates in index order until one has flex; subsequent
 * coordinates are drawn uniformly from the full index set.
 */
class CharWalk {
 public:
  CharWalk(const HivePolytope& poly, std::vector<long long> start,
           std::uint64_t seed, long long level = 0);

  /** Advance one step and return the current point. */
  const std::vector<long long>& step();
  const std::vector<long long>& current() const { return x_; }

  /** No coordinate can take another value: the hive is tight. */
  bool tight() const { return tight_; }

 private:
  const HivePolytope& poly_;
  std::vector<long long> x_;
  Xoshiro256 rng_;
  long long level_;
  bool first_move_done_ = false;
  bool tight_ = false;
};

struct UniqueAccumulation {
  long long count = 0;
  std::vector<std::vector<long long>> points;
  long long steps = 0;
  bool tight = false;
  /** Walk stalled while the next LP contraction still has volume (the
      coordinate-alignment trap): the count may under-represent the lattice. */
  bool stalled_flag = false;
};

/**
 * Run a CHAR walk recording distinct lattice points until `stall_threshold`
 * consecutive steps add nothing new. Threshold <= 0 uses the adaptive default
 * 50 * dim * (unique_count + 1). The count is a lower bound on the true
 * lattice count.
 */
UniqueAccumulation unique_accumulate(const HivePolytope& poly,
                                     const std::vector<long long>& start,
                                     std::uint64_t seed, long long stall_threshold = 0,
                                     long long level = 0);

/**
 * Contraction ladder: xi_star is the first infeasible level of
 * A x <= b + xi (xi = 0, -1, -2, ...), xi_tilde = min(0, xi_star + 2), and
 * levels climb from xi_tilde in steps of 2 with 0 appended when xi_tilde is
 * odd.
 */
struct ContractionSchedule {
  long long xi_star = 0;
  long long xi_tilde = 0;
  std::vector<long long> levels;  // ascending, ends at 0
};

ContractionSchedule contraction_schedule(const HivePolytope& poly);

struct RatioEstimate {
  long long outer_level = 0;
  long long inner_level = 0;
  long long hits = 0;
  long long total = 0;
  double ratio = 1.0;  // outer volume / inner volume = total / hits
};

struct LatticeLrcResult {
  double estimate = 0.0;
  ContractionSchedule schedule;
  std::vector<RatioEstimate> ratios;
  long long inner_count = 0;
  bool stalled_flag = false;
  bool infeasible = false;  // no hive exists; the LRC is 0
  long long samples = 0;
};

/**
 * Telescoping lattice-volume estimate: the innermost contracted hive is
 * counted by unique accumulation and each successive volume ratio is
 * estimated by CHAR on the outer level counting hits in the inner one, with
 * inner hits reused to seed the next walk.
 */
LatticeLrcResult lattice_lrc(const WeightTriple& triple, double rel_error,
                             std::uint64_t seed);

}  // namespace hive

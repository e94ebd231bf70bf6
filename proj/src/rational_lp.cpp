#include "hive/rational_lp.hpp"

#include <algorithm>
#include <cmath>

namespace hive::ratlp {

namespace {

// Dense tableau simplex in exact rationals. Columns are laid out as
// [x+ (nv) | x- (nv) | slacks (m) | artificials], rhs kept separately.
class Tableau {
 public:
  Tableau(int nvars, const std::vector<Constraint>& cons) : nv_(nvars) {
    m_ = static_cast<int>(cons.size());
    nslack_ = m_;
    rows_.assign(m_, {});
    rhs_.assign(m_, 0);
    basis_.assign(m_, -1);

    // artificials are appended lazily for rows whose slack got negated
    int width = 2 * nv_ + nslack_;
    for (int r = 0; r < m_; ++r) {
      rows_[r].assign(width, 0);
      for (const auto& [col, coef] : cons[r].terms) {
        rows_[r][col] += coef;
        rows_[r][nv_ + col] -= coef;
      }
      rows_[r][2 * nv_ + r] = 1;
      rhs_[r] = cons[r].rhs;
      if (rhs_[r] < 0) {
        for (auto& v : rows_[r]) v = -v;
        rhs_[r] = -rhs_[r];
        needs_artificial_.push_back(r);
      } else {
        basis_[r] = 2 * nv_ + r;
      }
    }
    nart_ = static_cast<int>(needs_artificial_.size());
    if (nart_ > 0) {
      for (int r = 0; r < m_; ++r) rows_[r].resize(width + nart_, 0);
      int a = 0;
      for (int r : needs_artificial_) {
        rows_[r][width + a] = 1;
        basis_[r] = width + a;
        ++a;
      }
    }
    ncols_ = width + nart_;
  }

  /** Minimize the artificial sum; returns false when the system is infeasible. */
  bool phase1() {
    if (nart_ == 0) return true;
    std::vector<Rat> cost(ncols_, 0);
    Rat z = 0;
    // artificial columns carry unit cost; eliminate the basic ones
    for (int r : needs_artificial_) {
      for (int c = 0; c < ncols_; ++c) cost[c] -= rows_[r][c];
      z -= rhs_[r];
    }
    for (int a = 0; a < nart_; ++a) cost[2 * nv_ + nslack_ + a] += 1;
    run(cost, z, /*forbid_artificials=*/false);
    if (z != 0) return false;
    drop_basic_artificials();
    return true;
  }

  /** Minimize cost (callers negate to maximize). Returns false when unbounded. */
  bool phase2(const std::vector<Rat>& obj_min) {
    std::vector<Rat> cost(ncols_, 0);
    for (int i = 0; i < nv_ && i < static_cast<int>(obj_min.size()); ++i) {
      cost[i] = obj_min[i];
      cost[nv_ + i] = -obj_min[i];
    }
    Rat z = 0;
    for (int r = 0; r < m_; ++r) {
      const int b = basis_[r];
      if (b >= 0 && cost[b] != 0) {
        const Rat f = cost[b];
        for (int c = 0; c < ncols_; ++c) cost[c] -= f * rows_[r][c];
        z -= f * rhs_[r];
      }
    }
    return run(cost, z, /*forbid_artificials=*/true);
  }

  std::vector<Rat> extract(int nvars) const {
    std::vector<Rat> x(nvars, 0);
    for (int r = 0; r < m_; ++r) {
      const int b = basis_[r];
      if (b >= 0 && b < nv_) x[b] += rhs_[r];
      else if (b >= nv_ && b < 2 * nv_) x[b - nv_] -= rhs_[r];
    }
    return x;
  }

 private:
  bool is_artificial(int c) const { return c >= 2 * nv_ + nslack_; }

  // Bland's rule simplex loop on the current cost row.
  bool run(std::vector<Rat>& cost, Rat& z, bool forbid_artificials) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < ncols_; ++c) {
        if (forbid_artificials && is_artificial(c)) continue;
        if (cost[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m_; ++r) {
        if (rows_[r][enter] > 0) {
          Rat ratio = rhs_[r] / rows_[r][enter];
          if (leave < 0 || ratio < best ||
              (ratio == best && basis_[r] < basis_[leave])) {
            leave = r;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter, cost, z);
    }
  }

  void pivot(int r, int c, std::vector<Rat>& cost, Rat& z) {
    const Rat p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    rhs_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rat f = rows_[i][c];
      for (int j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (cost[c] != 0) {
      const Rat f = cost[c];
      for (int j = 0; j < ncols_; ++j) cost[j] -= f * rows_[r][j];
      z -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // After phase 1, pivot out any artificial still basic at zero; a row with no
  // eligible pivot column is redundant and is blanked.
  void drop_basic_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < 0 || !is_artificial(basis_[r])) continue;
      int c = -1;
      for (int j = 0; j < 2 * nv_ + nslack_; ++j) {
        if (rows_[r][j] != 0) {
          c = j;
          break;
        }
      }
      if (c < 0) {
        std::fill(rows_[r].begin(), rows_[r].end(), Rat(0));
        rhs_[r] = 0;
        basis_[r] = -1;
        continue;
      }
      std::vector<Rat> dummy(ncols_, 0);
      Rat zd = 0;
      pivot(r, c, dummy, zd);
    }
  }

  int nv_, m_, nslack_, nart_ = 0, ncols_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<int> basis_;
  std::vector<int> needs_artificial_;
};

}  // namespace

Solution maximize(int nvars, const std::vector<Constraint>& cons,
                  const std::vector<Rat>& obj) {
  Tableau tab(nvars, cons);
  Solution sol;
  if (!tab.phase1()) {
    sol.status = Status::Infeasible;
    return sol;
  }
  std::vector<Rat> obj_min(obj.size());
  for (size_t i = 0; i < obj.size(); ++i) obj_min[i] = -obj[i];
  if (!tab.phase2(obj_min)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x = tab.extract(nvars);
  sol.objective = 0;
  for (int i = 0; i < nvars && i < static_cast<int>(obj.size()); ++i) {
    sol.objective += obj[i] * sol.x[i];
  }
  return sol;
}

Solution find_feasible(int nvars, const std::vector<Constraint>& cons) {
  return maximize(nvars, cons, std::vector<Rat>(nvars, 0));
}

ChebyshevResult chebyshev_center(int nvars, const std::vector<Constraint>& cons) {
  // rational over-approximations of sqrt(q) for q = 0..4; rows here have at
  // most four +-1 entries, so ||a||^2 is the nonzero count
  static const Rat kNormBound[5] = {Rat(0), Rat(1), Rat(99, 70), Rat(97, 56), Rat(2)};

  std::vector<Constraint> aug = cons;
  const int rvar = nvars;
  for (auto& c : aug) {
    Rat norm2 = 0;
    for (const auto& [col, coef] : c.terms) norm2 += coef * coef;
    Rat bound;
    if (norm2 <= 4 && norm2.get_den() == 1) {
      bound = kNormBound[norm2.get_num().get_si()];
    } else {
      // ceil(sqrt) as a coarse rational upper bound for general rows
      const double approx = std::sqrt(norm2.get_d());
      bound = Rat(static_cast<long>(std::ceil(approx * 1024.0)), 1024);
    }
    if (bound != 0) c.terms.emplace_back(rvar, bound);
  }
  Constraint nonneg;
  nonneg.terms.emplace_back(rvar, Rat(-1));
  nonneg.rhs = 0;
  aug.push_back(nonneg);

  std::vector<Rat> obj(nvars + 1, 0);
  obj[rvar] = 1;
  Solution sol = maximize(nvars + 1, aug, obj);

  ChebyshevResult out;
  out.status = sol.status;
  if (sol.status == Status::Optimal) {
    out.center.assign(sol.x.begin(), sol.x.begin() + nvars);
    out.radius = sol.x[rvar];
  } else if (sol.status == Status::Unbounded) {
    throw UnboundedPolytope("polytope admits arbitrarily large inscribed balls");
  }
  return out;
}

}  // namespace hive::ratlp

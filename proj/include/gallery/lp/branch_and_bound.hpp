#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "gallery/lp/simplex.hpp"
#include "gallery/rational.hpp"

namespace gallery::lp {

inline double integral_floor(double v) { return std::floor(v + Tol<double>::eps); }
inline Q integral_floor(const Q& v) {
  Z f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return Q(f);
}
inline double integral_ceil(double v) { return std::ceil(v - Tol<double>::eps); }
inline Q integral_ceil(const Q& v) { return Q(-integral_floor(Q(-v))); }

template <typename T>
struct IntegerResult {
  Status status = Status::IterationLimit;  // Optimal: proven; Infeasible: no integer point
  T objective{};
  std::vector<T> x;  // best integer point found; may be nonempty on IterationLimit
  long nodes = 0;
};

/// Depth-first branch and bound over the structural columns in `cols`
/// (most-fractional branching, upper branch explored first, smallest index on
/// ties). The relaxation is modified in place through bound changes and every
/// bound is restored before returning; the basis ends wherever the last node
/// left it, so reoptimize before reading LP state afterwards.
///
/// With integral_objective set, nodes are pruned against the rounded-up LP
/// bound, which is valid whenever every feasible integer point has an integer
/// objective value (unit costs, for instance).
template <typename T>
IntegerResult<T> branch_and_bound(Simplex<T>& lp, const std::vector<int>& cols,
                                  bool integral_objective = false,
                                  long max_nodes = -1,
                                  const std::function<bool()>& stop = {}) {
  IntegerResult<T> res;
  bool have_best = false, aborted = false;
  T best{};
  std::vector<T> best_x;

  std::function<void()> dive = [&]() {
    if (aborted || (max_nodes >= 0 && res.nodes >= max_nodes) || (stop && stop())) {
      aborted = true;
      return;
    }
    ++res.nodes;
    Status st = lp.reoptimize();
    if (st == Status::Infeasible) return;
    if (st == Status::IterationLimit) {
      aborted = true;
      return;
    }
    T obj = lp.objective();
    if (have_best) {
      T bound = integral_objective ? integral_ceil(obj) : obj;
      if (!Tol<T>::neg(bound - best)) return;  // cannot strictly improve
    }
    int pick = -1;
    T pick_score(0), pick_val(0);
    for (int j : cols) {
      T v = lp.value_of(j);
      T f = v - integral_floor(v);
      T score = T(1) - f;
      if (f < score) score = f;
      if (Tol<T>::zero(score)) continue;
      if (pick < 0 || score > pick_score) {
        pick = j;
        pick_score = score;
        pick_val = v;
      }
    }
    if (pick < 0) {
      if (!have_best || Tol<T>::neg(obj - best)) {
        best = std::move(obj);
        best_x = lp.solution();
        have_best = true;
      }
      return;
    }
    T lo = lp.lower(pick), hi = lp.upper(pick);
    T fl = integral_floor(pick_val);
    T up = T(fl + 1);
    if (!(up > hi)) {
      lp.set_bounds(pick, up, hi);
      dive();
    }
    if (!(fl < lo)) {
      lp.set_bounds(pick, lo, fl);
      dive();
    }
    lp.set_bounds(pick, lo, hi);
  };
  dive();

  if (have_best) {
    res.objective = best;
    res.x = std::move(best_x);
  }
  res.status = aborted ? Status::IterationLimit
                       : (have_best ? Status::Optimal : Status::Infeasible);
  return res;
}

}  // namespace gallery::lp

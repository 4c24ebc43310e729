#pragma once

#include <string>
#include <vector>

#include "gallery/lp/simplex.hpp"

namespace gallery::lp {

struct Certificate {
  bool ok = false;
  std::string issue;  // empty when ok
};

/// Independent optimality check for a claimed primal/dual pair: primal
/// feasibility, dual feasibility, complementary slackness, and matching
/// objectives. Uses only the program data and the solution vectors, never the
/// solver's internal state, so it certifies the solver rather than echoing it.
template <typename T>
Certificate verify_solution(const Program<T>& p, const Solution<T>& s) {
  Certificate cert;
  std::size_t n = p.cost.size(), m = p.rows.size();
  if (s.status != Status::Optimal) {
    cert.issue = "solution is not marked optimal";
    return cert;
  }
  if (s.x.size() != n || s.y.size() != m) {
    cert.issue = "solution shape does not match the program";
    return cert;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (Tol<T>::pos(p.lo[j] - s.x[j]) || Tol<T>::pos(s.x[j] - p.hi[j])) {
      cert.issue = "x" + std::to_string(j) + " violates its bounds";
      return cert;
    }
  }
  std::vector<T> activity(m, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) activity[i] += p.rows[i][j] * s.x[j];
    if (Tol<T>::pos(p.rhs[i] - activity[i])) {
      cert.issue = "row " + std::to_string(i) + " is violated";
      return cert;
    }
    if (Tol<T>::neg(s.y[i])) {
      cert.issue = "dual y" + std::to_string(i) + " is negative";
      return cert;
    }
  }
  // Reduced costs from the duals alone; their sign pins x to a bound.
  T primal_obj(0), dual_obj(0);
  for (std::size_t i = 0; i < m; ++i) dual_obj += s.y[i] * p.rhs[i];
  for (std::size_t j = 0; j < n; ++j) {
    T red = p.cost[j];
    for (std::size_t i = 0; i < m; ++i) red -= s.y[i] * p.rows[i][j];
    if (Tol<T>::pos(red)) {
      if (!Tol<T>::zero(s.x[j] - p.lo[j])) {
        cert.issue = "x" + std::to_string(j) + " has positive reduced cost off its lower bound";
        return cert;
      }
      dual_obj += red * p.lo[j];
    } else if (Tol<T>::neg(red)) {
      if (!Tol<T>::zero(s.x[j] - p.hi[j])) {
        cert.issue = "x" + std::to_string(j) + " has negative reduced cost off its upper bound";
        return cert;
      }
      dual_obj += red * p.hi[j];
    }
    primal_obj += p.cost[j] * s.x[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (Tol<T>::pos(s.y[i]) && Tol<T>::pos(activity[i] - p.rhs[i])) {
      cert.issue = "y" + std::to_string(i) + " is positive on a slack row";
      return cert;
    }
  }
  if (!Tol<T>::zero(primal_obj - s.objective)) {
    cert.issue = "reported objective disagrees with c'x";
    return cert;
  }
  if (!Tol<T>::zero(primal_obj - dual_obj)) {
    cert.issue = "strong duality gap is nonzero";
    return cert;
  }
  cert.ok = true;
  return cert;
}

}  // namespace gallery::lp

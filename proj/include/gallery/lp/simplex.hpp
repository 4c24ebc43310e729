#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gallery/rational.hpp"

namespace gallery::lp {

/// Comparison guards: exact for rationals, epsilon-banded for doubles.
template <typename T>
struct Tol {
  static bool pos(const T& v) { return v > 0; }
  static bool neg(const T& v) { return v < 0; }
  static bool zero(const T& v) { return v == 0; }
};

template <>
struct Tol<double> {
  static constexpr double eps = 1e-9;
  static bool pos(double v) { return v > eps; }
  static bool neg(double v) { return v < -eps; }
  static bool zero(double v) { return v >= -eps && v <= eps; }
};

enum class Status { Optimal, Infeasible, IterationLimit };

enum class VarStatus : unsigned char { Basic, AtLower, AtUpper };

/// Incremental bounded-variable simplex over
///   minimize c'x  subject to  A x >= rhs,  lo <= x <= hi  (finite bounds).
///
/// Rows and columns can be appended between reoptimize calls and variable
/// bounds tightened or relaxed; the current basis is kept, so reoptimization
/// after such edits is warm (dual simplex after new rows or bound changes,
/// primal simplex after new columns). All state is deterministic: Dantzig
/// pricing with smallest-index tie breaks, switching to Bland's rule after a
/// run of degenerate pivots.
template <typename T>
class Simplex {
 public:
  /// Append a structural column with entries `coeffs` in existing rows. The
  /// variable enters nonbasic at its lower bound; reduced cost and tableau
  /// column are expressed in the current basis, so column generation keeps
  /// the basis warm.
  int add_variable(const T& lo, const T& hi, const T& cost,
                   const std::vector<std::pair<int, T>>& coeffs = {}) {
    if (hi < lo) throw std::invalid_argument("variable bounds cross");
    int j = n_;
    // B^-1 a via the surplus block: surplus i's tableau column is -B^-1 e_i.
    std::vector<T> col(static_cast<std::size_t>(m_), T(0));
    for (const auto& [i, a] : coeffs) {
      if (i < 0 || i >= m_) throw std::invalid_argument("column names unknown row");
      if (Tol<T>::zero(a)) continue;
      for (int r = 0; r < m_; ++r)
        col[static_cast<std::size_t>(r)] -= tab_[r][static_cast<std::size_t>(n_ + i)] * a;
    }
    T red = cost;
    for (int r = 0; r < m_; ++r) {
      int bg = basic_[r];
      if (bg >= 0) red -= cost_[static_cast<std::size_t>(bg)] * col[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < m_; ++r) {
      tab_[r].insert(tab_[r].begin() + n_, col[static_cast<std::size_t>(r)]);
      if (!Tol<T>::zero(lo)) v_[r] -= col[static_cast<std::size_t>(r)] * lo;
    }
    d_.insert(d_.begin() + n_, std::move(red));
    stat_.insert(stat_.begin() + n_, VarStatus::AtLower);
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(cost);
    ++n_;
    return j;
  }

  /// Append the row  sum coeffs >= rhs. Coefficients refer to structural
  /// columns created earlier. The row's surplus starts basic, so the basis
  /// stays dual feasible and reoptimize repairs primal feasibility.
  int add_row(const std::vector<std::pair<int, T>>& coeffs, const T& rhs) {
    std::vector<T> raw(static_cast<std::size_t>(n_) + m_, T(0));
    for (const auto& [j, a] : coeffs) {
      if (j < 0 || j >= n_) throw std::invalid_argument("row names unknown column");
      raw[static_cast<std::size_t>(j)] += a;
    }
    // Eliminate the current basic columns from the new row.
    std::vector<T> expanded = raw;
    for (int r = 0; r < m_; ++r) {
      const T& f = raw[static_cast<std::size_t>(global_of(basic_[r]))];
      if (Tol<T>::zero(f)) continue;
      for (std::size_t g = 0; g < expanded.size(); ++g)
        expanded[g] -= f * tab_[r][g];
    }
    // Surplus column is -1 in the raw row; negate so the new basic variable
    // (the surplus) carries coefficient +1 in its own row.
    for (T& v : expanded) v = -v;
    for (std::vector<T>& row : tab_) row.push_back(T(0));
    expanded.push_back(T(1));
    // Surplus value = A_new x - rhs at the current point.
    T sval(-rhs);
    for (const auto& [j, a] : coeffs) sval += a * value_of(j);
    tab_.push_back(std::move(expanded));
    v_.push_back(std::move(sval));
    basic_.push_back(-1 - m_);
    d_.push_back(T(0));
    stat_.push_back(VarStatus::Basic);
    row_rhs_.push_back(rhs);
    ++m_;
    return m_ - 1;
  }

  /// Change a structural variable's bounds (used for branching). A nonbasic
  /// variable keeps its status and snaps to the moved bound.
  void set_bounds(int j, const T& lo, const T& hi) {
    if (hi < lo) throw std::invalid_argument("variable bounds cross");
    VarStatus st = stat_[static_cast<std::size_t>(j)];
    T delta(0);
    if (st == VarStatus::AtLower)
      delta = lo - lo_[static_cast<std::size_t>(j)];
    else if (st == VarStatus::AtUpper)
      delta = hi - hi_[static_cast<std::size_t>(j)];
    lo_[static_cast<std::size_t>(j)] = lo;
    hi_[static_cast<std::size_t>(j)] = hi;
    if (!Tol<T>::zero(delta))
      for (int r = 0; r < m_; ++r) v_[r] -= tab_[r][static_cast<std::size_t>(j)] * delta;
  }

  Status reoptimize(long max_pivots = -1) {
    bland_ = false;
    degenerate_run_ = 0;
    budget_ = max_pivots;
    spent_at_entry_ = pivots_;
    // New columns may arrive dual infeasible; flip them to their other bound.
    for (int g = 0; g < n_ + m_; ++g) {
      if (stat_[static_cast<std::size_t>(g)] == VarStatus::Basic) continue;
      bool bad_low = stat_[static_cast<std::size_t>(g)] == VarStatus::AtLower &&
                     Tol<T>::neg(d_[static_cast<std::size_t>(g)]);
      bool bad_up = stat_[static_cast<std::size_t>(g)] == VarStatus::AtUpper &&
                    Tol<T>::pos(d_[static_cast<std::size_t>(g)]);
      if (!bad_low && !bad_up) continue;
      if (g >= n_)
        throw std::logic_error("surplus column lost dual feasibility");
      flip(g);
    }
    if (primal_feasible()) return finish(primal_simplex());
    return finish(dual_simplex());
  }

  Status status() const { return status_; }
  int cols() const { return n_; }
  int rows() const { return m_; }
  long pivots() const { return pivots_; }

  T objective() const {
    T obj(0);
    for (int j = 0; j < n_; ++j) obj += cost_[static_cast<std::size_t>(j)] * value_of(j);
    return obj;
  }

  std::vector<T> solution() const {
    std::vector<T> x;
    x.reserve(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) x.push_back(value_of(j));
    return x;
  }

  /// Row duals: the reduced cost of row i's surplus column equals y_i.
  std::vector<T> duals() const {
    std::vector<T> y;
    y.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) y.push_back(d_[static_cast<std::size_t>(n_ + i)]);
    return y;
  }

  std::vector<T> reduced_costs() const {
    return std::vector<T>(d_.begin(), d_.begin() + n_);
  }

  const T& lower(int j) const { return lo_[static_cast<std::size_t>(j)]; }
  const T& upper(int j) const { return hi_[static_cast<std::size_t>(j)]; }

  /// Structural value (basic variables read from the basis, nonbasic from
  /// their bound).
  T value_of(int j) const {
    if (stat_[static_cast<std::size_t>(j)] == VarStatus::AtLower)
      return lo_[static_cast<std::size_t>(j)];
    if (stat_[static_cast<std::size_t>(j)] == VarStatus::AtUpper)
      return hi_[static_cast<std::size_t>(j)];
    for (int r = 0; r < m_; ++r)
      if (basic_[r] == j) return v_[r];
    throw std::logic_error("basic column missing from basis");
  }

 private:
  int n_ = 0;  // structural columns; global layout: [0,n_) then surpluses
  int m_ = 0;
  std::vector<std::vector<T>> tab_;  // m_ rows of n_+m_ columns: B^-1 [A|-I]
  std::vector<T> v_;                 // value of each row's basic variable
  std::vector<T> d_;                 // reduced costs, global layout
  std::vector<VarStatus> stat_;      // global layout
  std::vector<int> basic_;           // per row: j >= 0 structural, -1-i surplus
  std::vector<T> lo_, hi_, cost_;    // structural
  std::vector<T> row_rhs_;
  Status status_ = Status::Optimal;
  bool bland_ = false;
  int degenerate_run_ = 0;
  long pivots_ = 0;
  long budget_ = -1;
  long spent_at_entry_ = 0;

  int global_of(int enc) const { return enc >= 0 ? enc : n_ + (-1 - enc); }
  int encode(int g) const { return g < n_ ? g : -1 - (g - n_); }
  bool is_surplus(int g) const { return g >= n_; }

  T glob_lo(int g) const {
    return is_surplus(g) ? T(0) : lo_[static_cast<std::size_t>(g)];
  }
  bool glob_hi(int g, T& out) const {  // false: unbounded above (surplus)
    if (is_surplus(g)) return false;
    out = hi_[static_cast<std::size_t>(g)];
    return true;
  }
  T bound_value(int g) const {
    if (stat_[static_cast<std::size_t>(g)] == VarStatus::AtUpper) {
      T h;
      if (!glob_hi(g, h)) throw std::logic_error("surplus at upper bound");
      return h;
    }
    return glob_lo(g);
  }

  static T tabs(const T& v) { return Tol<T>::neg(v) ? T(-v) : v; }

  bool primal_feasible() const {
    for (int r = 0; r < m_; ++r) {
      int g = global_of(basic_[r]);
      if (v_[r] < glob_lo(g)) return false;
      T h;
      if (glob_hi(g, h) && v_[r] > h) return false;
    }
    return true;
  }

  Status finish(Status st) {
    status_ = st;
    return st;
  }

  bool spent() const {
    return budget_ >= 0 && pivots_ - spent_at_entry_ >= budget_;
  }

  void note_progress(bool degenerate) {
    degenerate_run_ = degenerate ? degenerate_run_ + 1 : 0;
    if (degenerate_run_ > 64) bland_ = true;
  }

  void flip(int g) {
    T h(0);
    if (!glob_hi(g, h)) throw std::logic_error("cannot flip unbounded column");
    bool to_upper = stat_[static_cast<std::size_t>(g)] == VarStatus::AtLower;
    T delta = to_upper ? T(h - glob_lo(g)) : T(glob_lo(g) - h);
    for (int r = 0; r < m_; ++r) v_[r] -= tab_[r][static_cast<std::size_t>(g)] * delta;
    stat_[static_cast<std::size_t>(g)] = to_upper ? VarStatus::AtUpper : VarStatus::AtLower;
  }

  /// Gauss-Jordan pivot bringing global column g into the basis at row r.
  /// dir/t describe the entering move; leave_st is the bound the leaving
  /// variable lands on.
  void pivot(int r, int g, int dir, const T& t, VarStatus leave_st) {
    T enter_val = bound_value(g);
    if (dir > 0)
      enter_val += t;
    else
      enter_val -= t;
    if (!Tol<T>::zero(t))
      for (int rr = 0; rr < m_; ++rr) {
        T step = tab_[rr][static_cast<std::size_t>(g)] * t;
        if (dir > 0)
          v_[rr] -= step;
        else
          v_[rr] += step;
      }
    int leave = global_of(basic_[r]);
    stat_[static_cast<std::size_t>(leave)] = leave_st;
    T piv = tab_[r][static_cast<std::size_t>(g)];
    if (Tol<T>::zero(piv)) throw std::logic_error("zero pivot");
    for (T& a : tab_[r]) a /= piv;
    for (int rr = 0; rr < m_; ++rr) {
      if (rr == r) continue;
      T f = tab_[rr][static_cast<std::size_t>(g)];
      if (Tol<T>::zero(f)) continue;
      for (std::size_t c = 0; c < tab_[rr].size(); ++c)
        tab_[rr][c] -= f * tab_[r][c];
      tab_[rr][static_cast<std::size_t>(g)] = T(0);
    }
    T fd = d_[static_cast<std::size_t>(g)];
    if (!Tol<T>::zero(fd))
      for (std::size_t c = 0; c < d_.size(); ++c) d_[c] -= fd * tab_[r][c];
    d_[static_cast<std::size_t>(g)] = T(0);
    v_[r] = std::move(enter_val);
    basic_[r] = encode(g);
    stat_[static_cast<std::size_t>(g)] = VarStatus::Basic;
    ++pivots_;
  }

  Status primal_simplex() {
    for (;;) {
      if (spent()) return Status::IterationLimit;
      int enter = -1, dir = 0;
      T best(0);
      for (int g = 0; g < n_ + m_; ++g) {
        VarStatus st = stat_[static_cast<std::size_t>(g)];
        int cand_dir = 0;
        if (st == VarStatus::AtLower && Tol<T>::neg(d_[static_cast<std::size_t>(g)]))
          cand_dir = 1;
        else if (st == VarStatus::AtUpper && Tol<T>::pos(d_[static_cast<std::size_t>(g)]))
          cand_dir = -1;
        if (cand_dir == 0) continue;
        if (bland_) {
          enter = g;
          dir = cand_dir;
          break;
        }
        T score = tabs(d_[static_cast<std::size_t>(g)]);
        if (enter < 0 || score > best) {
          best = std::move(score);
          enter = g;
          dir = cand_dir;
        }
      }
      if (enter < 0) return Status::Optimal;

      // Ratio test: smallest step that drives a basic variable (or the
      // entering variable itself) to a bound. Under Bland's rule ties go to
      // the smallest variable index, which is what guarantees termination.
      bool have_t = false, own_bound = false;
      T t(0);
      int leave_row = -1, leave_bg = -1;
      VarStatus leave_st = VarStatus::AtLower;
      {
        T h;
        if (glob_hi(enter, h)) {
          t = h - glob_lo(enter);
          have_t = true;
          own_bound = true;
          leave_bg = enter;
        }
      }
      for (int r = 0; r < m_; ++r) {
        const T& a = tab_[r][static_cast<std::size_t>(enter)];
        int bg = global_of(basic_[r]);
        T cand(0);
        VarStatus hit = VarStatus::AtLower;
        T e = dir > 0 ? a : T(-a);
        if (Tol<T>::pos(e)) {
          cand = (v_[r] - glob_lo(bg)) / e;
          hit = VarStatus::AtLower;
        } else if (Tol<T>::neg(e)) {
          T h;
          if (!glob_hi(bg, h)) continue;
          cand = (h - v_[r]) / T(-e);
          hit = VarStatus::AtUpper;
        } else {
          continue;
        }
        if (Tol<T>::neg(cand)) cand = T(0);
        bool better = !have_t || cand < t ||
                      (bland_ && !(t < cand) && bg < leave_bg);
        if (better) {
          t = std::move(cand);
          have_t = true;
          own_bound = false;
          leave_row = r;
          leave_bg = bg;
          leave_st = hit;
        }
      }
      if (!have_t)
        throw std::logic_error("improving ray escaped a bounded objective");
      note_progress(Tol<T>::zero(t));
      if (own_bound) {
        flip(enter);
        ++pivots_;
      } else {
        pivot(leave_row, enter, dir, t, leave_st);
      }
    }
  }

  Status dual_simplex() {
    for (;;) {
      if (spent()) return Status::IterationLimit;
      int row = -1, row_bg = -1;
      bool to_lower = true;
      T worst(0);
      for (int r = 0; r < m_; ++r) {
        int bg = global_of(basic_[r]);
        T lo = glob_lo(bg), h;
        bool has_hi = glob_hi(bg, h);
        T viol(0);
        bool low = false;
        if (v_[r] < lo) {
          viol = lo - v_[r];
          low = true;
        } else if (has_hi && v_[r] > h) {
          viol = v_[r] - h;
        } else {
          continue;
        }
        if (!Tol<T>::pos(viol)) continue;
        // Bland mode: leave the infeasible basic with the smallest index.
        bool better = row < 0 || (bland_ ? bg < row_bg : viol > worst);
        if (better) {
          worst = std::move(viol);
          row = r;
          row_bg = bg;
          to_lower = low;
        }
      }
      if (row < 0) return Status::Optimal;

      int enter = -1, dir = 0;
      T best_ratio(0);
      for (int g = 0; g < n_ + m_; ++g) {
        VarStatus st = stat_[static_cast<std::size_t>(g)];
        if (st == VarStatus::Basic) continue;
        const T& a = tab_[row][static_cast<std::size_t>(g)];
        int cand_dir = 0;
        if (to_lower) {
          if (st == VarStatus::AtLower && Tol<T>::neg(a))
            cand_dir = 1;
          else if (st == VarStatus::AtUpper && Tol<T>::pos(a))
            cand_dir = -1;
        } else {
          if (st == VarStatus::AtLower && Tol<T>::pos(a))
            cand_dir = 1;
          else if (st == VarStatus::AtUpper && Tol<T>::neg(a))
            cand_dir = -1;
        }
        if (cand_dir == 0) continue;
        T ratio = tabs(d_[static_cast<std::size_t>(g)]) / tabs(a);
        if (enter < 0 || ratio < best_ratio) {
          best_ratio = std::move(ratio);
          enter = g;
          dir = cand_dir;
          if (bland_ && Tol<T>::zero(best_ratio)) break;
        }
      }
      if (enter < 0) return Status::Infeasible;

      int bg = global_of(basic_[row]);
      T viol(0);
      if (to_lower) {
        viol = glob_lo(bg) - v_[row];
      } else {
        T h(0);
        glob_hi(bg, h);
        viol = v_[row] - h;
      }
      T t = viol / tabs(tab_[row][static_cast<std::size_t>(enter)]);
      note_progress(Tol<T>::zero(d_[static_cast<std::size_t>(enter)]));
      pivot(row, enter, dir, t, to_lower ? VarStatus::AtLower : VarStatus::AtUpper);
    }
  }
};

/// One-shot problem description for tests and tools.
template <typename T>
struct Program {
  std::vector<std::vector<T>> rows;  // dense coefficients, one vector per row
  std::vector<T> rhs;
  std::vector<T> cost;
  std::vector<T> lo, hi;
};

template <typename T>
struct Solution {
  Status status = Status::IterationLimit;
  T objective{};
  std::vector<T> x;
  std::vector<T> y;
  std::vector<T> reduced;
  long pivots = 0;
};

inline std::string scalar_text(const Q& v) { return gallery::to_string(v); }
inline std::string scalar_text(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Debug dump in LP text format (rationals stay exact, so feed the output to
/// an external solver only after rounding).
template <typename T>
std::string format_program(const Program<T>& p) {
  std::ostringstream os;
  os << "Minimize\n obj:";
  for (std::size_t j = 0; j < p.cost.size(); ++j) {
    if (Tol<T>::zero(p.cost[j])) continue;
    os << " + " << scalar_text(p.cost[j]) << " x" << j;
  }
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    os << " r" << i << ":";
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
      if (Tol<T>::zero(p.rows[i][j])) continue;
      os << " + " << scalar_text(p.rows[i][j]) << " x" << j;
    }
    os << " >= " << scalar_text(p.rhs[i]) << "\n";
  }
  os << "Bounds\n";
  for (std::size_t j = 0; j < p.cost.size(); ++j)
    os << " " << scalar_text(p.lo[j]) << " <= x" << j << " <= "
       << scalar_text(p.hi[j]) << "\n";
  os << "End\n";
  return os.str();
}

template <typename T>
Solution<T> solve(const Program<T>& p, long max_pivots = -1) {
  Simplex<T> s;
  for (std::size_t j = 0; j < p.cost.size(); ++j)
    s.add_variable(p.lo[j], p.hi[j], p.cost[j]);
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    std::vector<std::pair<int, T>> coeffs;
    for (std::size_t j = 0; j < p.rows[i].size(); ++j)
      if (!Tol<T>::zero(p.rows[i][j])) coeffs.emplace_back(static_cast<int>(j), p.rows[i][j]);
    s.add_row(coeffs, p.rhs[i]);
  }
  Solution<T> out;
  out.status = s.reoptimize(max_pivots);
  out.pivots = s.pivots();
  if (out.status == Status::Optimal) {
    out.objective = s.objective();
    out.x = s.solution();
    out.y = s.duals();
    out.reduced = s.reduced_costs();
  }
  return out;
}

}  // namespace gallery::lp

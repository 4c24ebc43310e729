#include "gallery/engine/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gallery/lp/branch_and_bound.hpp"
#include "gallery/model/model.hpp"
#include "gallery/sep/separate.hpp"

namespace gallery::engine {

std::string to_string(Mode m) { return m == Mode::Lp ? "lp" : "ip"; }

std::string to_string(Cuts c) {
  switch (c) {
    case Cuts::None: return "none";
    case Cuts::Ec: return "ec";
    case Cuts::Sc3: return "sc3";
    case Cuts::Sc4: return "sc4";
    case Cuts::Sc3Ec: return "sc3+ec";
  }
  return "none";
}

std::string to_string(Arithmetic a) {
  return a == Arithmetic::Exact ? "exact" : "float";
}

Mode parse_mode(const std::string& s) {
  if (s == "lp") return Mode::Lp;
  if (s == "ip") return Mode::Ip;
  throw std::invalid_argument("unknown mode: " + s);
}

Cuts parse_cuts(const std::string& s) {
  if (s == "none") return Cuts::None;
  if (s == "ec") return Cuts::Ec;
  if (s == "sc3") return Cuts::Sc3;
  if (s == "sc4") return Cuts::Sc4;
  if (s == "sc3+ec") return Cuts::Sc3Ec;
  throw std::invalid_argument("unknown cut family: " + s);
}

Arithmetic parse_arithmetic(const std::string& s) {
  if (s == "exact") return Arithmetic::Exact;
  if (s == "float") return Arithmetic::Float;
  throw std::invalid_argument("unknown arithmetic: " + s);
}

namespace {

class Clock {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string value_text(const Q& v) { return gallery::to_string(v); }
std::string value_text(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Q exact(const Q& v) { return v; }
Q exact(double v) { return Q(v); }

/// Snapshot values into exact form; duals are clamped at zero so float noise
/// cannot smuggle negative weights into the separators.
template <typename T>
std::vector<Q> exact_vector(const std::vector<T>& xs, bool clamp_negative) {
  std::vector<Q> out;
  out.reserve(xs.size());
  for (const T& v : xs) {
    Q q = exact(v);
    if (clamp_negative && sign(q) < 0) q = Q(0);
    out.push_back(std::move(q));
  }
  return out;
}

template <typename T>
bool is_one(const T& v) {
  return lp::Tol<T>::zero(T(v - T(1)));
}

template <typename T>
bool integral(const std::vector<T>& xs) {
  for (const T& v : xs)
    if (!lp::Tol<T>::zero(v) && !is_one(v)) return false;
  return true;
}

long to_long(const Q& v) {
  Q f = lp::integral_floor(Q(v + Q(1, 2)));
  return static_cast<long>(f.get_num().get_si());
}
long to_long(double v) { return std::lround(v); }

long ceil_long(const Q& v) {
  Q c = lp::integral_ceil(v);
  return static_cast<long>(c.get_num().get_si());
}
long ceil_long(double v) {
  return static_cast<long>(std::llround(lp::integral_ceil(v)));
}

using CutKey = std::pair<int, std::vector<int>>;

CutKey key_of(const model::CutConstraint& cut) {
  std::vector<int> ids = cut.witnesses;
  std::sort(ids.begin(), ids.end());
  return {static_cast<int>(cut.kind), std::move(ids)};
}

template <typename T>
class Driver {
 public:
  Driver(const geom::Polygon& poly, const Config& cfg)
      : cfg_(cfg), model_(poly) {}

  Result run() {
    for (const geom::Point& v : model_.polygon().vertices()) model_.add_witness(v);
    for (const geom::Point& v : model_.polygon().vertices()) model_.add_guard(v);
    event("init");

    bool clean = true;
    while (!done()) {
      long lb0 = lb_;
      std::optional<long> ub0 = ub_;
      int g0 = model_.guards().size(), w0 = model_.witnesses().size();
      int a0 = static_cast<int>(model_.cuts().size());

      clean = cfg_.mode == Mode::Ip ? primal_phase_ip() : primal_phase_lp();
      if (!clean || done()) break;
      clean = dual_phase();
      if (!clean || done()) break;

      bool moved = lb_ != lb0 || ub_ != ub0 || model_.guards().size() != g0 ||
                   model_.witnesses().size() != w0 ||
                   static_cast<int>(model_.cuts().size()) != a0;
      if (!moved) {
        // Both phases are at a fixpoint: the state can never change again,
        // so waiting out the clock would only replay identical iterations.
        event("stalled");
        break;
      }
    }

    Result res = std::move(res_);
    res.lb = lb_;
    res.ub = ub_;
    res.reason = (ub_ && lb_ == *ub_) ? "optimal" : "time_limit";
    res.guards = std::move(best_guards_);
    for (std::size_t j = 0; j < last_relax_.size(); ++j)
      res.fractional.emplace_back(model_.guards()[static_cast<int>(j)],
                                  exact(last_relax_[j]));
    res.guard_count = model_.guards().size();
    res.witness_count = model_.witnesses().size();
    res.cut_count = static_cast<int>(model_.cuts().size());
    res_ = Result{};
    res.log.push_back({clock_.elapsed(), lb_, ub_, res.guard_count,
                       res.witness_count, res.cut_count, "", res.reason});
    return res;
  }

 private:
  const Config& cfg_;
  Clock clock_;
  model::Model<T> model_;
  Result res_;
  long lb_ = 1;
  std::optional<long> ub_;
  std::vector<geom::Point> best_guards_;
  std::set<CutKey> cut_keys_;
  std::vector<T> last_relax_;
  bool out_of_time_ = false;

  bool done() const { return ub_ && lb_ == *ub_; }

  bool timeout() {
    if (!out_of_time_ && clock_.elapsed() >= cfg_.time_limit_s)
      out_of_time_ = true;
    return out_of_time_;
  }

  void event(const std::string& tag, const std::string& obj = "") {
    res_.log.push_back({clock_.elapsed(), lb_, ub_, model_.guards().size(),
                        model_.witnesses().size(),
                        static_cast<int>(model_.cuts().size()), obj, tag});
  }

  /// Reoptimizes in pivot chunks so the clock stays responsive. False on
  /// timeout; throws when the relaxation is infeasible.
  bool solve_relax() {
    for (;;) {
      lp::Status st = model_.lp().reoptimize(4096);
      if (st == lp::Status::Optimal) {
        last_relax_ = model_.lp().solution();
        return true;
      }
      if (st == lp::Status::Infeasible)
        throw std::runtime_error(
            "relaxation infeasible: some witness sees no guard, which breaks "
            "the standing coverage assumption");
      if (timeout()) return false;
    }
  }

  int add_witnesses(const std::vector<geom::Point>& pts) {
    int fresh = 0;
    for (const geom::Point& p : pts) {
      int before = model_.witnesses().size();
      if (model_.add_witness(p) >= before) ++fresh;
    }
    return fresh;
  }

  int add_guards(const std::vector<geom::Point>& pts) {
    int fresh = 0;
    for (const geom::Point& p : pts) {
      int before = model_.guards().size();
      if (model_.add_guard(p) >= before) ++fresh;
    }
    return fresh;
  }

  /// Runs the configured cut separators against the exact snapshot x and
  /// adds previously unseen rows. Returns how many rows were added.
  int separate_cuts(const std::vector<Q>& xq) {
    if (cfg_.cuts == Cuts::None) return 0;
    std::vector<sep::CutCandidate> cands;
    if (cfg_.cuts == Cuts::Sc3 || cfg_.cuts == Cuts::Sc3Ec)
      cands = sep::separate_set_cover(model_.matrix(), xq, false,
                                      cfg_.max_new_cuts);
    else if (cfg_.cuts == Cuts::Sc4)
      cands = sep::separate_set_cover(model_.matrix(), xq, true,
                                      cfg_.max_new_cuts);
    if (cfg_.cuts == Cuts::Ec || cfg_.cuts == Cuts::Sc3Ec) {
      std::vector<sep::CutCandidate> ec =
          sep::separate_edge_cover(model_.matrix(), xq, cfg_.max_new_cuts);
      for (sep::CutCandidate& c : ec) cands.push_back(std::move(c));
    }
    int added = 0;
    for (sep::CutCandidate& cand : cands) {
      if (added >= cfg_.max_new_cuts) break;
      if (!cut_keys_.insert(key_of(cand.cut)).second) continue;
      model_.add_cut(std::move(cand.cut));
      ++added;
    }
    return added;
  }

  void capture_binary(const std::vector<T>& x) {
    best_guards_.clear();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (is_one(x[j])) best_guards_.push_back(model_.guards()[static_cast<int>(j)]);
  }

  /// Guards picked by descending fractional value until the current witness
  /// rows are covered; diagnostic only, never used for bounds.
  int rounding_heuristic(const std::vector<T>& x) const {
    std::vector<int> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x[static_cast<std::size_t>(b)] < x[static_cast<std::size_t>(a)]; });
    const int wits = model_.witnesses().size();
    model::Bitset covered(static_cast<std::size_t>(wits));
    int picked = 0;
    for (int g : order) {
      if (static_cast<int>(covered.count()) == wits) break;
      if (!lp::Tol<T>::pos(x[static_cast<std::size_t>(g)])) break;
      covered |= model_.matrix().witnesses_seen(g);
      ++picked;
    }
    return picked;
  }

  bool primal_phase_lp() {
    for (;;) {
      if (timeout()) return false;
      if (!solve_relax()) return false;
      T obj = model_.lp().objective();
      event("primal-solve", value_text(obj));
      std::vector<T> x = last_relax_;
      std::vector<Q> xq = exact_vector(x, true);

      int new_wit =
          add_witnesses(sep::separate_primal(model_.matrix(), xq, cfg_.max_new_points));
      int new_cuts = 0;
      if (!cfg_.cuts_need_primal_feasible || new_wit == 0)
        new_cuts = separate_cuts(xq);
      bool failed = new_wit == 0 && new_cuts == 0;

      if (failed && integral(x)) {
        long v = to_long(obj);
        if (!ub_ || v < *ub_) {
          ub_ = v;
          capture_binary(x);
          event("upper-bound", value_text(obj));
        }
      } else if (failed) {
        event("rounding-heuristic", std::to_string(rounding_heuristic(x)));
      }
      if (failed || done()) return true;
    }
  }

  bool primal_phase_ip() {
    for (;;) {
      if (timeout()) return false;
      std::vector<int> cols(static_cast<std::size_t>(model_.guards().size()));
      std::iota(cols.begin(), cols.end(), 0);
      auto stop = [this] { return clock_.elapsed() >= cfg_.time_limit_s; };
      lp::IntegerResult<T> ip =
          lp::branch_and_bound(model_.lp(), cols, true, -1, stop);
      if (ip.status == lp::Status::IterationLimit) {
        timeout();
        return false;
      }
      if (ip.status == lp::Status::Infeasible)
        throw std::runtime_error(
            "integer program infeasible: some witness sees no guard, which "
            "breaks the standing coverage assumption");
      event("primal-ip", value_text(ip.objective));

      std::vector<Q> xq = exact_vector(ip.x, true);
      int new_wit =
          add_witnesses(sep::separate_primal(model_.matrix(), xq, cfg_.max_new_points));
      if (new_wit == 0) {
        long v = to_long(ip.objective);
        if (!ub_ || v < *ub_) {
          ub_ = v;
          capture_binary(ip.x);
          event("upper-bound", value_text(ip.objective));
        }
      }
      if (new_wit == 0 || done()) return true;
    }
  }

  bool dual_phase() {
    for (;;) {
      if (timeout()) return false;
      if (!solve_relax()) return false;
      T obj = model_.lp().objective();
      event("dual-solve", value_text(obj));
      std::vector<Q> xq = exact_vector(last_relax_, true);
      std::vector<Q> y_wit = exact_vector(model_.witness_duals(), true);
      std::vector<Q> y_cut = exact_vector(model_.cut_duals(), true);

      int new_guards = add_guards(sep::separate_dual(
          model_.matrix(), model_.cuts(), y_wit, y_cut, cfg_.max_new_points));
      // Freshly generated guards enter at value zero for the cut snapshot.
      xq.resize(static_cast<std::size_t>(model_.guards().size()), Q(0));
      int new_cuts = separate_cuts(xq);
      bool failed = new_guards == 0 && new_cuts == 0;

      if (failed) {
        long v = ceil_long(obj);
        if (v > lb_) {
          lb_ = v;
          event("lower-bound", value_text(obj));
        }
      }
      if (failed || done()) return true;
    }
  }
};

}  // namespace

Result solve(const geom::Polygon& poly, const Config& cfg) {
  if (cfg.arithmetic == Arithmetic::Exact) return Driver<Q>(poly, cfg).run();
  return Driver<double>(poly, cfg).run();
}

nlohmann::json run_record(const std::string& instance, const Config& cfg,
                          const Result& res) {
  nlohmann::json rec;
  rec["instance"] = instance;
  rec["config"] = {{"mode", to_string(cfg.mode)},
                   {"cuts", to_string(cfg.cuts)},
                   {"time_limit_s", cfg.time_limit_s},
                   {"arithmetic", to_string(cfg.arithmetic)},
                   {"max_new_points", cfg.max_new_points},
                   {"max_new_cuts", cfg.max_new_cuts},
                   {"cuts_need_primal_feasible", cfg.cuts_need_primal_feasible}};
  rec["events"] = nlohmann::json::array();
  for (const Event& e : res.log) {
    nlohmann::json je = {{"t", e.t},          {"lb", e.lb},
                         {"nG", e.guards},    {"nW", e.witnesses},
                         {"nCuts", e.cuts},   {"obj", e.objective},
                         {"tag", e.tag}};
    je["ub"] = e.ub ? nlohmann::json(*e.ub) : nlohmann::json(nullptr);
    rec["events"].push_back(std::move(je));
  }
  nlohmann::json result;
  result["lb"] = res.lb;
  result["ub"] = res.ub ? nlohmann::json(*res.ub) : nlohmann::json(nullptr);
  if (res.ub)
    result["gap"] = static_cast<double>(*res.ub - res.lb) /
                    static_cast<double>(res.lb);
  else
    result["gap"] = nullptr;
  result["reason"] = res.reason;
  result["guards"] = nlohmann::json::array();
  for (const geom::Point& p : res.guards)
    result["guards"].push_back({gallery::to_string(p.x), gallery::to_string(p.y)});
  result["fractional"] = nlohmann::json::array();
  for (const auto& [p, v] : res.fractional)
    result["fractional"].push_back({{"x", gallery::to_string(p.x)},
                                    {"y", gallery::to_string(p.y)},
                                    {"value", gallery::to_string(v)}});
  rec["result"] = std::move(result);
  return rec;
}

}  // namespace gallery::engine

#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/rational.hpp"

namespace gallery::engine {

enum class Mode { Lp, Ip };

enum class Cuts { None, Ec, Sc3, Sc4, Sc3Ec };

enum class Arithmetic { Exact, Float };

std::string to_string(Mode m);
std::string to_string(Cuts c);
std::string to_string(Arithmetic a);
Mode parse_mode(const std::string& s);
Cuts parse_cuts(const std::string& s);
Arithmetic parse_arithmetic(const std::string& s);

struct Config {
  Mode mode = Mode::Lp;
  Cuts cuts = Cuts::Sc3Ec;
  double time_limit_s = 600.0;
  Arithmetic arithmetic = Arithmetic::Exact;
  int max_new_points = 100;  // witnesses or guards accepted per separation call
  int max_new_cuts = 16;     // cut rows accepted per separation call
  /// The driver pseudocode separates cuts on every primal iterate; setting
  /// this runs cut separation only once primal separation has failed.
  bool cuts_need_primal_feasible = false;
};

/// One bookkeeping record. Everything except the timestamp is deterministic
/// for a given instance and config in exact arithmetic.
struct Event {
  double t = 0.0;
  long lb = 1;
  std::optional<long> ub;
  int guards = 0;
  int witnesses = 0;
  int cuts = 0;
  std::string objective;  // exact value text of the solve this event follows
  std::string tag;
};

struct Result {
  long lb = 1;
  std::optional<long> ub;
  std::string reason;  // "optimal" or "time_limit"
  /// Support of the binary solution that set ub; empty when ub is open.
  std::vector<geom::Point> guards;
  /// Final fractional guard values from the last relaxation solve.
  std::vector<std::pair<geom::Point, Q>> fractional;
  std::vector<Event> log;
  int guard_count = 0;
  int witness_count = 0;
  int cut_count = 0;

  bool solved() const { return ub && *ub == lb; }
};

/// Runs the iterative driver on the polygon: guard and witness sets start at
/// the polygon vertices and grow by primal/dual separation, with cut rows
/// from the configured families. LP mode alternates relaxation-based primal
/// and dual phases; IP mode solves the integer program in the primal phase
/// (binary upper bounds, no cut separation there) and shares the dual phase.
/// Exits cleanly at the time limit with the current bound pair; throws
/// std::runtime_error if the relaxation is infeasible (a witness no guard
/// can see, which violates the standing assumptions).
Result solve(const geom::Polygon& poly, const Config& cfg);

/// Full machine-readable account of one run.
nlohmann::json run_record(const std::string& instance, const Config& cfg,
                          const Result& res);

}  // namespace gallery::engine

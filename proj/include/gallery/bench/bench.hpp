#pragma once

#include <json.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallery/engine/engine.hpp"
#include "gallery/geom/polygon.hpp"

namespace gallery::bench {

/// The four benchmark families. All are structural look-alikes of the usual
/// experimental classes, not reproductions of any published instance set:
///
/// - Koch: a triangle whose edges are repeatedly replaced by a randomized
///   outward or inward bump, giving a ragged fractal-like coastline without
///   holes. Knobs: bump height range.
/// - Orthogonal: a floorplan-like outline built from vertical columns of
///   random widths and random top and bottom heights that all share a
///   common band, so the outline stays connected and simple. Knobs: column
///   width and height ranges.
/// - Simple: a random vertex cloud untangled into a simple polygon by
///   repeatedly reversing crossing chains.
/// - Spike: a random convex body with thin triangular spikes attached to
///   random edges, usually with one or two small triangular holes. Knobs:
///   spike length factor and hole-count odds.
enum class PolygonClass { Koch, Orthogonal, Simple, Spike };

std::string to_string(PolygonClass c);
PolygonClass parse_class(const std::string& s);

/// One generation request, fully determined by (cls, target_vertices, seed).
struct GenSpec {
  PolygonClass cls = PolygonClass::Koch;
  int target_vertices = 60;
  std::uint64_t seed = 1;
};

/// Construction parameters; each generator reads only the knobs its class
/// description mentions. Defaults produce the documented shapes.
struct GenKnobs {
  int koch_bump_min = 1;    ///< bump apex height, numerator range over /5
  int koch_bump_max = 3;
  int ortho_gap_max = 5;    ///< column widths drawn from [2, ortho_gap_max]
  int ortho_height_max = 8; ///< column half-heights drawn from [1, max]
  int spike_len_pct = 80;   ///< spike length as a percentage of the edge span
  int hole_weight0 = 2;     ///< relative odds of zero, one, and two holes
  int hole_weight1 = 5;
  int hole_weight2 = 3;
};

/// Generates one polygon of the requested class with a vertex count within
/// ten percent of the target (requires target >= 12). Deterministic per
/// seed. Throws std::invalid_argument for a bad spec and std::runtime_error
/// when bounded retries cannot produce a valid polygon.
geom::Polygon generate(const GenSpec& spec);
geom::Polygon generate(const GenSpec& spec, const GenKnobs& knobs);

/// A solver configuration with a label for tables and CSV rows.
struct NamedConfig {
  std::string name;
  engine::Config config;
};

/// Outcome of one (spec, config) solve. "solved" means the bound pair
/// closed within the time limit; a finite ub with lb < ub is unsolved with
/// a finite gap. A failed generation or solve leaves error nonempty.
struct RunRow {
  GenSpec spec;
  std::string config;
  bool solved = false;
  long lb = 0;
  std::optional<long> ub;
  double time_s = 0.0;
  std::string error;
  std::vector<engine::Event> log;
};

/// Aggregate line for one (class, size, config) cell: percentage solved and
/// the median relative gap (empty when the median is infinite).
struct TableRow {
  PolygonClass cls = PolygonClass::Koch;
  int size = 0;
  std::string config;
  int instances = 0;
  double solved_pct = 0.0;
  std::optional<double> median_gap;
};

/// Relative optimality gap (ub - lb) / lb; empty means infinite (no ub).
std::optional<double> relative_gap(long lb, const std::optional<long>& ub);

struct BatchResult {
  std::vector<RunRow> rows;

  /// One line per row: class,size,seed,config,solved,lb,ub,gap,time_s.
  /// An open bound prints ub empty and gap "inf".
  std::string csv() const;

  /// Cells in first-seen order of (class, size, config).
  std::vector<TableRow> table() const;

  /// Gap-over-time quartiles per config: for evenly spaced timestamps up to
  /// the longest run, the Q0..Q4 of every row's gap at that moment
  /// (nearest-rank, infinite gaps sorting last and serialized as null).
  nlohmann::json gap_series(int samples = 33) const;
};

/// Runs every spec under every config sequentially and deterministically.
/// Individual failures are recorded on their rows; the batch continues.
BatchResult run_batch(const std::vector<GenSpec>& specs,
                      const std::vector<NamedConfig>& configs);

}  // namespace gallery::bench

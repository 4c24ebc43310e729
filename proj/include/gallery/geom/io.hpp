#pragma once

#include <iosfwd>
#include <string>

#include "gallery/geom/polygon.hpp"

namespace gallery::geom {

/// Plain-text polygon format, one polygon per stream:
///
///   # comments and blank lines are allowed anywhere
///   outer <k>
///   <x> <y>            (k lines; coordinates are integers, a/b, or decimals)
///   hole <k>
///   <x> <y>            (k lines; zero or more hole blocks)
///
/// Throws std::runtime_error with a 1-based line number on syntax errors, and
/// std::invalid_argument if the parsed polygon violates an invariant
/// (orientation, simplicity, hole placement).
Polygon read_polygon(std::istream& in);
Polygon read_polygon_file(const std::string& path);
Polygon parse_polygon(const std::string& text);

/// Writes the format read_polygon accepts; coordinates in canonical rational
/// form. Round-trips exactly.
void write_polygon(std::ostream& out, const Polygon& poly);
std::string format_polygon(const Polygon& poly);

}  // namespace gallery::geom

#include "gallery/geom/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gallery::geom {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  /// Next significant line (skips blanks and # comments); false at EOF.
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      std::size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos || raw[start] == '#') continue;
      std::size_t end = raw.find_last_not_of(" \t\r");
      out = raw.substr(start, end - start + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("polygon parse error at line " +
                             std::to_string(line_no) + ": " + what);
  }
};

Ring read_ring(LineReader& reader, std::size_t count) {
  Ring ring;
  ring.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string line;
    if (!reader.next(line)) reader.fail("unexpected end of input inside a ring");
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      reader.fail("expected '<x> <y>', got '" + line + "'");
    }
    try {
      ring.emplace_back(parse_rational(xs), parse_rational(ys));
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what());
    }
  }
  return ring;
}

}  // namespace

Polygon read_polygon(std::istream& in) {
  LineReader reader{in};
  Polygon poly;
  std::string line;
  if (!reader.next(line)) reader.fail("empty input, expected 'outer <k>'");

  bool saw_outer = false;
  while (true) {
    std::istringstream fields(line);
    std::string keyword, count_text, extra;
    if (!(fields >> keyword >> count_text) || (fields >> extra)) {
      reader.fail("expected 'outer <k>' or 'hole <k>', got '" + line + "'");
    }
    std::size_t count = 0;
    try {
      count = std::stoul(count_text);
    } catch (const std::exception&) {
      reader.fail("bad vertex count '" + count_text + "'");
    }
    if (keyword == "outer") {
      if (saw_outer) reader.fail("duplicate 'outer' block");
      poly.outer = read_ring(reader, count);
      saw_outer = true;
    } else if (keyword == "hole") {
      if (!saw_outer) reader.fail("'hole' block before 'outer'");
      poly.holes.push_back(read_ring(reader, count));
    } else {
      reader.fail("unknown block '" + keyword + "'");
    }
    if (!reader.next(line)) break;
  }
  poly.validate();
  return poly;
}

Polygon read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polygon file: " + path);
  return read_polygon(in);
}

Polygon parse_polygon(const std::string& text) {
  std::istringstream in(text);
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const Polygon& poly) {
  auto emit = [&out](const char* tag, const Ring& ring) {
    out << tag << ' ' << ring.size() << '\n';
    for (const Point& p : ring) {
      out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
    }
  };
  emit("outer", poly.outer);
  for (const Ring& h : poly.holes) emit("hole", h);
}

std::string format_polygon(const Polygon& poly) {
  std::ostringstream out;
  write_polygon(out, poly);
  return out.str();
}

}  // namespace gallery::geom

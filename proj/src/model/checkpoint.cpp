#include "gallery/model/checkpoint.hpp"

#include <stdexcept>

#include "gallery/geom/io.hpp"

namespace gallery::model {

namespace {

nlohmann::json point_to_json(const geom::Point& p) {
  return nlohmann::json::array({to_string(p.x), to_string(p.y)});
}

geom::Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point must be a [x, y] pair of rational strings");
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

const char* kind_name(CutKind k) {
  return k == CutKind::SetCover ? "set_cover" : "edge_cover";
}

CutKind kind_from_name(const std::string& name) {
  if (name == "set_cover") return CutKind::SetCover;
  if (name == "edge_cover") return CutKind::EdgeCover;
  throw std::invalid_argument("unknown cut kind: " + name);
}

}  // namespace

nlohmann::json state_to_json(const ModelState& s) {
  nlohmann::json j;
  j["polygon"] = geom::format_polygon(s.polygon);
  j["guards"] = nlohmann::json::array();
  for (const geom::Point& p : s.guards) j["guards"].push_back(point_to_json(p));
  j["witnesses"] = nlohmann::json::array();
  for (const geom::Point& p : s.witnesses) j["witnesses"].push_back(point_to_json(p));
  j["cuts"] = nlohmann::json::array();
  for (const CutConstraint& c : s.cuts) {
    nlohmann::json jc;
    jc["kind"] = kind_name(c.kind);
    jc["witnesses"] = c.witnesses;
    jc["rhs"] = c.rhs;
    j["cuts"].push_back(jc);
  }
  return j;
}

ModelState state_from_json(const nlohmann::json& j) {
  ModelState s;
  s.polygon = geom::parse_polygon(j.at("polygon").get<std::string>());
  for (const nlohmann::json& p : j.at("guards")) s.guards.push_back(point_from_json(p));
  for (const nlohmann::json& p : j.at("witnesses")) s.witnesses.push_back(point_from_json(p));
  for (const nlohmann::json& jc : j.at("cuts")) {
    CutConstraint c;
    c.kind = kind_from_name(jc.at("kind").get<std::string>());
    c.witnesses = jc.at("witnesses").get<std::vector<int>>();
    c.rhs = jc.at("rhs").get<long>();
    s.cuts.push_back(std::move(c));
  }
  return s;
}

}  // namespace gallery::model

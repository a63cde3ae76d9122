#include "wcn/curves_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wcn/error.hpp"

namespace wcn {

std::vector<ClosedPolyline> parse_curves(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("curve file must hold a list of curves");
  std::vector<ClosedPolyline> curves;
  for (std::size_t c = 0; c < doc.size(); ++c) {
    const auto& jc = doc[c];
    if (!jc.is_array()) throw ParseError("curve " + std::to_string(c) + " is not a list");
    ClosedPolyline curve;
    for (std::size_t i = 0; i < jc.size(); ++i) {
      const auto& jp = jc[i];
      if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number() || !jp[1].is_number()) {
        throw ParseError("curve " + std::to_string(c) + " point " + std::to_string(i) +
                         " is not an [x, y] pair");
      }
      curve.vertices.push_back({jp[0].get<double>(), jp[1].get<double>()});
    }
    try {
      validate(curve);
    } catch (const DomainError& e) {
      throw DomainError("curve " + std::to_string(c) + ": " + e.what());
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<ClosedPolyline> load_curves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curves(ss.str());
}

std::string curves_to_json(const std::vector<ClosedPolyline>& curves) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& c : curves) {
    nlohmann::json jc = nlohmann::json::array();
    for (const Point& p : c.vertices) jc.push_back({p.x, p.y});
    doc.push_back(std::move(jc));
  }
  return doc.dump();
}

}  // namespace wcn

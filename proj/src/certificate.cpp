#include "geopos/certificate.hpp"

namespace geopos {

nlohmann::json witness_to_json(const Witness& witness) {
  nlohmann::json j;
  if (const auto* edges = std::get_if<EdgeSet>(&witness)) {
    j["type"] = "edge_set";
    auto data = nlohmann::json::array();
    for (const Edge& e : *edges) {
      data.push_back({e.u, e.v});
    }
    j["data"] = std::move(data);
  } else {
    j["type"] = "geodesic_list";
    auto data = nlohmann::json::array();
    for (const GeodesicPath& p : std::get<std::vector<GeodesicPath>>(witness)) {
      data.push_back(p);
    }
    j["data"] = std::move(data);
  }
  return j;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : cert.params) {
    params[name] = value;
  }
  nlohmann::json j;
  j["claim"] = {{"theorem", cert.theorem}, {"params", std::move(params)}};
  j["value"] = cert.value;
  j["witness"] = witness_to_json(cert.witness);
  j["verified"] = cert.verified;
  j["method"] = cert.method;
  j["checker_stats"] = {{"max_marked", cert.checker_stats.max_marked},
                        {"pairs_swept", cert.checker_stats.pairs_swept}};
  return j;
}

}  // namespace geopos

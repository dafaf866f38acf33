#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "geopos/graph.hpp"
#include "geopos/metric.hpp"

namespace geopos {

struct CheckerStats {
  int max_marked = -1;  // -1 when the claim needed no marked-edge sweep
  std::uint64_t pairs_swept = 0;
};

using Witness = std::variant<EdgeSet, std::vector<GeodesicPath>>;

/// A verified claim: named result, achieved value, explicit witness, and the
/// checks that were run. Builders never self-certify; `verified` reflects
/// independent re-checks of the witness.
struct Certificate {
  std::string theorem;
  std::vector<std::pair<std::string, int>> params;
  long long value = 0;
  Witness witness;
  bool verified = false;
  std::string method;
  CheckerStats checker_stats;
};

nlohmann::json witness_to_json(const Witness& witness);
nlohmann::json to_json(const Certificate& cert);

}  // namespace geopos

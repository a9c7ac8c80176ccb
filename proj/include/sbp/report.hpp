#pragma once

#include <json.hpp>
#include <string>

#include "sbp/search.hpp"

namespace sbp {

/// {"semiplanar": bool, "k": int, "witness": null | {"a", "y", "count"}}
nlohmann::ordered_json toJson(const SemiPlanarityVerdict& verdict, const FuncTable& f);

/// {"v", "k", "semibiplane", "components", "failure": null | {"kind", "ids", "count"}}
nlohmann::ordered_json toJson(const AxiomReport& report);

/// {"kind", "B", "A", "g", "h"}
nlohmann::ordered_json toJson(const SplitReport& report);

/// {"group", "normalized", "visited", "count", "found", "elapsed_ms"}. With
/// includeTiming false, elapsed_ms is written as 0 so reports compare byte for byte.
nlohmann::ordered_json toJson(const SearchResult& result, const Group& G, bool normalized, bool includeTiming = true);

}  // namespace sbp

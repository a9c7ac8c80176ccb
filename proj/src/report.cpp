#include "sbp/report.hpp"

namespace sbp {

using nlohmann::ordered_json;

ordered_json toJson(const SemiPlanarityVerdict& verdict, const FuncTable& f) {
  ordered_json out;
  out["semiplanar"] = verdict.isSemiPlanar;
  out["group"] = f.domain().name();
  out["k"] = f.domain().order();
  if (verdict.witness) {
    out["witness"] = {{"a", verdict.witness->a}, {"y", verdict.witness->y}, {"count", verdict.witness->count}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ordered_json toJson(const AxiomReport& report) {
  ordered_json out;
  out["v"] = report.v;
  out["k"] = report.k;
  out["semibiplane"] = report.isSemiBiplane;
  out["components"] = report.components;
  if (report.failure) {
    out["failure"] = {{"kind", report.failure->kind == PairFailure::Kind::Points ? "points" : "lines"},
                      {"ids", {report.failure->first, report.failure->second}},
                      {"count", report.failure->count}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

ordered_json toJson(const SplitReport& report) {
  ordered_json out;
  out["kind"] = to_string(report.kind);
  out["B"] = report.B;
  out["A"] = report.A;
  out["g"] = report.g ? ordered_json(*report.g) : ordered_json(nullptr);
  out["h"] = report.h ? ordered_json(*report.h) : ordered_json(nullptr);
  return out;
}

ordered_json toJson(const SearchResult& result, const Group& G, bool normalized, bool includeTiming) {
  ordered_json out;
  out["group"] = G.name();
  out["normalized"] = normalized;
  out["visited"] = result.totalCandidatesVisited;
  out["count"] = result.count;
  ordered_json found = ordered_json::array();
  for (const auto& f : result.found) found.push_back(formatTable(f));
  out["found"] = std::move(found);
  out["elapsed_ms"] = includeTiming ? result.elapsed.count() : 0;
  return out;
}

}  // namespace sbp

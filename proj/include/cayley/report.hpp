#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cayley/metric.hpp"

namespace cayley {

struct DeadEndReportEntry {
  std::string element;
  int n = 0;
  int depth = 0;
  bool depth_exact = false;
  std::optional<int> strong_depth;

  bool operator==(const DeadEndReportEntry&) const = default;
};

struct AnnulusReportEntry {
  int k = 0;
  std::uint64_t components = 0;

  bool operator==(const AnnulusReportEntry&) const = default;
};

// The machine-readable scan result. Contains nothing run-dependent: no
// timestamps, no timing, no host data, so byte equality across runs and
// worker counts is meaningful.
struct ScanReport {
  int schema = 1;
  std::string group;
  int radius = 0;
  std::vector<std::uint64_t> sphere_sizes;
  std::vector<DeadEndReportEntry> dead_ends;
  std::optional<AnnulusReportEntry> annulus;

  bool operator==(const ScanReport&) const = default;
};

inline nlohmann::json report_to_json(const ScanReport& r) {
  nlohmann::json j;
  j["schema"] = r.schema;
  j["group"] = r.group;
  j["radius"] = r.radius;
  j["sphere_sizes"] = r.sphere_sizes;
  j["dead_ends"] = nlohmann::json::array();
  for (const auto& d : r.dead_ends) {
    nlohmann::json e;
    e["element"] = d.element;
    e["n"] = d.n;
    e["depth"] = d.depth;
    e["depth_exact"] = d.depth_exact;
    if (d.strong_depth)
      e["strong_depth"] = *d.strong_depth;
    else
      e["strong_depth"] = nullptr;
    j["dead_ends"].push_back(std::move(e));
  }
  if (r.annulus) {
    j["annulus"] = {{"k", r.annulus->k}, {"components", r.annulus->components}};
  } else {
    j["annulus"] = nullptr;
  }
  return j;
}

inline ScanReport report_from_json(const nlohmann::json& j) {
  ScanReport r;
  r.schema = j.at("schema").get<int>();
  r.group = j.at("group").get<std::string>();
  r.radius = j.at("radius").get<int>();
  r.sphere_sizes = j.at("sphere_sizes").get<std::vector<std::uint64_t>>();
  for (const auto& e : j.at("dead_ends")) {
    DeadEndReportEntry d;
    d.element = e.at("element").get<std::string>();
    d.n = e.at("n").get<int>();
    d.depth = e.at("depth").get<int>();
    d.depth_exact = e.at("depth_exact").get<bool>();
    if (!e.at("strong_depth").is_null())
      d.strong_depth = e.at("strong_depth").get<int>();
    r.dead_ends.push_back(std::move(d));
  }
  if (!j.at("annulus").is_null())
    r.annulus = AnnulusReportEntry{j.at("annulus").at("k").get<int>(),
                                   j.at("annulus").at("components").get<std::uint64_t>()};
  return r;
}

// nlohmann::json::dump serializes object keys sorted, so this is byte-stable.
inline std::string render_report(const ScanReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

template <GroupLike G>
ScanReport make_scan_report(
    const G& g, std::string group_spec, const DistanceMap<G>& dmap,
    const std::vector<DeadEndRecord<typename G::element_type>>& records,
    std::optional<int> annulus_k = std::nullopt) {
  ScanReport r;
  r.group = std::move(group_spec);
  r.radius = dmap.radius();
  r.sphere_sizes = dmap.sphere_sizes();
  r.dead_ends.reserve(records.size());
  for (const auto& rec : records)
    r.dead_ends.push_back(
        {g.format(rec.element), rec.n, rec.depth, rec.depth_exact, rec.strong_depth});
  if (annulus_k) {
    auto a = annulus_components(g, dmap, *annulus_k);
    r.annulus = AnnulusReportEntry{*annulus_k, a.components()};
  }
  return r;
}

}  // namespace cayley

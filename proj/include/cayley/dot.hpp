#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/metric.hpp"

namespace cayley {

// Undirected ball graph in DOT form. Vertices carry element literals; each
// edge appears once, labeled with the generator symbol of the orientation
// from the encoding-smaller endpoint. Output order is canonical, so equal
// balls render to identical bytes.
template <GroupLike G>
void export_dot(const G& g, const DistanceMap<G>& dmap, std::ostream& os,
                std::string_view name = "ball") {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };

  std::vector<std::pair<std::string, const typename G::element_type*>> verts;
  verts.reserve(dmap.size());
  for (int d = 0; d <= dmap.radius(); ++d)
    for (const auto& e : dmap.spheres()[d]) verts.emplace_back(g.encode(e), &e);
  std::sort(verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  os << "graph " << name << " {\n";
  for (const auto& [key, pe] : verts) os << "  " << quoted(g.format(*pe)) << ";\n";
  for (const auto& [key, pe] : verts)
    for (const auto& l : g.labels()) {
      auto h = g.multiply(*pe, g.generator(l.index));
      auto hkey = g.encode(h);
      if (!(key < hkey)) continue;
      if (!dmap.distance(hkey)) continue;
      os << "  " << quoted(g.format(*pe)) << " -- " << quoted(g.format(h))
         << " [label=" << quoted(l.symbol) << "];\n";
    }
  os << "}\n";
}

}  // namespace cayley

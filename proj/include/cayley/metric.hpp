#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cayley/encoding.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"

namespace cayley {

struct BallOptions {
  int workers = 1;
  std::uint64_t memory_budget_bytes = 4ull << 30;
};

namespace detail {

// Rough per-entry accounting for the memory budget: canonical key plus the
// stored element plus hash-node overhead.
template <typename E>
std::size_t element_footprint(const E& e) {
  if constexpr (requires { e.arrangement; })
    return sizeof(E) + e.arrangement.size() * sizeof(e.arrangement[0]);
  else if constexpr (requires { e.size(); e.begin(); })
    return sizeof(E) + e.size() * sizeof(*e.begin());
  else
    return sizeof(E);
}

template <typename E>
std::size_t entry_cost(const std::string& key, const E& e) {
  return key.size() + 56 + element_footprint(e);
}

}  // namespace detail

// Exact word-metric distances for every element with d(1,.) <= radius.
// Absence of an encoding certifies d(1, element) > radius, which is what
// makes dead-end queries near the boundary sound.
template <GroupLike G>
class DistanceMap {
 public:
  using element_type = typename G::element_type;

  int radius() const noexcept { return radius_; }

  // True when BFS drained the frontier early: the map covers the whole group.
  bool exhausted() const noexcept { return exhausted_; }

  std::size_t size() const noexcept { return dist_.size(); }

  std::optional<int> distance(const std::string& encoding) const {
    auto it = dist_.find(encoding);
    if (it == dist_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> distance(const G& g, const element_type& e) const {
    return distance(g.encode(e));
  }

  const std::vector<std::uint64_t>& sphere_sizes() const noexcept { return sphere_sizes_; }
  const std::vector<std::vector<element_type>>& spheres() const noexcept { return spheres_; }

  int max_distance() const noexcept {
    for (int d = static_cast<int>(spheres_.size()) - 1; d >= 0; --d)
      if (!spheres_[d].empty()) return d;
    return 0;
  }

 private:
  template <GroupLike H>
  friend DistanceMap<H> ball_distances(const H&, int, const BallOptions&);

  int radius_ = 0;
  bool exhausted_ = false;
  std::unordered_map<std::string, int> dist_;
  std::vector<std::uint64_t> sphere_sizes_;
  std::vector<std::vector<element_type>> spheres_;
};

// Level-synchronous BFS from the identity with canonical-encoding dedup.
// Workers only parallelize candidate generation against the read-only map of
// previous levels; candidates are merged in worker order, so the result is
// byte-identical for any worker count.
template <GroupLike G>
DistanceMap<G> ball_distances(const G& g, int radius, const BallOptions& opts = {}) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (opts.workers < 1) throw std::invalid_argument("worker count must be positive");

  DistanceMap<G> map;
  map.radius_ = radius;
  map.sphere_sizes_.assign(static_cast<std::size_t>(radius) + 1, 0);
  map.spheres_.assign(static_cast<std::size_t>(radius) + 1, {});

  auto id = g.identity();
  auto id_key = g.encode(id);
  std::uint64_t bytes = detail::entry_cost(id_key, id);
  map.dist_.emplace(std::move(id_key), 0);
  map.spheres_[0].push_back(std::move(id));
  map.sphere_sizes_[0] = 1;

  const int n_labels = static_cast<int>(g.labels().size());
  using element_type = typename G::element_type;

  for (int d = 1; d <= radius; ++d) {
    const auto& frontier = map.spheres_[d - 1];
    if (frontier.empty()) {
      map.exhausted_ = true;
      break;
    }

    const int workers =
        std::max(1, std::min<int>(opts.workers, static_cast<int>(frontier.size())));
    std::vector<std::vector<std::pair<std::string, element_type>>> produced(workers);

    auto produce = [&](int w, std::size_t lo, std::size_t hi) {
      auto& out = produced[w];
      for (std::size_t i = lo; i < hi; ++i)
        for (int li = 0; li < n_labels; ++li) {
          auto h = g.multiply(frontier[i], g.generator(li));
          auto key = g.encode(h);
          if (map.dist_.find(key) == map.dist_.end())
            out.emplace_back(std::move(key), std::move(h));
        }
    };

    if (workers == 1) {
      produce(0, 0, frontier.size());
    } else {
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = std::min(frontier.size(), static_cast<std::size_t>(w) * chunk);
        std::size_t hi = std::min(frontier.size(), lo + chunk);
        pool.emplace_back(produce, w, lo, hi);
      }
      for (auto& t : pool) t.join();
    }

    auto& sphere = map.spheres_[d];
    for (auto& out : produced)
      for (auto& [key, h] : out) {
        auto [it, inserted] = map.dist_.try_emplace(std::move(key), d);
        if (!inserted) continue;
        bytes += detail::entry_cost(it->first, h);
        if (bytes > opts.memory_budget_bytes)
          throw MemoryBudgetError(
              "memory budget exceeded while expanding radius " + std::to_string(d) +
                  "; last complete radius " + std::to_string(d - 1),
              d - 1);
        sphere.push_back(std::move(h));
      }
    map.sphere_sizes_[d] = sphere.size();
  }

  if (!map.exhausted_ && radius >= 1 && map.spheres_[radius].empty())
    map.exhausted_ = true;
  return map;
}

// True iff no neighbor of e is farther from the identity than e itself.
// Sound for any e inside the map: a neighbor absent from the map is certified
// farther than the radius, hence farther than d(1,e).
template <GroupLike G>
bool is_dead_end(const G& g, const typename G::element_type& e,
                 const DistanceMap<G>& dmap) {
  auto n = dmap.distance(g, e);
  if (!n)
    throw OutOfRadiusError("element beyond map radius; dead-end status undecidable");
  for (const auto& l : g.labels()) {
    auto h = g.multiply(e, g.generator(l.index));
    auto dh = dmap.distance(g, h);
    if (!dh || *dh > *n) return false;
  }
  return true;
}

struct DepthResult {
  int depth = 0;
  bool exact = false;  // false: the l_max cap was hit, depth is a lower bound
};

// Largest l with B_e(l) contained in B_1(n), n = d(1,e), by BFS around e.
// The first local sphere containing an escapee at level l gives depth l-1.
// Escape is decided through the map: absence means d > radius >= n.
template <GroupLike G>
DepthResult dead_end_depth(const G& g, const typename G::element_type& e,
                           const DistanceMap<G>& dmap, int l_max = 8) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  auto n = dmap.distance(g, e);
  if (!n) throw OutOfRadiusError("element beyond map radius");
  if (!is_dead_end(g, e, dmap))
    throw std::domain_error("depth is defined only for dead ends");

  std::unordered_set<std::string> visited;
  visited.insert(g.encode(e));
  std::vector<typename G::element_type> frontier{e};
  for (int l = 1; l <= l_max; ++l) {
    std::vector<typename G::element_type> next;
    for (const auto& cur : frontier)
      for (const auto& lab : g.labels()) {
        auto h = g.multiply(cur, g.generator(lab.index));
        auto key = g.encode(h);
        if (!visited.insert(std::move(key)).second) continue;
        auto dh = dmap.distance(g, h);
        if (!dh || *dh > *n) return {l - 1, true};
        next.push_back(std::move(h));
      }
    frontier = std::move(next);
    if (frontier.empty()) break;  // finite group fully inside B_1(n)
  }
  return {l_max, false};
}

// Minimal k such that e reaches a vertex outside B_1(n) along a path that
// stays outside B_1(n-k). Success terminals are vertices absent from the
// map or recorded beyond n. Throws NoExteriorError when the map exhausts a
// finite group and nothing lies outside B_1(n) at all.
template <GroupLike G>
int strong_depth(const G& g, const typename G::element_type& e,
                 const DistanceMap<G>& dmap) {
  auto n = dmap.distance(g, e);
  if (!n) throw OutOfRadiusError("element beyond map radius");
  if (!is_dead_end(g, e, dmap))
    throw std::domain_error("strong depth is defined only for dead ends");

  for (int k = 1; k <= *n + 1; ++k) {
    std::unordered_set<std::string> visited;
    visited.insert(g.encode(e));
    std::vector<typename G::element_type> frontier{e};
    while (!frontier.empty()) {
      std::vector<typename G::element_type> next;
      for (const auto& cur : frontier)
        for (const auto& lab : g.labels()) {
          auto h = g.multiply(cur, g.generator(lab.index));
          auto key = g.encode(h);
          if (!visited.insert(key).second) continue;
          auto dh = dmap.distance(key);
          if (!dh || *dh > *n) return k;
          if (*dh > *n - k) next.push_back(std::move(h));
        }
      frontier = std::move(next);
    }
  }
  throw NoExteriorError("no vertex outside B_1(n) exists in this group");
}

template <typename Element>
struct DeadEndRecord {
  Element element;
  int n = 0;
  int depth = 0;
  bool depth_exact = false;
  // Empty when the map exhausts a finite group with nothing outside B_1(n).
  std::optional<int> strong_depth;
};

// Every dead end with d(1,e) <= radius-1. Queries at the boundary sphere
// would still be sound, but there every escape rests on absence certificates
// alone, so the scan keeps one sphere of recorded slack. Records are ordered
// by (distance, canonical encoding).
template <GroupLike G>
std::vector<DeadEndRecord<typename G::element_type>> scan_dead_ends(
    const G& g, const DistanceMap<G>& dmap, int l_max = 8) {
  std::vector<DeadEndRecord<typename G::element_type>> records;
  const int top = std::min(dmap.radius() - 1, dmap.max_distance());
  for (int n = 0; n <= top; ++n) {
    std::vector<std::pair<std::string, const typename G::element_type*>> level;
    level.reserve(dmap.spheres()[n].size());
    for (const auto& e : dmap.spheres()[n]) level.emplace_back(g.encode(e), &e);
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, pe] : level) {
      if (!is_dead_end(g, *pe, dmap)) continue;
      auto dr = dead_end_depth(g, *pe, dmap, l_max);
      std::optional<int> sd;
      try {
        sd = strong_depth(g, *pe, dmap);
      } catch (const NoExteriorError&) {
      }
      records.push_back({*pe, n, dr.depth, dr.exact, sd});
    }
  }
  return records;
}

template <GroupLike G>
std::vector<DeadEndRecord<typename G::element_type>> scan_dead_ends(
    const G& g, int radius, const BallOptions& opts = {}, int l_max = 8) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  auto dmap = ball_distances(g, radius, opts);
  return scan_dead_ends(g, dmap, l_max);
}

struct AnnulusReport {
  int inner_radius = 0;
  std::vector<std::size_t> component_sizes;  // descending

  std::size_t components() const noexcept { return component_sizes.size(); }
};

// Connected components of the subgraph induced on {h : k < d(1,h) <= radius}.
// A finite-radius stand-in for counting ends; stable component counts across
// growing radii are evidence, not proof.
template <GroupLike G>
AnnulusReport annulus_components(const G& g, const DistanceMap<G>& dmap, int k) {
  if (k < 0 || k >= dmap.radius())
    throw std::invalid_argument("annulus needs 0 <= k < radius");

  std::unordered_map<std::string, std::size_t> index;
  std::vector<const typename G::element_type*> verts;
  for (int d = k + 1; d <= dmap.radius(); ++d)
    for (const auto& e : dmap.spheres()[d]) {
      index.emplace(g.encode(e), verts.size());
      verts.push_back(&e);
    }

  std::vector<std::size_t> parent(verts.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };

  for (std::size_t i = 0; i < verts.size(); ++i)
    for (const auto& l : g.labels()) {
      auto h = g.multiply(*verts[i], g.generator(l.index));
      auto it = index.find(g.encode(h));
      if (it == index.end()) continue;
      auto a = find(i), b = find(it->second);
      if (a != b) parent[a] = b;
    }

  std::unordered_map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < verts.size(); ++i) ++counts[find(i)];
  AnnulusReport rep;
  rep.inner_radius = k;
  for (const auto& [root, c] : counts) rep.component_sizes.push_back(c);
  std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());
  return rep;
}

// Once the annulus at k separates the ends, no dead end may sit deeper than
// 2k. Applies to lower bounds as well: a certified bound above 2k is already
// a violation.
template <typename Element>
bool check_depth_bound(const std::vector<DeadEndRecord<Element>>& records, int k) {
  for (const auto& r : records)
    if (r.depth > 2 * k) return false;
  return true;
}

// One `<hex encoding> <distance>` line per element, sorted by encoding, then
// a `# radius=R total=N` footer. Byte-stable for diffing across runs.
template <GroupLike G>
void dump_distance_map(const G& g, const DistanceMap<G>& dmap, std::ostream& os) {
  std::vector<std::pair<std::string, int>> rows;
  rows.reserve(dmap.size());
  for (int d = 0; d <= dmap.radius(); ++d)
    for (const auto& e : dmap.spheres()[d]) rows.emplace_back(g.encode(e), d);
  std::sort(rows.begin(), rows.end());
  for (const auto& [key, d] : rows) os << enc::to_hex(key) << ' ' << d << '\n';
  os << "# radius=" << dmap.radius() << " total=" << rows.size() << '\n';
}

}  // namespace cayley

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/houghton.hpp"
#include "cayley/sym_support.hpp"
#include "cayley/word.hpp"

namespace cayley {

// Word over Y = {sigma_t}; each letter stores the cursor offset t.
struct YWord {
  std::vector<std::int64_t> letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool operator==(const YWord&) const = default;
};

// v_l = sigma_{-(l-1)} sigma_{-(l-2)} ... sigma_{l-2}. Empty at l = 1.
inline YWord build_v(std::int64_t l) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  YWord w;
  for (std::int64_t t = -(l - 1); t <= l - 2; ++t) w.letters.push_back(t);
  return w;
}

// u_l = v_l sigma_{l-1} v_l^{-1}; evaluates to the swap of slots -l and l.
// Every sigma_t is an involution, so v_l^{-1} is v_l reversed.
inline YWord build_u(std::int64_t l) {
  auto v = build_v(l);
  YWord w = v;
  w.letters.push_back(l - 1);
  w.letters.insert(w.letters.end(), v.letters.rbegin(), v.letters.rend());
  return w;
}

// w_k = u_k u_{k-1} ... u_1; evaluates to g_k. Length k(2k-1).
inline YWord build_w(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  YWord w;
  for (std::int64_t l = k; l >= 1; --l) {
    auto u = build_u(l);
    w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
  }
  return w;
}

inline H2Element evaluate_y(const HoughtonH2& g, const YWord& w) {
  auto acc = g.identity();
  for (auto t : w.letters) acc = g.multiply(acc, HoughtonH2::sigma_t(t));
  return acc;
}

inline SupportSymmetricGroup::element_type evaluate_y(
    const SupportSymmetricGroup& g, const YWord& w) {
  auto acc = g.identity();
  for (auto t : w.letters) acc = g.multiply(acc, g.sigma(t));
  return acc;
}

// Substitute sigma_t -> s^t x s^{-t} and freely reduce. The cancellations at
// the junctions are exactly the telescoping of consecutive conjugators.
inline Word expand_to_x(const HoughtonH2& g, const YWord& w) {
  Word out;
  for (auto t : w.letters) {
    const int fwd = t >= 0 ? HoughtonH2::kShiftRight : HoughtonH2::kShiftLeft;
    const int bwd = t >= 0 ? HoughtonH2::kShiftLeft : HoughtonH2::kShiftRight;
    const auto n = t >= 0 ? t : -t;
    for (std::int64_t i = 0; i < n; ++i) out.letters.push_back(fwd);
    out.letters.push_back(HoughtonH2::kSwap);
    for (std::int64_t i = 0; i < n; ++i) out.letters.push_back(bwd);
  }
  return free_reduce(out, g.labels());
}

// Number of inverted pairs of a shift-0 element, counted over the interval
// hull of its support. Any interval-closed superset gives the same count;
// restricting to the support alone would not, and would break the exact
// +-1 step under right multiplication by a sigma_t.
inline std::int64_t effect(const H2Element& g) {
  if (g.shift != 0)
    throw std::domain_error("effect is defined for shift-0 elements");
  if (g.arrangement.empty()) return 0;
  const std::int64_t lo = g.arrangement.front().first;
  const std::int64_t hi = g.arrangement.back().first;
  std::vector<std::int64_t> seq;
  seq.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t p = lo; p <= hi; ++p) {
    if (p == 0) continue;
    seq.push_back(h2detail::lookup(g.arrangement, p));
  }
  std::int64_t inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv;
}

inline std::int64_t effect(const SupportSymmetricGroup& g,
                           const SupportSymmetricGroup::element_type& e) {
  return effect(g.to_h2(e));
}

// Each sigma_t changes the inversion count by exactly one, so the effect is
// a lower bound for the Y-word metric.
inline std::int64_t y_distance_lower_bound(const H2Element& g) { return effect(g); }

// Keep/delete mask over w_k whose kept subsequence evaluates to `target`,
// minimal in kept letters. Forward DP over positions tracking every
// reachable permutation of the 2k-point window; exhaustive, hence the k cap.
inline std::optional<std::vector<bool>> deletion_subword_exists(
    int k, const H2Element& target) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("exhaustive subsequence search is capped at k = 3");
  SupportSymmetricGroup sym(k);
  const auto tgt = sym.from_h2(target);
  const auto w = build_w(k);
  const auto L = w.letters.size();

  struct Node {
    SupportSymmetricGroup::element_type elem;
    std::size_t kept = 0;
    std::string prev;
    bool took = false;
  };
  std::vector<std::unordered_map<std::string, Node>> layers(L + 1);
  auto upsert = [&](std::size_t p, SupportSymmetricGroup::element_type e,
                    std::size_t kept, std::string prev, bool took) {
    auto key = sym.encode(e);
    auto it = layers[p].find(key);
    if (it == layers[p].end() || kept < it->second.kept)
      layers[p][std::move(key)] = {std::move(e), kept, std::move(prev), took};
  };

  layers[0][sym.encode(sym.identity())] = {sym.identity(), 0, "", false};
  for (std::size_t p = 0; p < L; ++p) {
    const auto& gen = sym.sigma(w.letters[p]);
    for (const auto& [key, node] : layers[p]) {
      upsert(p + 1, node.elem, node.kept, key, false);
      upsert(p + 1, sym.multiply(node.elem, gen), node.kept + 1, key, true);
    }
  }

  auto tkey = sym.encode(tgt);
  if (layers[L].find(tkey) == layers[L].end()) return std::nullopt;

  std::vector<bool> mask(L, false);
  std::string key = tkey;
  for (std::size_t p = L; p > 0; --p) {
    const auto& node = layers[p].at(key);
    mask[p - 1] = node.took;
    key = node.prev;
  }
  return mask;
}

}  // namespace cayley

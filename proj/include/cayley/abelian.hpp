#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/encoding.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/metric.hpp"

namespace cayley {

// Z^r under coordinatewise addition with a finite generating set closed under
// negation. Elements are coordinate vectors; a generator and its negation
// share one label pair.
class AbelianGroup {
 public:
  using element_type = std::vector<std::int64_t>;

  AbelianGroup(int rank, const std::vector<std::vector<std::int64_t>>& generators)
      : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (generators.empty())
      throw std::invalid_argument("generator list must be nonempty");

    std::vector<element_type> base;
    for (const auto& v : generators) {
      if (static_cast<int>(v.size()) != rank)
        throw std::invalid_argument("generator has wrong dimension");
      if (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; }))
        throw std::invalid_argument("zero vector is not a valid generator");
      auto neg = negated(v);
      bool dup = false;
      for (const auto& u : base) dup = dup || u == v || u == neg;
      if (!dup) base.push_back(v);
    }

    const int m = static_cast<int>(base.size());
    images_.reserve(2 * m);
    for (const auto& v : base) images_.push_back(v);
    for (const auto& v : base) images_.push_back(negated(v));
    labels_.reserve(2 * m);
    for (int i = 0; i < 2 * m; ++i)
      labels_.push_back({format(images_[i]), i, (i + m) % (2 * m)});
  }

  int rank() const noexcept { return rank_; }

  element_type identity() const { return element_type(rank_, 0); }

  element_type multiply(const element_type& a, const element_type& b) const {
    element_type c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = a[i] + b[i];
    return c;
  }

  element_type invert(const element_type& a) const { return negated(a); }

  std::span<const GeneratorLabel> labels() const noexcept { return labels_; }

  const element_type& generator(int i) const { return images_.at(i); }

  // Fixed eight bytes per coordinate, sign-biased big-endian, so the byte
  // order of encodings equals lexicographic order of coordinate vectors.
  std::string encode(const element_type& a) const {
    std::string out;
    out.reserve(8 * static_cast<std::size_t>(rank_));
    for (auto c : a) enc::put_i64_ordered(out, c);
    return out;
  }

  std::string format(const element_type& a) const {
    if (rank_ == 1) return std::to_string(a[0]);
    std::string out = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) out.push_back(',');
      out += std::to_string(a[i]);
    }
    out.push_back(')');
    return out;
  }

 private:
  static element_type negated(const element_type& v) {
    element_type out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
  }

  int rank_;
  std::vector<element_type> images_;
  std::vector<GeneratorLabel> labels_;
};

// counts[i] = occurrences of label i in w. The evaluated element depends only
// on this vector, not on the letter order.
using ExponentVector = std::vector<std::int64_t>;

inline ExponentVector exponent_vector(const AbelianGroup& g, const Word& w) {
  check_word(w, g.labels());
  ExponentVector counts(g.labels().size(), 0);
  for (int i : w.letters) ++counts[i];
  return counts;
}

// Exponent vectors of all geodesic words for e, by dynamic programming over
// the distance map: a geodesic of length d always factors through a
// predecessor e * x^{-1} at distance d-1, and every geodesic of such a
// predecessor extends by x.
inline std::set<ExponentVector> geodesic_exponent_vectors(
    const AbelianGroup& g, const AbelianGroup::element_type& e,
    const DistanceMap<AbelianGroup>& dmap) {
  struct Solver {
    const AbelianGroup& g;
    const DistanceMap<AbelianGroup>& dmap;
    std::unordered_map<std::string, std::set<ExponentVector>> memo;

    const std::set<ExponentVector>& run(const AbelianGroup::element_type& x,
                                        const std::string& key, int d) {
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      std::set<ExponentVector> out;
      if (d == 0) {
        out.insert(ExponentVector(g.labels().size(), 0));
      } else {
        for (const auto& l : g.labels()) {
          auto pred = g.multiply(x, g.generator(l.inverse_index));
          auto pkey = g.encode(pred);
          auto pd = dmap.distance(pkey);
          if (!pd || *pd != d - 1) continue;
          for (auto v : run(pred, pkey, d - 1)) {
            ++v[l.index];
            out.insert(std::move(v));
          }
        }
      }
      return memo.emplace(key, std::move(out)).first->second;
    }
  };

  auto key = g.encode(e);
  auto d = dmap.distance(key);
  if (!d) throw OutOfRadiusError("element beyond distance map radius");
  Solver solver{g, dmap, {}};
  return solver.run(e, key, *d);
}

}  // namespace cayley

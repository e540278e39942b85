#pragma once

#include <concepts>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/word.hpp"

namespace cayley {

// Contract every concrete group satisfies: immutable value elements, an
// inversion-closed labeled generating set, and an injective byte encoding.
// The encoding doubles as the canonical sort key for deterministic output.
template <typename G>
concept GroupLike = requires(const G& g, const typename G::element_type& a,
                             const typename G::element_type& b, int i) {
  typename G::element_type;
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.multiply(a, b) } -> std::same_as<typename G::element_type>;
  { g.invert(a) } -> std::same_as<typename G::element_type>;
  { g.labels() } -> std::same_as<std::span<const GeneratorLabel>>;
  { g.generator(i) } -> std::same_as<const typename G::element_type&>;
  { g.encode(a) } -> std::same_as<std::string>;
  { g.format(a) } -> std::same_as<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

// Left-to-right product of the letters' generator images.
template <GroupLike G>
typename G::element_type evaluate(const G& g, const Word& w) {
  check_word(w, g.labels());
  auto acc = g.identity();
  for (int i : w.letters) acc = g.multiply(acc, g.generator(i));
  return acc;
}

// One entry per generator label: (label, e * x).
template <GroupLike G>
std::vector<std::pair<GeneratorLabel, typename G::element_type>>
neighbors(const G& g, const typename G::element_type& e) {
  std::vector<std::pair<GeneratorLabel, typename G::element_type>> out;
  auto ls = g.labels();
  out.reserve(ls.size());
  for (const auto& l : ls)
    out.emplace_back(l, g.multiply(e, g.generator(l.index)));
  return out;
}

}  // namespace cayley

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayley/abelian.hpp"
#include "cayley/errors.hpp"
#include "cayley/houghton.hpp"
#include "cayley/sym_support.hpp"

namespace cayley {

using AnyGroup = std::variant<AbelianGroup, HoughtonH2, SupportSymmetricGroup>;

namespace detail {

inline std::int64_t parse_i64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected integer, got '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

}  // namespace detail

// Accepted spec strings:
//   h2
//   sym:<k>
//   abelian:rank=<r>;gens=<v1|v2|...>   with each v a comma list of integers
inline AnyGroup parse_group_spec(std::string_view spec) {
  if (spec == "h2") return HoughtonH2{};

  if (spec.starts_with("sym:")) {
    auto k = detail::parse_i64(spec.substr(4));
    if (k < 1 || k > 1000) throw ParseError("sym:<k> needs 1 <= k <= 1000");
    return SupportSymmetricGroup(static_cast<int>(k));
  }

  if (spec.starts_with("abelian:")) {
    auto rest = spec.substr(8);
    std::int64_t rank = -1;
    std::vector<std::vector<std::int64_t>> gens;
    for (auto field : detail::split(rest, ';')) {
      if (field.starts_with("rank=")) {
        rank = detail::parse_i64(field.substr(5));
      } else if (field.starts_with("gens=")) {
        for (auto vec : detail::split(field.substr(5), '|')) {
          std::vector<std::int64_t> v;
          for (auto c : detail::split(vec, ',')) v.push_back(detail::parse_i64(c));
          gens.push_back(std::move(v));
        }
      } else {
        throw ParseError("unknown field '" + std::string(field) + "' in group spec");
      }
    }
    if (rank < 1) throw ParseError("abelian spec needs rank=<r> with r >= 1");
    if (gens.empty()) throw ParseError("abelian spec needs gens=<v1|v2|...>");
    return AbelianGroup(static_cast<int>(rank), gens);
  }

  throw ParseError("unknown group spec '" + std::string(spec) + "'");
}

}  // namespace cayley

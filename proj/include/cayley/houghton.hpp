#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/encoding.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Pearl slots are the nonzero integers. `arrangement` maps slot -> pearl for
// the finitely many slots whose pearl moved; it is kept sorted by slot with
// fixed points dropped, so equal elements compare equal structurally.
// `shift` is the cursor position: 0 sits between slots -1 and 1.
struct H2Element {
  std::vector<std::pair<std::int64_t, std::int64_t>> arrangement;
  std::int64_t shift = 0;

  bool operator==(const H2Element&) const = default;
};

// Operational reading of the same data: a snapshot of the pearl string with
// the cursor parked at `shift`. Interconvertible with H2Element at no cost.
using PearlConfiguration = H2Element;

namespace h2detail {

using Arrangement = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Slots skip 0, so translation works through a linearized index.
inline std::int64_t slot_to_linear(std::int64_t p) { return p > 0 ? p - 1 : p; }
inline std::int64_t linear_to_slot(std::int64_t u) { return u >= 0 ? u + 1 : u; }
inline std::int64_t translate_slot(std::int64_t p, std::int64_t t) {
  return linear_to_slot(slot_to_linear(p) + t);
}

inline std::int64_t lookup(const Arrangement& a, std::int64_t slot) {
  auto it = std::lower_bound(
      a.begin(), a.end(), slot,
      [](const auto& pr, std::int64_t s) { return pr.first < s; });
  return (it != a.end() && it->first == slot) ? it->second : slot;
}

inline Arrangement normalized(Arrangement pairs) {
  std::sort(pairs.begin(), pairs.end());
  Arrangement out;
  out.reserve(pairs.size());
  for (const auto& pr : pairs)
    if (pr.first != pr.second) out.push_back(pr);
  return out;
}

// c(p) = a(b(p)); the support stays inside supp(a) u supp(b).
inline Arrangement compose(const Arrangement& a, const Arrangement& b) {
  std::vector<std::int64_t> slots;
  slots.reserve(a.size() + b.size());
  for (const auto& pr : a) slots.push_back(pr.first);
  for (const auto& pr : b) slots.push_back(pr.first);
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  Arrangement out;
  out.reserve(slots.size());
  for (auto p : slots) {
    auto v = lookup(a, lookup(b, p));
    if (v != p) out.emplace_back(p, v);
  }
  return out;
}

// Conjugation by t cursor steps: (p -> q) becomes (p+t -> q+t) slotwise.
inline Arrangement translated(const Arrangement& a, std::int64_t t) {
  Arrangement out;
  out.reserve(a.size());
  for (const auto& [p, q] : a)
    out.emplace_back(translate_slot(p, t), translate_slot(q, t));
  std::sort(out.begin(), out.end());
  return out;
}

inline Arrangement inverted(const Arrangement& a) {
  Arrangement out;
  out.reserve(a.size());
  for (const auto& [p, q] : a) out.emplace_back(q, p);
  std::sort(out.begin(), out.end());
  return out;
}

// Disjoint cycle text, each cycle opened at its minimal slot, cycles ordered
// by that minimum: "((-2,2)(-1,1))". The identity renders as "()".
inline std::string format_cycles(const Arrangement& a) {
  std::string out = "(";
  std::set<std::int64_t> done;
  for (const auto& [p, q] : a) {
    if (done.count(p)) continue;
    out += "(" + std::to_string(p);
    done.insert(p);
    for (auto cur = q; cur != p; cur = lookup(a, cur)) {
      out += "," + std::to_string(cur);
      done.insert(cur);
    }
    out += ")";
  }
  out += ")";
  return out;
}

}  // namespace h2detail

// The Houghton group H2 in its pearls-and-cursor model: generated by the
// cursor shift s (inverse S) and the swap x of the two slots astride the
// cursor. Every element is (arrangement, shift) with the composition law of
// a semidirect product.
class HoughtonH2 {
 public:
  using element_type = H2Element;

  enum Letter : int { kShiftRight = 0, kShiftLeft = 1, kSwap = 2 };

  HoughtonH2()
      : labels_{{"s", 0, 1}, {"S", 1, 0}, {"x", 2, 2}},
        images_{H2Element{{}, 1}, H2Element{{}, -1},
                H2Element{{{-1, 1}, {1, -1}}, 0}} {}

  element_type identity() const { return {}; }

  element_type multiply(const element_type& a, const element_type& b) const {
    return {h2detail::compose(a.arrangement,
                              h2detail::translated(b.arrangement, a.shift)),
            a.shift + b.shift};
  }

  element_type invert(const element_type& a) const {
    return {h2detail::translated(h2detail::inverted(a.arrangement), -a.shift),
            -a.shift};
  }

  std::span<const GeneratorLabel> labels() const noexcept { return labels_; }

  const element_type& generator(int i) const { return images_.at(i); }

  std::string encode(const element_type& a) const {
    std::string out;
    enc::put_varint(out, a.shift);
    for (const auto& [p, q] : a.arrangement) {
      enc::put_varint(out, p);
      enc::put_varint(out, q);
    }
    return out;
  }

  std::string format(const element_type& a) const { return format_literal(a); }

  // Slots immediately left and right of cursor position t.
  static std::pair<std::int64_t, std::int64_t> cursor_slots(std::int64_t t) {
    return {t >= 1 ? t : t - 1, t >= 0 ? t + 1 : t};
  }

  // Replay semantics: mutate a configuration by one command. Deliberately
  // written against the pearl string itself (lookup and write-back), not via
  // multiply(), so the two codepaths check each other.
  static element_type apply_command(const element_type& cfg, int letter) {
    switch (letter) {
      case kShiftRight: {
        auto out = cfg;
        ++out.shift;
        return out;
      }
      case kShiftLeft: {
        auto out = cfg;
        --out.shift;
        return out;
      }
      case kSwap: {
        auto [l, r] = cursor_slots(cfg.shift);
        auto pl = h2detail::lookup(cfg.arrangement, l);
        auto pr = h2detail::lookup(cfg.arrangement, r);
        h2detail::Arrangement pairs;
        pairs.reserve(cfg.arrangement.size() + 2);
        for (const auto& pr_ : cfg.arrangement)
          if (pr_.first != l && pr_.first != r) pairs.push_back(pr_);
        pairs.emplace_back(l, pr);
        pairs.emplace_back(r, pl);
        return {h2detail::normalized(std::move(pairs)), cfg.shift};
      }
      default:
        throw MalformedWordError("unknown command letter " + std::to_string(letter));
    }
  }

  // sigma_t = s^t x s^{-t}: the swap of the two slots astride cursor t.
  static element_type sigma_t(std::int64_t t) {
    auto [l, r] = cursor_slots(t);
    return {{{l, r}, {r, l}}, 0};
  }

  // g_k swaps slot -l with slot l for every l <= k.
  static element_type make_gk(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    H2Element g;
    g.arrangement.reserve(2 * static_cast<std::size_t>(k));
    for (std::int64_t l = k; l >= 1; --l) g.arrangement.emplace_back(-l, l);
    for (std::int64_t l = 1; l <= k; ++l) g.arrangement.emplace_back(l, -l);
    return g;
  }

  // Literal grammar: '(' cycle* ')' '_' shift, each cycle a parenthesized
  // comma list of distinct nonzero slots. An entry repeated anywhere in the
  // cycle list is rejected; cycle notation here is of disjoint cycles only.
  static element_type parse_literal(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() &&
             (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    };
    auto expect = [&](char c) {
      skip_ws();
      if (i >= text.size() || text[i] != c)
        throw ParseError(std::string("expected '") + c + "' in element literal");
      ++i;
    };
    auto parse_int = [&]() -> std::int64_t {
      skip_ws();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("expected integer in element literal");
      std::int64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      return neg ? -v : v;
    };

    expect('(');
    std::set<std::int64_t> seen;
    std::vector<std::vector<std::int64_t>> cycles;
    skip_ws();
    while (i < text.size() && text[i] == '(') {
      ++i;
      std::vector<std::int64_t> cyc;
      for (;;) {
        auto v = parse_int();
        if (v == 0) throw ParseError("slot 0 does not exist");
        if (!seen.insert(v).second)
          throw ParseError("repeated entry " + std::to_string(v) + " in cycle list");
        cyc.push_back(v);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or ')' inside cycle");
      }
      cycles.push_back(std::move(cyc));
      skip_ws();
    }
    expect(')');
    expect('_');
    auto shift = parse_int();
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after element literal");

    h2detail::Arrangement arr;
    for (const auto& cyc : cycles)
      for (std::size_t j = 0; j < cyc.size(); ++j)
        arr.emplace_back(cyc[j], cyc[(j + 1) % cyc.size()]);
    return {h2detail::normalized(std::move(arr)), shift};
  }

  static std::string format_literal(const element_type& a) {
    return h2detail::format_cycles(a.arrangement) + "_" + std::to_string(a.shift);
  }

 private:
  std::vector<GeneratorLabel> labels_;
  std::vector<element_type> images_;
};

}  // namespace cayley

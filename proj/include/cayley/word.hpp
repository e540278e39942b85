#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

// One label per generator. The generating set is closed under inversion and
// inverse_index is an involution; self-inverse generators point at themselves.
struct GeneratorLabel {
  std::string symbol;
  int index = 0;
  int inverse_index = 0;
};

// Free-monoid element: a sequence of label indices, applied left to right.
struct Word {
  std::vector<int> letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool operator==(const Word&) const = default;
};

inline Word concat(Word a, const Word& b) {
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

inline void check_word(const Word& w, std::span<const GeneratorLabel> labels) {
  for (int i : w.letters)
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size())
      throw MalformedWordError("letter index " + std::to_string(i) +
                               " outside generating set of size " +
                               std::to_string(labels.size()));
}

// Deletes adjacent inverse pairs until none remain. Single left-to-right
// stack pass; cascading cancellations fall out of the pop.
inline Word free_reduce(const Word& w, std::span<const GeneratorLabel> labels) {
  check_word(w, labels);
  std::vector<int> stack;
  stack.reserve(w.letters.size());
  for (int i : w.letters) {
    if (!stack.empty() && labels[stack.back()].inverse_index == i)
      stack.pop_back();
    else
      stack.push_back(i);
  }
  return Word{std::move(stack)};
}

// Reverse the word and invert each letter; represents the inverse element.
inline Word invert_word(const Word& w, std::span<const GeneratorLabel> labels) {
  check_word(w, labels);
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(labels[*it].inverse_index);
  return out;
}

// Tokens are generator symbols separated by whitespace or commas. Commas and
// whitespace inside parentheses belong to the token, so tuple-valued symbols
// like (1,0) survive.
inline Word parse_word(std::string_view text, std::span<const GeneratorLabel> labels) {
  std::unordered_map<std::string_view, int> by_symbol;
  for (const auto& l : labels) by_symbol.emplace(l.symbol, l.index);

  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };

  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (depth == 0) throw ParseError("unbalanced ')' in word literal");
        --depth;
      } else if (depth == 0 && is_sep(c)) {
        break;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced '(' in word literal");
    auto tok = text.substr(start, i - start);
    auto it = by_symbol.find(tok);
    if (it == by_symbol.end())
      throw ParseError("unknown generator symbol '" + std::string(tok) + "'");
    w.letters.push_back(it->second);
  }
  return w;
}

inline std::string format_word(const Word& w, std::span<const GeneratorLabel> labels) {
  check_word(w, labels);
  std::string out;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    if (j) out.push_back(' ');
    out += labels[w.letters[j]].symbol;
  }
  return out;
}

}  // namespace cayley

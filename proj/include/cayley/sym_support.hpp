#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/houghton.hpp"

namespace cayley {

// Symmetric group on the 2k slots {-k..-1, 1..k}, generated by the adjacent
// swaps sigma_t for -k < t < k. This is the finite stand-in for shift-0
// elements of H2 whose support fits the window, with the Y-generators of the
// pearl model as its generating set.
class SupportSymmetricGroup {
 public:
  // Images indexed by slot order: e[i] is the pearl sitting in slot_at(i).
  using element_type = std::vector<std::int32_t>;

  explicit SupportSymmetricGroup(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    for (std::int64_t t = -(k - 1); t <= k - 1; ++t) {
      int idx = static_cast<int>(labels_.size());
      labels_.push_back({"x" + std::to_string(t), idx, idx});
      auto [l, r] = HoughtonH2::cursor_slots(t);
      auto img = identity();
      std::swap(img[slot_index(l)], img[slot_index(r)]);
      images_.push_back(std::move(img));
    }
  }

  int k() const noexcept { return k_; }
  int degree() const noexcept { return 2 * k_; }

  std::int64_t slot_at(int idx) const { return idx < k_ ? idx - k_ : idx - k_ + 1; }

  int slot_index(std::int64_t slot) const {
    if (slot == 0 || slot < -k_ || slot > k_)
      throw std::domain_error("slot " + std::to_string(slot) +
                              " outside the 2k-point support window");
    return slot < 0 ? static_cast<int>(slot) + k_ : static_cast<int>(slot) + k_ - 1;
  }

  element_type identity() const {
    element_type e(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i) e[i] = static_cast<std::int32_t>(slot_at(i));
    return e;
  }

  element_type multiply(const element_type& a, const element_type& b) const {
    element_type c(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i) c[i] = a[slot_index(b[i])];
    return c;
  }

  element_type invert(const element_type& a) const {
    element_type c(static_cast<std::size_t>(degree()));
    for (int i = 0; i < degree(); ++i)
      c[slot_index(a[i])] = static_cast<std::int32_t>(slot_at(i));
    return c;
  }

  std::span<const GeneratorLabel> labels() const noexcept { return labels_; }

  const element_type& generator(int i) const { return images_.at(i); }

  std::string encode(const element_type& a) const {
    std::string out;
    out.reserve(a.size());
    for (auto v : a) out.push_back(static_cast<char>(slot_index(v)));
    return out;
  }

  std::string format(const element_type& a) const {
    return h2detail::format_cycles(to_h2(a).arrangement);
  }

  int label_of_t(std::int64_t t) const {
    if (t <= -k_ || t >= k_)
      throw std::domain_error("sigma_" + std::to_string(t) + " is not in Y_k");
    return static_cast<int>(t) + k_ - 1;
  }

  std::int64_t t_of_label(int i) const { return i - (k_ - 1); }

  const element_type& sigma(std::int64_t t) const { return images_.at(label_of_t(t)); }

  // The reversal g_k, the farthest element from the identity in this metric.
  element_type reversal() const { return from_h2(HoughtonH2::make_gk(k_)); }

  H2Element to_h2(const element_type& a) const {
    H2Element out;
    for (int i = 0; i < degree(); ++i)
      if (a[i] != slot_at(i)) out.arrangement.emplace_back(slot_at(i), a[i]);
    return out;
  }

  // Requires shift 0 and support inside the window; slot_index enforces both
  // endpoints of every moved pair.
  element_type from_h2(const H2Element& g) const {
    if (g.shift != 0)
      throw std::domain_error("only shift-0 elements live in the support group");
    auto e = identity();
    for (const auto& pr : g.arrangement) {
      slot_index(pr.second);
      e[slot_index(pr.first)] = static_cast<std::int32_t>(pr.second);
    }
    return e;
  }

 private:
  int k_;
  std::vector<GeneratorLabel> labels_;
  std::vector<element_type> images_;
};

}  // namespace cayley

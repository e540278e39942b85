#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cayley {

// Point of the nonnegative integer lattice; dimension is the vector length.
using LatticePoint = std::vector<std::int64_t>;

// p and q are crossrelated when some coordinate strictly rises and another
// strictly falls: neither dominates the other, and the points differ.
inline bool crossrelated(const LatticePoint& p, const LatticePoint& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("crossrelated points must share a dimension");
  bool up = false, down = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    up = up || p[i] < q[i];
    down = down || p[i] > q[i];
  }
  return up && down;
}

inline bool is_pairwise_crossrelated(std::span<const LatticePoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!crossrelated(points[i], points[j])) return false;
  return true;
}

// In the plane a pairwise-crossrelated set through (x, y) is an antitone
// chain: at most x points strictly left of it, at most y strictly below,
// plus the point itself.
inline std::int64_t size_bound_2d(const LatticePoint& anchor) {
  if (anchor.size() != 2)
    throw std::invalid_argument("the closed-form bound is two-dimensional");
  if (anchor[0] < 0 || anchor[1] < 0)
    throw std::invalid_argument("lattice coordinates must be nonnegative");
  return anchor[0] + anchor[1] + 1;
}

}  // namespace cayley

#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Letter index outside the group's generating set.
struct MalformedWordError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad element literal, word literal, or group spec string.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Queried element lies beyond the radius of the distance map, so the
// question cannot be decided from the map alone.
struct OutOfRadiusError : std::domain_error {
  using std::domain_error::domain_error;
};

// The distance map is too small for the requested computation.
struct InsufficientRadiusError : std::domain_error {
  using std::domain_error::domain_error;
};

// The map exhausted a finite group and no vertex outside B_1(n) exists.
struct NoExteriorError : std::domain_error {
  using std::domain_error::domain_error;
};

// Ball enumeration ran past its memory budget. Carries the last radius
// whose sphere was fully enumerated before the budget was hit.
class MemoryBudgetError : public std::runtime_error {
 public:
  MemoryBudgetError(const std::string& what, int last_complete_radius)
      : std::runtime_error(what), last_complete_radius_(last_complete_radius) {}

  int last_complete_radius() const noexcept { return last_complete_radius_; }

 private:
  int last_complete_radius_;
};

}  // namespace cayley

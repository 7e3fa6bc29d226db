#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jetres/lattice.hpp"

namespace jetres::fan {

using lattice::Vec3;
using Cone = std::vector<Vec3>;
using Triangle = std::array<Vec3, 3>;

// Maximal cones as index lists into a shared ray table.
struct Fan {
  std::vector<Vec3> rays;
  std::vector<std::vector<int>> cones;

  Cone cone(std::size_t i) const;
  int ray_index(const Vec3& r);  // appends the ray if missing
  static Fan from_cones(const std::vector<Cone>& cones);
};

bool is_regular_cone(const Cone& c);

// Generators of a cone in the closed octant ordered counterclockwise as seen
// from inside the octant.
std::vector<Vec3> cyclic_order(const Cone& c);

// Closed membership; any number of generators.
bool cone_contains(const Cone& c, const Vec3& v);

struct FanCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

FanCheck is_fan(const Fan& fan);
bool covers_octant(const Fan& fan);
bool refines(const Fan& fine, const Fan& coarse);

struct SubdivisionReport {
  bool is_fan = false;
  bool covers_octant = false;
  bool all_regular = false;
  bool refines_dual = false;
  std::vector<int> offending;  // non-regular cone indices
  std::vector<std::string> violations;

  bool ok() const { return is_fan && covers_octant && all_regular && refines_dual; }
};

SubdivisionReport verify_regular_subdivision(const Fan& fan, const Fan& dual);

struct SearchResult {
  bool ok = false;
  bool limit_hit = false;
  std::size_t nodes = 0;
  std::vector<Triangle> triangles;
};

// Unimodular triangulation of a convex cone using only the given rays
// (those inside the cone), by backtracking over an advancing front.
SearchResult unimodular_triangulation(const Cone& polygon, const std::vector<Vec3>& rays,
                                      std::size_t limit = 200000);

using Admissible = std::function<bool(const Vec3&, const Vec3&, const Vec3&)>;

// Completes the octant around already placed triangles; every new triangle
// must satisfy the admissibility predicate.
SearchResult complete_octant(const std::vector<Vec3>& rays, const std::vector<Triangle>& placed,
                             const Admissible& admissible, std::size_t limit = 500000);

}  // namespace jetres::fan

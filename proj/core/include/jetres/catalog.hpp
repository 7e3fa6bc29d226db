#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jetres/fan.hpp"
#include "jetres/jets.hpp"
#include "jetres/poly.hpp"

namespace jetres::catalog {

using lattice::Vec3;
using poly::Polynomial;

enum class Family { A_eq, A_ge, B_even, B_odd_small, B_odd_big, C, D, E60, E70, E07, F, H };

const std::vector<Family>& all_families();
std::string to_string(Family f);
// also accepts "B_odd", resolved by the parameters in make_instance
std::optional<Family> family_from_string(std::string_view s);

struct Params {
  int k = 0;
  int l = 0;
  int m = 0;
  int n = 0;
};

struct Instance {
  Family family = Family::E60;
  Params p;

  std::string name() const;  // "B_odd_big(k=3,l=2)"
};

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// family outside the range covered by the paper's generators
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate(const Instance& inst);  // throws InvalidParameters
// "B_odd" becomes B_odd_small or B_odd_big according to k and l
Instance make_instance(std::string_view family, const Params& p);

Polynomial equation(const Instance& inst);

// Verbatim theorem list, duplicates removed, first occurrence order.
std::vector<Vec3> theorem_vectors(const Instance& inst);
std::vector<Vec3> non_primitive(const std::vector<Vec3>& vectors);

// Vectors stated in the text for the y-axis center but left out of the
// theorem's list (E60 only). They are rays of the subdivision.
std::vector<Vec3> second_center_vectors(const Instance& inst);

// coordinate axes contained in the surface, as centers
std::vector<jets::Center> centers(const Instance& inst);

// max over theorem vectors v of the order of f along v
unsigned default_max_level(const Instance& inst);

struct Subdivision {
  fan::Fan fan;
  bool ok = false;
  bool limit_hit = false;
  std::size_t nodes = 0;
  std::vector<Vec3> added_rays;  // dual fan rays that are neither theorem vectors nor unit vectors
  std::string method;
};

// Regular subdivision using the primitive theorem vectors, the unit vectors
// and the dual fan rays. B_odd_big starts from the K cones of the proof.
Subdivision theorem_subdivision(const Instance& inst);

std::vector<fan::Cone> b_odd_k_cones(int k, int l);

struct ChartFormula {
  std::string label;
  int s = -1;  // only for the first family of cones
  fan::Cone cone;
  poly::Monomial exceptional;
  Polynomial strict;          // as it follows from the equation
  poly::Monomial printed_exceptional;
  Polynomial printed_strict;  // as displayed in the proof
};

// the three kinds of K charts of B_odd_big
std::vector<ChartFormula> b_odd_k_charts(int k, int l);

// the small-parameter sweep of a family
std::vector<Instance> sweep(Family f);

}  // namespace jetres::catalog

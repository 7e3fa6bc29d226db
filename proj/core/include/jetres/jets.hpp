#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jetres/poly.hpp"

namespace jetres::jets {

using poly::Polynomial;
using poly::Var;
using poly::VarSet;

// A coordinate center V(axes), e.g. {y,z} for the x-axis.
struct Center {
  std::vector<poly::Axis> axes;

  static Center parse(std::string_view text);  // "yz", "xz", ...
  std::string name() const;
  VarSet initial_vars() const;  // the index-0 jet variables of the axes
};

enum class Status { monomial, non_monomial, dashed, frozen };
std::string to_string(Status s);

using Weight = std::array<std::uint32_t, 3>;

struct ComponentState {
  int id = -1;
  unsigned level = 0;
  VarSet Z;
  std::vector<Polynomial> E;  // empty iff status == monomial
  Status status = Status::monomial;
  std::vector<int> parents;
  bool contact = false;  // F_{level+1} does not vanish on V(Z)
  bool essential = false;
};

Weight weight_vector(const VarSet& Z);
Weight weight_vector(const ComponentState& state);  // throws for frozen states
Weight primitive(const Weight& w);
std::string to_string(const Weight& w);

enum class EssentialRule {
  contact,                    // monomial component meeting the contact locus
  contact_and_weight_change,  // additionally the weight differs from every parent's
};

class CenterNotContained : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JetGraph {
  Polynomial f;
  Center center;
  unsigned first_level = 0;
  unsigned max_level = 0;
  EssentialRule rule = EssentialRule::contact;
  std::vector<ComponentState> nodes;     // indexed by id
  std::vector<std::vector<int>> levels;  // node ids per level, 0..max_level

  std::set<Weight> essential_vectors() const;  // primitive, deduplicated
  bool has_frozen() const;
};

// Level m0 and root state: Z = index-0 variables of the center, m0 the last
// level at which every F_i (i <= m0) vanishes on V(Z).
ComponentState initial_state(const Polynomial& f, const Center& center, unsigned limit = 64);

// (i, Z) -> F_i mod Z
using JetSource = std::function<Polynomial(unsigned, const VarSet&)>;

// computes each F_i mod Z on demand with the Z variables already set to zero
JetSource jets_of(const Polynomial& f);
// reduces precomputed F_0..F_n; the vector must outlive the source
JetSource jets_of(const std::vector<Polynomial>& F);

// Children at level state.level+1 of a monomial state.
std::vector<ComponentState> step(const JetSource& F, const ComponentState& state);

// Children of a state carrying a two-term equation g: coordinate strata plus
// the dashed regular stratum.
std::vector<ComponentState> stratify_nonmonomial(const JetSource& F,
                                                 const ComponentState& state);

bool is_essential(const JetSource& F, const ComponentState& state,
                  const std::vector<const ComponentState*>& parents, EssentialRule rule);

JetGraph explore(const Polynomial& f, const Center& center, unsigned max_level,
                 EssentialRule rule = EssentialRule::contact);

// Maximal coordinate subspaces of X_m over the center, by exhaustive search.
std::vector<VarSet> brute_force_components(const Polynomial& f, const Center& center,
                                           unsigned m);

struct OracleComparison {
  bool equal = false;
  std::vector<VarSet> explored;  // monomial components found by explore
  std::vector<VarSet> oracle;    // brute-force sets outside the non-monomial nodes
  std::size_t oracle_raw = 0;    // all brute-force sets
};

OracleComparison compare_with_oracle(const Polynomial& f, const Center& center, unsigned m);

std::string emit_dot(const JetGraph& graph);

std::string to_string(const VarSet& Z);

}  // namespace jetres::jets

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetres/fan.hpp"
#include "jetres/newton.hpp"
#include "jetres/poly.hpp"

namespace jetres::toric {

using lattice::Vec3;
using poly::Polynomial;
using poly::Var;
using poly::VarSet;

// x = x1^{g1[0]} y1^{g2[0]} z1^{g3[0]} and so on, where g1, g2, g3 are the
// cone generators (the columns of the exponent matrix).
struct MonomialMap {
  std::array<Vec3, 3> columns;

  static MonomialMap from_cone(const fan::Cone& cone);  // throws unless regular
  static Var chart_var(int column);                     // x1, y1, z1
  poly::Monomial image(poly::Axis axis) const;
  std::string to_string() const;  // "x=x1y1z1^2, y=z1, z=y1z1^3"
};

Polynomial total_transform(const Polynomial& f, const MonomialMap& map);

struct ChartTransform {
  poly::Monomial exceptional;
  Polynomial strict;
  bool divisor_only = false;  // the strict transform is a constant
};

ChartTransform strict_transform(const Polynomial& total);

enum class Certificate { certified, inconclusive, misses_divisor, empty };
std::string to_string(Certificate c);

struct CertificateResult {
  Certificate verdict = Certificate::inconclusive;
  std::optional<Var> via;  // variable with unit partial derivative
  bool passed() const { return verdict != Certificate::inconclusive; }
};

CertificateResult smoothness_certificate(const Polynomial& strict, const VarSet& exceptional);

// restriction of strict to divisor = 0, checked against the remaining
// exceptional variables
CertificateResult transversality_certificate(const Polynomial& strict, Var divisor,
                                             const VarSet& exceptional);

enum class Route { automatic, varchenko, charts };
Route route_from_string(const std::string& s);
std::string to_string(Route r);

enum class Verdict { resolved_by_varchenko, resolved_by_charts, inconclusive, invalid_fan };
std::string to_string(Verdict v);

struct ChartReport {
  std::size_t cone_index = 0;
  fan::Cone cone;
  MonomialMap map;
  Polynomial total;
  ChartTransform transform;
  VarSet exceptional_vars;  // chart variables whose generator is not a unit vector
  CertificateResult smoothness;
  std::vector<std::pair<Var, CertificateResult>> transversality;
  bool reconstructs = false;  // exceptional * strict == total

  bool ok() const;
};

struct ResolutionReport {
  Verdict verdict = Verdict::inconclusive;
  fan::SubdivisionReport subdivision;
  bool varchenko_applies = false;
  std::optional<newton::NondegeneracyReport> nondegeneracy;
  std::vector<ChartReport> charts;
  std::vector<std::size_t> failing_charts;
};

ChartReport verify_chart(const Polynomial& f, const fan::Cone& cone);

ResolutionReport verify_embedded_resolution(const Polynomial& f, const fan::Fan& fan,
                                            Route route = Route::automatic);

}  // namespace jetres::toric

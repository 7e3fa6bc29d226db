#include "jetres/toric.hpp"

#include <stdexcept>

#include "jetres/parallel.hpp"

namespace jetres::toric {

using poly::Axis;
using poly::Monomial;

MonomialMap MonomialMap::from_cone(const fan::Cone& cone) {
  if (cone.size() != 3 || !fan::is_regular_cone(cone))
    throw std::invalid_argument("monomial maps need a regular three-dimensional cone");
  return MonomialMap{{cone[0], cone[1], cone[2]}};
}

Var MonomialMap::chart_var(int column) { return Var::chart(static_cast<Axis>(column)); }

Monomial MonomialMap::image(Axis axis) const {
  std::vector<Monomial::Entry> e;
  for (int j = 0; j < 3; ++j) {
    auto d = columns[j][static_cast<int>(axis)];
    if (d > 0) e.emplace_back(chart_var(j), static_cast<std::uint32_t>(d));
  }
  return Monomial(std::move(e));
}

std::string MonomialMap::to_string() const {
  std::string out;
  for (int a = 0; a < 3; ++a) {
    if (a) out += ", ";
    Monomial m = image(static_cast<Axis>(a));
    out += std::string(1, poly::axis_char(static_cast<Axis>(a))) + "=" +
           (m.is_one() ? "1" : m.to_string());
  }
  return out;
}

Polynomial total_transform(const Polynomial& f, const MonomialMap& map) {
  std::array<Monomial, 3> img{map.image(Axis::x), map.image(Axis::y), map.image(Axis::z)};
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    Monomial r;
    for (const auto& [v, d] : m.entries()) {
      if (v.kind != poly::VarKind::plain)
        throw std::invalid_argument("total transforms need a polynomial in x, y, z");
      for (std::uint32_t i = 0; i < d; ++i) r = r * img[static_cast<int>(v.axis)];
    }
    out.add_term(r, c);
  }
  return out;
}

ChartTransform strict_transform(const Polynomial& total) {
  auto content = poly::monomial_content(total);
  ChartTransform t{content.monomial, content.cofactor, content.cofactor.is_constant()};
  return t;
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::certified: return "certified";
    case Certificate::inconclusive: return "inconclusive";
    case Certificate::misses_divisor: return "misses-divisor";
    case Certificate::empty: return "empty";
  }
  return "?";
}

CertificateResult smoothness_certificate(const Polynomial& strict, const VarSet& exceptional) {
  for (int j = 0; j < 3; ++j) {
    Var v = MonomialMap::chart_var(j);
    Polynomial d = poly::reduce_mod_vanishing(poly::partial_derivative(strict, v), exceptional);
    auto c = d.constant_value();
    if (c && *c != 0) return {Certificate::certified, v};
  }
  auto c = poly::reduce_mod_vanishing(strict, exceptional).constant_value();
  if (c && *c != 0) return {Certificate::misses_divisor, std::nullopt};
  return {};
}

CertificateResult transversality_certificate(const Polynomial& strict, Var divisor,
                                             const VarSet& exceptional) {
  Polynomial r = poly::reduce_mod_vanishing(strict, {divisor});
  auto c = r.constant_value();
  if (c) {
    if (*c != 0) return {Certificate::empty, std::nullopt};
    return {};
  }
  VarSet others = exceptional;
  others.erase(divisor);
  return smoothness_certificate(r, others);
}

Route route_from_string(const std::string& s) {
  if (s == "auto") return Route::automatic;
  if (s == "varchenko") return Route::varchenko;
  if (s == "charts") return Route::charts;
  throw std::invalid_argument("unknown route '" + s + "' (expected auto, varchenko or charts)");
}

std::string to_string(Route r) {
  switch (r) {
    case Route::automatic: return "auto";
    case Route::varchenko: return "varchenko";
    case Route::charts: return "charts";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::resolved_by_varchenko: return "resolved-by-Varchenko";
    case Verdict::resolved_by_charts: return "resolved-by-charts";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::invalid_fan: return "invalid-fan";
  }
  return "?";
}

bool ChartReport::ok() const {
  if (!reconstructs || !smoothness.passed()) return false;
  for (const auto& t : transversality)
    if (!t.second.passed()) return false;
  return true;
}

ChartReport verify_chart(const Polynomial& f, const fan::Cone& cone) {
  ChartReport r;
  r.cone = cone;
  r.map = MonomialMap::from_cone(cone);
  r.total = total_transform(f, r.map);
  r.transform = strict_transform(r.total);
  r.reconstructs = r.transform.strict.shifted(r.transform.exceptional) == r.total;
  for (int j = 0; j < 3; ++j) {
    const Vec3& g = cone[j];
    bool unit = g == lattice::e1 || g == lattice::e2 || g == lattice::e3;
    if (!unit) r.exceptional_vars.insert(MonomialMap::chart_var(j));
  }
  r.smoothness = smoothness_certificate(r.transform.strict, r.exceptional_vars);
  for (const auto& v : r.exceptional_vars)
    r.transversality.emplace_back(
        v, transversality_certificate(r.transform.strict, v, r.exceptional_vars));
  return r;
}

ResolutionReport verify_embedded_resolution(const Polynomial& f, const fan::Fan& fan,
                                            Route route) {
  ResolutionReport report;
  newton::DualFan dual = newton::dual_newton_fan(newton::newton_polyhedron(f));
  report.subdivision = fan::verify_regular_subdivision(fan, dual.fan);
  const auto& s = report.subdivision;
  if (!s.is_fan || !s.covers_octant || !s.all_regular) {
    report.verdict = Verdict::invalid_fan;
    return report;
  }

  if (route != Route::charts && s.refines_dual) {
    report.nondegeneracy = newton::is_nondegenerate(f);
    report.varchenko_applies = report.nondegeneracy->nondegenerate;
  }

  if (route != Route::varchenko) {
    report.charts.resize(fan.cones.size());
    parallel_for(fan.cones.size(), [&](std::size_t i) {
      report.charts[i] = verify_chart(f, fan.cone(i));
      report.charts[i].cone_index = i;
    });
    for (const auto& c : report.charts)
      if (!c.ok()) report.failing_charts.push_back(c.cone_index);
  }

  bool charts_ok = route != Route::varchenko && report.failing_charts.empty();
  if (route != Route::charts && report.varchenko_applies)
    report.verdict = Verdict::resolved_by_varchenko;
  else if (charts_ok)
    report.verdict = Verdict::resolved_by_charts;
  else
    report.verdict = Verdict::inconclusive;
  return report;
}

}  // namespace jetres::toric

#include "jetres/catalog.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "jetres/newton.hpp"
#include "jetres/parallel.hpp"

namespace jetres::catalog {

using poly::Axis;
using poly::Monomial;
using poly::Var;

namespace {

struct Term {
  long c;
  int x, y, z;
};

Monomial xyz(Var vx, Var vy, Var vz, int a, int b, int c) {
  std::vector<Monomial::Entry> e;
  if (a > 0) e.emplace_back(vx, a);
  if (b > 0) e.emplace_back(vy, b);
  if (c > 0) e.emplace_back(vz, c);
  return Monomial(std::move(e));
}

Polynomial plain(const std::vector<Term>& terms) {
  Polynomial p;
  for (const auto& t : terms)
    p.add_term(xyz(Var::plain(Axis::x), Var::plain(Axis::y), Var::plain(Axis::z), t.x, t.y, t.z),
               t.c);
  return p;
}

Monomial chart_monomial(int a, int b, int c) {
  return xyz(Var::chart(Axis::x), Var::chart(Axis::y), Var::chart(Axis::z), a, b, c);
}

Polynomial chart(const std::vector<Term>& terms) {
  Polynomial p;
  for (const auto& t : terms) p.add_term(chart_monomial(t.x, t.y, t.z), t.c);
  return p;
}

void require(bool ok, const Instance& inst, const char* what) {
  if (!ok) throw InvalidParameters(to_string(inst.family) + ": " + what);
}

void row(std::vector<Vec3>& out, std::int64_t a, std::int64_t b, std::int64_t from,
         std::int64_t to) {
  for (std::int64_t c = from; c <= to; ++c) out.push_back({a, b, c});
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> all{Family::A_eq, Family::A_ge,        Family::B_even,
                                       Family::B_odd_small, Family::B_odd_big, Family::C,
                                       Family::D,    Family::E60,         Family::E70,
                                       Family::E07,  Family::F,           Family::H};
  return all;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A_eq: return "A_eq";
    case Family::A_ge: return "A_ge";
    case Family::B_even: return "B_even";
    case Family::B_odd_small: return "B_odd_small";
    case Family::B_odd_big: return "B_odd_big";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E60: return "E60";
    case Family::E70: return "E70";
    case Family::E07: return "E07";
    case Family::F: return "F";
    case Family::H: return "H";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : all_families())
    if (to_string(f) == s) return f;
  if (s == "B_odd") return Family::B_odd_big;
  return std::nullopt;
}

std::string Instance::name() const {
  std::string out = to_string(family);
  std::vector<std::string> parts;
  switch (family) {
    case Family::A_eq: parts = {"k=" + std::to_string(p.k), "m=" + std::to_string(p.m)}; break;
    case Family::A_ge:
      parts = {"k=" + std::to_string(p.k), "l=" + std::to_string(p.l), "m=" + std::to_string(p.m)};
      break;
    case Family::B_even:
    case Family::B_odd_small:
    case Family::B_odd_big:
    case Family::C: parts = {"k=" + std::to_string(p.k), "l=" + std::to_string(p.l)}; break;
    case Family::D:
    case Family::F: parts = {"k=" + std::to_string(p.k)}; break;
    case Family::H: parts = {"n=" + std::to_string(p.n)}; break;
    default: break;
  }
  if (parts.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

void validate(const Instance& inst) {
  const auto& p = inst.p;
  switch (inst.family) {
    case Family::A_eq: require(p.k >= 1 && p.m >= p.k, inst, "needs 1 <= k = l <= m"); break;
    case Family::A_ge:
      require(p.m >= 1 && p.l >= p.m && p.k >= p.l, inst, "needs k >= l >= m >= 1");
      break;
    case Family::B_even: require(p.k >= 2 && p.l >= 2, inst, "needs k >= 2 and l >= 2"); break;
    case Family::B_odd_small:
      require(p.k >= 2 && p.l >= p.k + 1, inst, "needs k >= 2 and l >= k+1");
      break;
    case Family::B_odd_big:
      require(p.l >= 2 && p.k >= p.l, inst, "needs 2 <= l <= k");
      break;
    case Family::C: require(p.k >= 1 && p.l >= 2, inst, "needs k >= 1 and l >= 2"); break;
    case Family::D: require(p.k >= 1, inst, "needs k >= 1"); break;
    case Family::F: require(p.k >= 1 && p.k != 2, inst, "needs k >= 1 and k != 2"); break;
    case Family::H: require(p.n >= 2, inst, "needs n >= 2"); break;
    default: break;
  }
}

Instance make_instance(std::string_view family, const Params& p) {
  auto f = family_from_string(family);
  if (!f) throw InvalidParameters("unknown family '" + std::string(family) + "'");
  Instance inst{*f, p};
  if (family == "B_odd") inst.family = p.l >= p.k + 1 ? Family::B_odd_small : Family::B_odd_big;
  validate(inst);
  return inst;
}

Polynomial equation(const Instance& inst) {
  validate(inst);
  const int k = inst.p.k, l = inst.p.l, m = inst.p.m;
  switch (inst.family) {
    case Family::A_ge:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {-1, 1, k, 1}, {-1, 0, 2 * k, 1},
                    {-1, 0, k + l, 1}, {-1, 0, k + m, 1}, {1, 0, 2 * k + l, 0}});
    case Family::A_eq:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {-1, 0, k, 2}, {-1, 1, k, 1}, {-1, 0, 2 * k, 1},
                    {-1, 0, k + m, 1}, {1, 0, 2 * k + m, 0}});
    case Family::B_even:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {-1, 0, 2 * k + 1, 1}, {-1, 0, k + l, 1},
                    {-1, 1, 2 * k + 1, 0}});
    case Family::B_odd_small:
    case Family::B_odd_big:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {-1, 0, l - 1, 2}, {-1, 0, 2 * k + 1, 1},
                    {-1, 1, 2 * k + 1, 0}});
    case Family::C:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {-l, l - 1, 2 * k, 1}, {-1, l, 2 * k, 0},
                    {-1, 0, 2 * k + 2, 0}});
    case Family::D:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {1, 0, 2 * k, 2}, {2, 1, 2 * k, 1},
                    {-1, 0, k + 2, 1}, {1, 2, 2 * k, 0}});
    case Family::E60: return plain({{1, 0, 0, 3}, {1, 0, 3, 1}, {1, 2, 2, 0}});
    case Family::E70: return plain({{1, 0, 0, 3}, {1, 2, 1, 1}, {1, 0, 4, 0}});
    case Family::E07: return plain({{1, 0, 0, 3}, {1, 0, 5, 0}, {1, 2, 2, 0}});
    case Family::F:
      return plain({{1, 0, 0, 3}, {1, 1, 0, 2}, {1, 0, 2 * k, 2}, {2, 1, 2 * k, 1},
                    {1, 2, 2 * k, 0}, {1, 0, 2 * k + 3, 0}});
    case Family::H: {
      const int n = inst.p.n;
      if (n % 3 == 2) return plain({{1, 0, 0, 3}, {1, 3, 1, 0}, {1, 2, (n + 1) / 3, 0}});
      if (n % 3 == 0) return plain({{1, 0, 0, 3}, {1, 1, n / 3, 1}, {1, 3, 1, 0}});
      return plain({{1, 0, 0, 3}, {1, 1, (n - 1) / 3 + 1, 1}, {1, 3, 2, 0}});
    }
  }
  return {};
}

std::vector<Vec3> theorem_vectors(const Instance& inst) {
  validate(inst);
  const std::int64_t k = inst.p.k, l = inst.p.l, m = inst.p.m;
  std::vector<Vec3> v;
  switch (inst.family) {
    case Family::E60:
      v = {{0, 1, 1}, {0, 2, 1}, {1, 1, 1}, {0, 3, 2}, {1, 1, 2}, {1, 2, 2}, {2, 1, 2},
           {2, 1, 3}, {2, 2, 3}, {3, 2, 3}, {3, 2, 4}, {3, 3, 4}, {4, 3, 5}, {5, 4, 6}};
      break;
    case Family::E70:
      v = {{0, 1, 1}, {0, 2, 1}, {0, 1, 2}, {0, 1, 3}, {1, 1, 1}, {1, 1, 2},
           {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {2, 2, 3}, {2, 3, 4}, {2, 3, 5},
           {3, 3, 4}, {3, 4, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 8}};
      break;
    case Family::E07:
      v = {{0, 1, 1}, {0, 2, 1}, {1, 1, 1}, {0, 3, 2}, {1, 1, 2}, {1, 2, 2},
           {2, 1, 2}, {2, 2, 3}, {3, 2, 3}, {3, 2, 4}, {3, 3, 4}, {4, 3, 5},
           {5, 3, 5}, {5, 4, 6}, {6, 4, 7}, {7, 5, 8}, {9, 6, 10}};
      break;
    case Family::A_eq:
      row(v, 0, 1, 1, k + m);
      for (std::int64_t s = 1; s <= k - 1; ++s) row(v, s, 1, s, m + k - s);
      row(v, k, 1, k, m);
      break;
    case Family::A_ge:
      row(v, 0, 1, 1, k + l);
      for (std::int64_t s = 1; s <= m - 1; ++s) row(v, s, 1, s, l + k - s);
      row(v, m, 1, m, k + l - m);
      for (std::int64_t r = 1; r <= (k - m) / 2; ++r) row(v, m + r, 1, m + r, k - r);
      break;
    case Family::B_even: {
      for (std::int64_t s = 0; s <= l; ++s) row(v, s, 1, std::max<std::int64_t>(s, 1), k + 1);
      const std::int64_t h = (l + k) / 2;
      for (std::int64_t s = l + 1; s <= h; ++s) row(v, s, 1, s, k - (s - l));
      v.push_back({h, 1, h});
      if ((k + l) % 2) v.push_back({h, 1, h + 1});
      for (std::int64_t a = 0; a <= 2 * l - 1; ++a) v.push_back({a, 2, 2 * k + 1});
      break;
    }
    case Family::B_odd_small:
      for (std::int64_t s = 0; s <= k; ++s) row(v, s, 1, std::max<std::int64_t>(s, 1), k + 1);
      v.push_back({k + 1, 1, k + 1});
      for (std::int64_t a = 0; a <= 2 * k + 1; ++a) v.push_back({a, 2, 2 * k + 1});
      break;
    case Family::B_odd_big:
      for (std::int64_t s = 0; s <= l - 1; ++s)
        row(v, s, 1, std::max<std::int64_t>(s, 1), k + 1);
      v.push_back({l, 1, k + 1});
      for (std::int64_t a = 0; a <= 2 * l - 2; ++a) v.push_back({a, 2, 2 * k + 1});
      break;
    case Family::C: {
      if (k % 3 != 2)
        throw Unsupported("C: the theorem lists vectors only for k = 3q-1");
      const std::int64_t q = (k + 1) / 3, p = l / 2;
      row(v, 0, 1, 1, k);
      row(v, 1, 1, 1, k + 1);
      row(v, 2, 1, 2, k);
      for (std::int64_t j = 1; 2 * j + 1 <= 2 * q; ++j) {
        row(v, 2 * j + 1, 1, 2 * j + 1, k - j);
        if (2 * j + 2 <= 2 * q) row(v, 2 * j + 2, 1, 2 * j + 2, k - j);
      }
      for (std::int64_t j = 1; j <= p; ++j) v.push_back({1, j, (k + 1) * j - 1});
      if (l % 2) v.push_back({1, p + 1, (k + 1) * (p + 1) - 1});
      for (std::int64_t j = 1; j <= l; ++j) v.push_back({2, j, (k + 1) * j - 1});
      for (std::int64_t j = 1; j <= p; ++j) v.push_back({1, j, (k + 1) * j});
      break;
    }
    case Family::D: {
      const std::int64_t h = k / 2;
      v = {{1, 0, 1}, {1, 0, 2}};
      row(v, 0, 1, 1, k);
      row(v, 1, 1, 1, k);
      v.push_back({2, 2, 2 * k + 1});
      v.push_back({1, 1, k + 1});
      row(v, 2, 1, 2, k + 2);
      for (std::int64_t s = 3; s <= h - 1; ++s) row(v, s, 1, s, k - 1);
      v.insert(v.end(), {{h, 1, h}, {h, 1, h + 1}, {h, 1, h + 2}, {h + 1, 1, h + 1},
                         {3, 2, 2 * k + 1}, {3, 2, 2 * k + 2}});
      if (k % 2) v.insert(v.end(), {{h + 1, 1, h + 2}, {k + 2, 2, k + 2}});
      break;
    }
    case Family::F: {
      const std::int64_t a = 2 * (k / 3) + 1;
      const std::int64_t c = k % 3 == 0 ? (4 * k + 6) / 3 : k % 3 == 1 ? (4 * k + 2) / 3
                                                                       : (4 * k + 4) / 3;
      row(v, 0, 1, 1, k);
      row(v, 1, 1, 1, k + 1);
      for (std::int64_t s = 2; s <= std::max<std::int64_t>(a, 2); ++s)
        row(v, s, 1, s, k + 1 - (s - 1) / 2);
      v.push_back({2, 2, 2 * k + 1});
      v.push_back({3, 2, 2 * k + 2});
      for (std::int64_t j = 2; j <= c / 2; ++j) v.push_back({2 * j, 2, 2 * k + 3 - j});
      v.push_back({4, 3, 3 * k + 2});
      for (std::int64_t j = 2; j <= k + 1; ++j) v.push_back({2 * j + 1, 3, 3 * k + 4 - j});
      if (k % 3 == 1) v.push_back({3 * k + 2, 3, 3 * k + 2});
      break;
    }
    case Family::H: {
      const std::int64_t n = inst.p.n;
      if (n % 3 == 2) {
        const std::int64_t kk = (n + 1) / 3;
        v = {{2, 0, 1}, {3, 0, 2}};
        for (std::int64_t s = 0; s <= kk - 1; ++s) v.push_back({s, 1, s + 1});
        for (std::int64_t s = 0; s <= 2 * kk - 2; ++s) v.push_back({s, 2, s + 1});
        for (std::int64_t s = 0; s <= 3 * kk - 3; ++s) v.push_back({s, 3, s + 1});
        v.push_back({1, 0, 1});
        for (std::int64_t s = 1; s <= kk; ++s) v.push_back({s, 1, s});
      } else if (n % 3 == 0) {
        const std::int64_t kk = n / 3;
        v = {{2, 0, 1}};
        for (std::int64_t s = 0; s <= kk; ++s) v.push_back({s, 1, s + 1});
        for (std::int64_t s = 0; s <= 2 * kk - 1; ++s) v.push_back({s, 2, s + 1});
        for (std::int64_t s = 0; s <= 3 * kk - 2; ++s) v.push_back({s, 3, s + 1});
        v.push_back({1, 0, 1});
        for (std::int64_t s = 1; s <= kk; ++s) v.push_back({s, 1, s});
      } else {
        const std::int64_t kk = (n - 1) / 3;
        for (std::int64_t s = 0; s <= kk; ++s) v.push_back({s, 1, s + 1});
        for (std::int64_t s = 0; s <= 2 * kk; ++s) v.push_back({s, 2, s + 1});
        for (std::int64_t s = 0; s <= 3 * kk - 1; ++s) v.push_back({s, 3, s + 2});
        v.insert(v.end(), {{1, 0, 1}, {1, 0, 2}, {2, 0, 1}});
        for (std::int64_t s = 1; s <= kk; ++s) v.push_back({s, 1, s});
      }
      break;
    }
  }
  std::vector<Vec3> out;
  for (const auto& x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

std::vector<Vec3> non_primitive(const std::vector<Vec3>& vectors) {
  std::vector<Vec3> out;
  for (const auto& v : vectors)
    if (lattice::content(v) != 1) out.push_back(v);
  return out;
}

std::vector<jets::Center> centers(const Instance& inst) {
  Polynomial f = equation(inst);
  std::vector<jets::Center> out;
  for (auto axes : {std::vector<Axis>{Axis::y, Axis::z}, std::vector<Axis>{Axis::x, Axis::z},
                    std::vector<Axis>{Axis::x, Axis::y}}) {
    poly::VarSet vars;
    for (Axis a : axes) vars.insert(Var::plain(a));
    if (poly::reduce_mod_vanishing(f, vars).is_zero()) out.push_back(jets::Center{axes});
  }
  return out;
}

unsigned default_max_level(const Instance& inst) {
  Polynomial f = equation(inst);
  std::int64_t best = 0;
  for (const auto& v : theorem_vectors(inst)) {
    std::int64_t order = std::numeric_limits<std::int64_t>::max();
    for (const auto& term : f.terms())
      order = std::min(order, lattice::dot(v, newton::exponent(term.first)));
    best = std::max(best, order);
  }
  return static_cast<unsigned>(best);
}

std::vector<fan::Cone> b_odd_k_cones(int k, int l) {
  const std::int64_t K = k, L = l;
  std::vector<fan::Cone> cones;
  for (std::int64_t s = L - 1; s <= K - 1; ++s)
    cones.push_back({lattice::e1, {L - 1, 1, s}, {L - 1, 1, s + 1}});
  cones.push_back({lattice::e1, {L - 1, 1, K}, {L, 1, K + 1}});
  cones.push_back({lattice::e1, {1, 0, 1}, {L, 1, K + 1}});
  cones.push_back({{L - 1, 1, K}, {2 * L - 2, 2, 2 * K + 1}, {L, 1, K + 1}});
  return cones;
}

std::vector<Vec3> second_center_vectors(const Instance& inst) {
  if (inst.family == Family::E60) return {{1, 0, 1}, {1, 0, 2}};
  return {};
}

Subdivision theorem_subdivision(const Instance& inst) {
  Subdivision sub;
  newton::DualFan dual = newton::dual_newton_fan(newton::newton_polyhedron(equation(inst)));
  auto vectors = theorem_vectors(inst);
  std::vector<Vec3> rays;
  for (const auto& v : vectors) rays.push_back(lattice::primitive(v));
  for (const auto& v : second_center_vectors(inst))
    if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(v);
  rays.insert(rays.end(), {lattice::e1, lattice::e2, lattice::e3});
  for (const auto& r : dual.fan.rays)
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) {
      rays.push_back(r);
      sub.added_rays.push_back(r);
    }

  std::vector<fan::Cone> cones;
  if (inst.family == Family::B_odd_big) {
    sub.method = "K cones of the proof, remaining octant by unimodular search";
    auto k_cones = b_odd_k_cones(inst.p.k, inst.p.l);
    std::vector<fan::Triangle> placed;
    for (const auto& c : k_cones) placed.push_back({c[0], c[1], c[2]});
    auto in_common_cone = [&](const Vec3& u, const Vec3& v, const Vec3& w) {
      for (std::size_t i = 0; i < dual.fan.cones.size(); ++i) {
        fan::Cone d = dual.fan.cone(i);
        if (fan::cone_contains(d, u) && fan::cone_contains(d, v) && fan::cone_contains(d, w))
          return true;
      }
      return false;
    };
    auto r = fan::complete_octant(rays, placed, in_common_cone);
    sub.ok = r.ok;
    sub.limit_hit = r.limit_hit;
    sub.nodes = r.nodes;
    cones = k_cones;
    for (const auto& t : r.triangles) cones.push_back({t[0], t[1], t[2]});
  } else {
    sub.method = "unimodular search in each dual cone";
    std::vector<fan::SearchResult> results(dual.fan.cones.size());
    parallel_for(results.size(), [&](std::size_t i) {
      results[i] = fan::unimodular_triangulation(dual.fan.cone(i), rays);
    });
    sub.ok = true;
    for (const auto& r : results) {
      sub.ok = sub.ok && r.ok;
      sub.limit_hit = sub.limit_hit || r.limit_hit;
      sub.nodes += r.nodes;
      for (const auto& t : r.triangles) cones.push_back({t[0], t[1], t[2]});
    }
  }
  if (sub.ok) sub.fan = fan::Fan::from_cones(cones);
  return sub;
}

std::vector<ChartFormula> b_odd_k_charts(int k, int l) {
  std::vector<ChartFormula> out;
  const int K = k, L = l;
  for (int s = L - 1; s < K; ++s) {
    ChartFormula c;
    c.label = "[(1,0,0),(l-1,1,s),(l-1,1,s+1)]";
    c.s = s;
    c.cone = {lattice::e1, {L - 1, 1, s}, {L - 1, 1, s + 1}};
    c.exceptional = chart_monomial(0, 2 * s + L - 1, 2 * s + L + 1);
    c.strict = chart({{1, 0, s - L + 1, s - L + 2},
                      {1, 1, 0, 0},
                      {-1, 0, 0, 0},
                      {-1, 0, 2 * K - s - L + 2, 2 * K - s - L + 1},
                      {-1, 1, 2 * K - 2 * s + 1, 2 * K - 2 * s - 1}});
    c.printed_exceptional = c.exceptional;
    c.printed_strict = chart({{1, 0, s - L + 1, s - L + 2},
                              {-1, 1, 0, 0},
                              {-1, 0, 2 * K - s - L + 2, 2 * K - s - L + 1},
                              {-1, 1, 2 * K - 2 * s + 1, 2 * K + 2 * s - 1}});
    out.push_back(std::move(c));
  }
  {
    ChartFormula c;
    c.label = "[(1,0,0),(l-1,1,k),(l,1,k+1)]";
    c.cone = {lattice::e1, {L - 1, 1, K}, {L, 1, K + 1}};
    c.exceptional = chart_monomial(0, 2 * K + L - 1, 2 * K + L + 1);
    c.strict = chart({{1, 0, K - L + 1, K - L + 2},
                      {1, 1, 0, 1},
                      {-1, 0, 0, 0},
                      {-1, 0, K - L + 2, K - L + 1},
                      {-1, 1, 1, 0}});
    c.printed_exceptional = c.exceptional;
    c.printed_strict = chart({{1, 0, K - L + 1, K - L},
                              {-1, 1, 0, 1},
                              {-1, 0, 0, 0},
                              {-1, 0, K - L + 2, K - L + 1},
                              {-1, 1, 1, 0}});
    out.push_back(std::move(c));
  }
  {
    ChartFormula c;
    c.label = "[(1,0,0),(1,0,1),(l,1,k+1)]";
    c.cone = {lattice::e1, {1, 0, 1}, {L, 1, K + 1}};
    c.exceptional = chart_monomial(0, 1, 2 * K + L + 1);
    c.strict = chart({{1, 0, 2, K - L + 2},
                      {1, 1, 2, 1},
                      {-1, 0, 1, 0},
                      {-1, 0, 0, K - L + 1},
                      {-1, 1, 0, 0}});
    c.printed_exceptional = c.exceptional;
    c.printed_strict = chart({{1, 0, 2, K - L + 2},
                              {-1, 1, 2, 1},
                              {-1, 0, 1, 0},
                              {-1, 0, 0, K - L + 1},
                              {-1, 1, 0, 0}});
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Instance> sweep(Family f) {
  std::vector<Instance> out;
  auto add = [&](Params p) { out.push_back({f, p}); };
  switch (f) {
    case Family::A_eq:
      for (int k = 1; k <= 4; ++k)
        for (int m = k; m <= 6; ++m) add({k, k, m, 0});
      break;
    case Family::A_ge:
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= k; ++l)
          for (int m = 1; m <= l; ++m) add({k, l, m, 0});
      break;
    case Family::B_even:
      for (int k = 2; k <= 5; ++k)
        for (int l = 2; l <= 4; ++l) add({k, l, 0, 0});
      break;
    case Family::B_odd_small:
      for (int k = 2; k <= 4; ++k)
        for (int l = k + 1; l <= 5; ++l) add({k, l, 0, 0});
      break;
    case Family::B_odd_big:
      for (int k = 2; k <= 5; ++k)
        for (int l = 2; l <= k; ++l) add({k, l, 0, 0});
      break;
    case Family::C:
      for (int k : {2, 5})
        for (int l = 2; l <= 5; ++l) add({k, l, 0, 0});
      break;
    case Family::D:
      for (int k = 1; k <= 5; ++k) add({k, 0, 0, 0});
      break;
    case Family::F:
      for (int k : {1, 3, 4, 5}) add({k, 0, 0, 0});
      break;
    case Family::H:
      for (int n = 2; n <= 10; ++n) add({0, 0, 0, n});
      break;
    default: add({}); break;
  }
  return out;
}

}  // namespace jetres::catalog

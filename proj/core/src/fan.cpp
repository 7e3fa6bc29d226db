#include "jetres/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jetres::fan {

using lattice::cross;
using lattice::det;
using lattice::dot;

Cone Fan::cone(std::size_t i) const {
  Cone c;
  for (int r : cones.at(i)) c.push_back(rays.at(static_cast<std::size_t>(r)));
  return c;
}

int Fan::ray_index(const Vec3& r) {
  auto it = std::find(rays.begin(), rays.end(), r);
  if (it != rays.end()) return static_cast<int>(it - rays.begin());
  rays.push_back(r);
  return static_cast<int>(rays.size() - 1);
}

Fan Fan::from_cones(const std::vector<Cone>& cones) {
  Fan f;
  std::vector<Vec3> all;
  for (const auto& c : cones) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  f.rays = all;
  for (const auto& c : cones) {
    std::vector<int> idx;
    for (const auto& r : c) idx.push_back(f.ray_index(r));
    f.cones.push_back(idx);
  }
  return f;
}

bool is_regular_cone(const Cone& c) {
  switch (c.size()) {
    case 1: return lattice::content(c[0]) == 1;
    case 2: return lattice::content(cross(c[0], c[1])) == 1;
    case 3: {
      std::int64_t d = det(c[0], c[1], c[2]);
      return d == 1 || d == -1;
    }
    default: return false;
  }
}

namespace {

// r in the closed two-dimensional cone spanned by p and q
bool in_cone2(const Vec3& p, const Vec3& q, const Vec3& r) {
  if (det(p, q, r) != 0) return false;
  Vec3 n = cross(p, q);
  if (lattice::is_zero(n)) return lattice::is_zero(cross(p, r)) && dot(p, r) >= 0;
  return dot(cross(p, r), n) >= 0 && dot(cross(r, q), n) >= 0;
}

bool in_triangle(const Triangle& t, const Vec3& r) {
  return det(t[0], t[1], r) >= 0 && det(t[1], t[2], r) >= 0 && det(t[2], t[0], r) >= 0;
}

// interiors of two positively oriented triangles intersect
bool overlap(const Triangle& a, const Triangle& b) {
  for (int pass = 0; pass < 2; ++pass) {
    const Triangle& T = pass ? b : a;
    const Triangle& U = pass ? a : b;
    for (int i = 0; i < 3; ++i) {
      const Vec3& p = T[i];
      const Vec3& q = T[(i + 1) % 3];
      if (det(p, q, U[0]) <= 0 && det(p, q, U[1]) <= 0 && det(p, q, U[2]) <= 0) return false;
    }
  }
  return true;
}

Triangle oriented(const Cone& c) {
  Triangle t{c[0], c[1], c[2]};
  if (det(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

}  // namespace

std::vector<Vec3> cyclic_order(const Cone& c) {
  if (c.size() < 3) return c;
  if (c.size() == 3) {
    Triangle t = oriented(c);
    return {t[0], t[1], t[2]};
  }
  std::map<Vec3, Vec3> next;
  for (const auto& p : c)
    for (const auto& q : c) {
      if (p == q) continue;
      bool supporting = true, blocked = false;
      for (const auto& r : c) {
        if (r == p || r == q) continue;
        if (det(p, q, r) < 0) supporting = false;
        if (det(p, q, r) == 0 && in_cone2(p, q, r)) blocked = true;
      }
      if (supporting && !blocked) next[p] = q;
    }
  Vec3 start = *std::min_element(c.begin(), c.end());
  std::vector<Vec3> order{start};
  while (true) {
    auto it = next.find(order.back());
    if (it == next.end()) throw std::invalid_argument("cone generators are not in convex position");
    if (it->second == start) break;
    order.push_back(it->second);
    if (order.size() > c.size()) throw std::invalid_argument("cone generators are not in convex position");
  }
  return order;
}

bool cone_contains(const Cone& c, const Vec3& v) {
  if (c.empty()) return false;
  if (c.size() == 1) return lattice::is_zero(cross(c[0], v)) && dot(c[0], v) >= 0;
  if (c.size() == 2) return in_cone2(c[0], c[1], v);
  auto o = cyclic_order(c);
  for (std::size_t i = 0; i < o.size(); ++i)
    if (det(o[i], o[(i + 1) % o.size()], v) < 0) return false;
  return true;
}

FanCheck is_fan(const Fan& fan) {
  FanCheck r;
  std::vector<Triangle> tris;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    Cone c = fan.cone(i);
    std::string name = "cone " + std::to_string(i);
    if (c.size() != 3) {
      r.violations.push_back(name + " is not three-dimensional simplicial");
      continue;
    }
    if (!std::all_of(c.begin(), c.end(), lattice::in_closed_octant)) {
      r.violations.push_back(name + " leaves the positive octant");
      continue;
    }
    if (det(c[0], c[1], c[2]) == 0) {
      r.violations.push_back(name + " is degenerate");
      continue;
    }
    tris.push_back(oriented(c));
    source.push_back(i);
  }
  auto is_vertex = [](const Triangle& t, const Vec3& v) {
    return std::find(t.begin(), t.end(), v) != t.end();
  };
  for (std::size_t a = 0; a < tris.size(); ++a)
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      const Triangle& T = tris[a];
      const Triangle& U = tris[b];
      std::string pair = "cones " + std::to_string(source[a]) + " and " + std::to_string(source[b]);
      if (overlap(T, U)) {
        r.violations.push_back(pair + " overlap");
        continue;
      }
      bool bad = false;
      for (const auto& u : U)
        if (!is_vertex(T, u) && in_triangle(T, u)) bad = true;
      for (const auto& t : T)
        if (!is_vertex(U, t) && in_triangle(U, t)) bad = true;
      if (bad) r.violations.push_back(pair + " meet outside a common face");
    }
  r.ok = r.violations.empty();
  return r;
}

bool covers_octant(const Fan& fan) {
  if (fan.cones.empty()) return false;
  std::map<std::pair<Vec3, Vec3>, int> edges;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    Cone c = fan.cone(i);
    if (c.size() != 3) return false;
    for (int k = 0; k < 3; ++k) {
      Vec3 a = c[k], b = c[(k + 1) % 3];
      if (b < a) std::swap(a, b);
      ++edges[{a, b}];
    }
  }
  for (const auto& [e, n] : edges) {
    if (n == 2) continue;
    bool on_boundary = false;
    for (int i = 0; i < 3; ++i)
      if (e.first[i] == 0 && e.second[i] == 0) on_boundary = true;
    if (n != 1 || !on_boundary) return false;
  }
  return true;
}

bool refines(const Fan& fine, const Fan& coarse) {
  for (std::size_t i = 0; i < fine.cones.size(); ++i) {
    Cone c = fine.cone(i);
    bool inside = false;
    for (std::size_t j = 0; j < coarse.cones.size() && !inside; ++j) {
      Cone d = coarse.cone(j);
      inside = std::all_of(c.begin(), c.end(), [&](const Vec3& v) { return cone_contains(d, v); });
    }
    if (!inside) return false;
  }
  return true;
}

SubdivisionReport verify_regular_subdivision(const Fan& fan, const Fan& dual) {
  SubdivisionReport r;
  FanCheck check = is_fan(fan);
  r.is_fan = check.ok;
  r.violations = check.violations;
  r.covers_octant = covers_octant(fan);
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    if (!is_regular_cone(fan.cone(i))) r.offending.push_back(static_cast<int>(i));
  r.all_regular = r.offending.empty() && !fan.cones.empty();
  r.refines_dual = refines(fan, dual);
  return r;
}

}  // namespace jetres::fan

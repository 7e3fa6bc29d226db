#include "jetres/newton.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "jetres/parallel.hpp"

namespace jetres::newton {

using lattice::cross;
using lattice::dot;
using lattice::operator+;
using lattice::operator-;
using poly::Axis;
using poly::Var;

Vec3 exponent(const poly::Monomial& m) {
  Vec3 e{0, 0, 0};
  for (const auto& [v, d] : m.entries()) {
    if (v.kind != poly::VarKind::plain)
      throw std::invalid_argument("Newton polyhedra need a polynomial in x, y, z");
    e[static_cast<int>(v.axis)] = d;
  }
  return e;
}

NewtonPolyhedron newton_polyhedron(const poly::Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("Newton polyhedron of the zero polynomial");
  NewtonPolyhedron np;
  for (const auto& term : f.terms()) np.support.push_back(exponent(term.first));
  std::sort(np.support.begin(), np.support.end());
  const auto& pts = np.support;
  const std::vector<Vec3> axes{lattice::e1, lattice::e2, lattice::e3};

  std::vector<Vec3> dirs = axes;
  for (const auto& p : pts)
    for (const auto& q : pts)
      if (p != q) dirs.push_back(p - q);
  std::set<Vec3> candidates;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      Vec3 n = cross(dirs[i], dirs[j]);
      if (lattice::is_zero(n)) continue;
      if (n[0] <= 0 && n[1] <= 0 && n[2] <= 0) n = {-n[0], -n[1], -n[2]};
      if (n[0] < 0 || n[1] < 0 || n[2] < 0) continue;
      candidates.insert(lattice::primitive(n));
    }

  for (const auto& n : candidates) {
    std::int64_t off = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : pts) off = std::min(off, dot(n, p));
    std::vector<Vec3> on;
    for (const auto& p : pts)
      if (dot(n, p) == off) on.push_back(p);
    // the face has dimension two when its points and the recession
    // directions orthogonal to n span a plane
    std::vector<Vec3> span;
    for (std::size_t i = 1; i < on.size(); ++i) span.push_back(on[i] - on[0]);
    for (const auto& e : axes)
      if (dot(n, e) == 0) span.push_back(e);
    bool planar = false;
    for (std::size_t i = 0; i < span.size() && !planar; ++i)
      for (std::size_t j = i + 1; j < span.size() && !planar; ++j)
        planar = !lattice::is_zero(cross(span[i], span[j]));
    if (planar) np.facets.push_back({n, off, on});
  }

  for (const auto& p : pts) {
    int count = 0;
    for (const auto& f2 : np.facets)
      if (std::find(f2.points.begin(), f2.points.end(), p) != f2.points.end()) ++count;
    if (count >= 3) np.vertices.push_back(p);
  }
  return np;
}

DualFan dual_newton_fan(const NewtonPolyhedron& np) {
  DualFan d;
  for (const auto& f : np.facets) d.fan.ray_index(f.normal);
  for (const auto& v : np.vertices) {
    fan::Cone gens;
    for (const auto& f : np.facets)
      if (std::find(f.points.begin(), f.points.end(), v) != f.points.end())
        gens.push_back(f.normal);
    std::vector<int> idx;
    for (const auto& g : fan::cyclic_order(gens)) idx.push_back(d.fan.ray_index(g));
    d.fan.cones.push_back(idx);
    d.vertex.push_back(v);
  }
  return d;
}

poly::Polynomial face_polynomial(const poly::Polynomial& f, const Vec3& w) {
  poly::Polynomial r;
  if (f.is_zero()) return r;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& term : f.terms()) best = std::min(best, dot(w, exponent(term.first)));
  for (const auto& [m, c] : f.terms())
    if (dot(w, exponent(m)) == best) r.add_term(m, c);
  return r;
}

namespace {

struct ModTerm {
  std::uint64_t c;
  Vec3 e;
};

std::vector<ModTerm> reduce_mod(const poly::Polynomial& g, unsigned p) {
  std::vector<ModTerm> out;
  for (const auto& [m, c] : g.terms()) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    if (r != 0) out.push_back({r.get_ui(), exponent(m)});
  }
  return out;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

using Uni = std::vector<std::uint64_t>;  // coefficients, low degree first

void trim(Uni& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a <- gcd(a, b); b is clobbered
void gcd_mod(Uni& a, Uni& b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t q = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + p - q * b[i] % p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
}

std::uint64_t eval_uni(const Uni& a, std::uint64_t z, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = (r * z + a[i]) % p;
  return r;
}

// a common zero of the given polynomials on (F_p^*)^3, if any
std::optional<std::array<unsigned, 3>> torus_zero(const std::vector<std::vector<ModTerm>>& polys,
                                                  unsigned p) {
  std::int64_t maxdeg = 0, zdeg = 0;
  for (const auto& g : polys)
    for (const auto& t : g) {
      maxdeg = std::max({maxdeg, t.e[0], t.e[1]});
      zdeg = std::max(zdeg, t.e[2]);
    }
  std::vector<std::vector<std::uint64_t>> pw(p, std::vector<std::uint64_t>(maxdeg + 1));
  for (unsigned v = 0; v < p; ++v) {
    pw[v][0] = 1;
    for (std::int64_t e = 1; e <= maxdeg; ++e) pw[v][e] = pw[v][e - 1] * v % p;
  }
  // coefficient of each term after fixing x
  std::vector<std::vector<std::uint64_t>> cx(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) cx[i].resize(polys[i].size());
  Uni g, u;
  g.reserve(zdeg + 1);
  u.reserve(zdeg + 1);
  auto fill = [&](std::size_t i, unsigned y, Uni& out) {
    out.assign(zdeg + 1, 0);
    const auto& poly = polys[i];
    for (std::size_t t = 0; t < poly.size(); ++t) {
      auto& slot = out[poly[t].e[2]];
      slot = (slot + cx[i][t] * pw[y][poly[t].e[1]]) % p;
    }
    trim(out);
  };
  for (unsigned x = 1; x < p; ++x) {
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t t = 0; t < polys[i].size(); ++t)
        cx[i][t] = polys[i][t].c * pw[x][polys[i][t].e[0]] % p;
    for (unsigned y = 1; y < p; ++y) {
      fill(0, y, g);
      for (std::size_t i = 1; i < polys.size() && !(g.size() == 1); ++i) {
        fill(i, y, u);
        gcd_mod(g, u, p);
      }
      if (g.size() == 1) continue;  // nonzero constant: no common root
      for (unsigned z = 1; z < p; ++z)
        if (g.empty() || eval_uni(g, z, p) == 0) return std::array<unsigned, 3>{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

NondegeneracyReport is_nondegenerate(const poly::Polynomial& f, const std::vector<unsigned>& primes) {
  NondegeneracyReport report;
  report.primes = primes;
  NewtonPolyhedron np = newton_polyhedron(f);

  // interior points of the normal cones of compact faces: facet normals,
  // sums of two normals, sums of all normals at a vertex
  std::vector<Vec3> weights;
  for (const auto& a : np.facets) weights.push_back(a.normal);
  for (std::size_t i = 0; i < np.facets.size(); ++i)
    for (std::size_t j = i + 1; j < np.facets.size(); ++j)
      weights.push_back(np.facets[i].normal + np.facets[j].normal);
  for (const auto& v : np.vertices) {
    Vec3 s{0, 0, 0};
    for (const auto& a : np.facets)
      if (std::find(a.points.begin(), a.points.end(), v) != a.points.end()) s = s + a.normal;
    weights.push_back(s);
  }
  std::vector<std::pair<Vec3, poly::Polynomial>> faces;
  std::set<std::string> seen;
  for (const auto& w : weights) {
    if (w[0] <= 0 || w[1] <= 0 || w[2] <= 0) continue;
    poly::Polynomial face = face_polynomial(f, w);
    if (face.size() < 2) continue;  // a monomial has no zero on the torus
    if (seen.insert(face.to_string()).second) faces.emplace_back(lattice::primitive(w), face);
  }
  for (const auto& fc : faces) report.faces.push_back(fc.second.to_string());

  std::vector<std::optional<Witness>> found(faces.size() * primes.size());
  parallel_for(found.size(), [&](std::size_t k) {
    const auto& [w, face] = faces[k / primes.size()];
    unsigned p = primes[k % primes.size()];
    std::vector<std::vector<ModTerm>> system{reduce_mod(face, p)};
    for (int a = 0; a < 3; ++a)
      system.push_back(
          reduce_mod(poly::partial_derivative(face, Var::plain(static_cast<Axis>(a))), p));
    if (auto z = torus_zero(system, p)) found[k] = Witness{w, face.to_string(), p, *z};
  });
  for (auto& w : found)
    if (w) {
      report.nondegenerate = false;
      report.witness = w;
      break;
    }
  return report;
}

}  // namespace jetres::newton

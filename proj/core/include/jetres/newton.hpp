#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetres/fan.hpp"
#include "jetres/lattice.hpp"
#include "jetres/poly.hpp"

namespace jetres::newton {

using lattice::Vec3;

struct Facet {
  Vec3 normal;  // primitive, inward, in the closed octant
  std::int64_t offset = 0;
  std::vector<Vec3> points;  // support points on the facet

  bool compact() const { return normal[0] > 0 && normal[1] > 0 && normal[2] > 0; }
};

struct NewtonPolyhedron {
  std::vector<Vec3> support;
  std::vector<Vec3> vertices;
  std::vector<Facet> facets;
};

// exponent triple of a monomial in the plain variables x, y, z
Vec3 exponent(const poly::Monomial& m);

NewtonPolyhedron newton_polyhedron(const poly::Polynomial& f);

struct DualFan {
  fan::Fan fan;               // one maximal cone per vertex, generators in cyclic order
  std::vector<Vec3> vertex;   // vertex dual to each cone
};

DualFan dual_newton_fan(const NewtonPolyhedron& np);

// terms of f minimising <w, exponent>
poly::Polynomial face_polynomial(const poly::Polynomial& f, const Vec3& w);

struct Witness {
  Vec3 weight;  // selects the face
  std::string face;
  unsigned prime = 0;
  std::array<unsigned, 3> point{};
};

struct NondegeneracyReport {
  bool nondegenerate = true;
  std::vector<unsigned> primes;
  std::vector<std::string> faces;  // compact face polynomials checked
  std::optional<Witness> witness;
};

// Searches every compact face polynomial for a common zero with its partials
// on (F_p^*)^3. A certificate, not a proof.
NondegeneracyReport is_nondegenerate(const poly::Polynomial& f,
                                     const std::vector<unsigned>& primes = {101, 211, 307});

}  // namespace jetres::newton

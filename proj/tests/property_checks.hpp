#pragma once

#include <random>
#include <string>
#include <vector>

#include "jetres/catalog.hpp"
#include "jetres/jets.hpp"
#include "jetres/poly.hpp"
#include "jetres/toric.hpp"

namespace jetres::properties {

using poly::Axis;
using poly::Polynomial;
using poly::Var;

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

inline Polynomial random_polynomial(std::mt19937& rng, int terms = 4, int max_degree = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree);
  Polynomial p;
  for (int i = 0; i < terms; ++i) {
    std::vector<poly::Monomial::Entry> e;
    for (Axis a : {Axis::x, Axis::y, Axis::z})
      if (int d = deg(rng); d > 0) e.emplace_back(Var::plain(a), d);
    p.add_term(poly::Monomial(std::move(e)), coeff(rng));
  }
  return p;
}

inline Outcome ring_axioms(unsigned seed, int rounds) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int i = 0; i < rounds; ++i) {
    auto a = random_polynomial(rng), b = random_polynomial(rng), c = random_polynomial(rng);
    const std::string tag = " a=" + a.to_string() + " b=" + b.to_string();
    out.expect(a + b == b + a, "additive commutativity" + tag);
    out.expect(a * b == b * a, "multiplicative commutativity" + tag);
    out.expect((a + b) + c == a + (b + c), "additive associativity" + tag);
    out.expect((a * b) * c == a * (b * c), "multiplicative associativity" + tag);
    out.expect(a * (b + c) == a * b + a * c, "distributivity" + tag);
    out.expect((a - a).is_zero(), "additive inverse" + tag);
    out.expect(a * Polynomial(1) == a && (a + Polynomial()) == a, "identities" + tag);
    out.expect(pow(a, 2) == a * a, "square" + tag);
  }
  return out;
}

inline mpz_class evaluate(const Polynomial& F, const std::map<Var, mpz_class>& values) {
  mpz_class total = 0;
  for (const auto& [m, c] : F.terms()) {
    mpz_class t = c;
    for (const auto& [v, e] : m.entries()) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), values.at(v).get_mpz_t(), e);
      t *= p;
    }
    total += t;
  }
  return total;
}

// F_i at an integer arc equals the t^i coefficient of f along the arc
inline Outcome arc_evaluation(unsigned seed, int rounds, unsigned m = 4) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(-3, 3);
  Outcome out;
  const Var t = Var::chart(Axis::x);
  for (int round = 0; round < rounds; ++round) {
    auto f = random_polynomial(rng, 3, 3);
    auto F = poly::substitute_jets(f, m);
    std::map<Var, mpz_class> values;
    std::map<Var, Polynomial> arcs;
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      Polynomial arc;
      for (unsigned i = 0; i <= m; ++i) {
        int v = value(rng);
        values[Var::jet(a, i)] = v;
        arc.add_term(i ? poly::Monomial::of(t, i) : poly::Monomial(), v);
      }
      arcs[Var::plain(a)] = arc;
    }
    auto along = poly::substitute(f, arcs);
    for (unsigned i = 0; i <= m; ++i) {
      auto expected = along.coefficient(i ? poly::Monomial::of(t, i) : poly::Monomial());
      out.expect(evaluate(F[i], values) == expected,
                 "F_" + std::to_string(i) + " of " + f.to_string());
    }
  }
  return out;
}

inline Outcome content_roundtrip(unsigned seed, int rounds) {
  std::mt19937 rng(seed);
  Outcome out;
  for (int i = 0; i < rounds; ++i) {
    auto f = random_polynomial(rng) * random_polynomial(rng, 1, 4);
    if (f.is_zero()) continue;
    auto c = poly::monomial_content(f);
    out.expect(c.cofactor.shifted(c.monomial) == f, "reconstruct " + f.to_string());
    std::optional<poly::Monomial> g;
    for (const auto& [m, coeff] : c.cofactor.terms()) g = g ? g->gcd(m) : m;
    out.expect(g && g->is_one(), "cofactor content of " + f.to_string());
  }
  return out;
}

// a child never has a smaller weight than a parent
inline Outcome weight_monotonicity(const jets::JetGraph& g) {
  Outcome out;
  for (const auto& node : g.nodes) {
    if (node.status == jets::Status::frozen) continue;
    auto w = jets::weight_vector(node);
    for (int p : node.parents) {
      const auto& parent = g.nodes[static_cast<std::size_t>(p)];
      if (parent.status == jets::Status::frozen) continue;
      auto pw = jets::weight_vector(parent);
      out.expect(w[0] >= pw[0] && w[1] >= pw[1] && w[2] >= pw[2],
                 "edge " + std::to_string(p) + "->" + std::to_string(node.id));
    }
  }
  return out;
}

// exceptional * strict == total on every chart of the B_odd_big subdivisions
inline Outcome chart_reconstruction(int max_k = 5) {
  Outcome out;
  for (int k = 2; k <= max_k; ++k)
    for (int l = 2; l <= k; ++l) {
      auto inst = catalog::make_instance("B_odd", {k, l, 0, 0});
      auto f = catalog::equation(inst);
      auto sub = catalog::theorem_subdivision(inst);
      out.expect(sub.ok, inst.name() + " subdivision");
      for (std::size_t i = 0; i < sub.fan.cones.size(); ++i) {
        auto chart = toric::verify_chart(f, sub.fan.cone(i));
        out.expect(chart.reconstructs &&
                       chart.transform.strict.shifted(chart.transform.exceptional) == chart.total,
                   inst.name() + " cone " + std::to_string(i));
      }
    }
  return out;
}

}  // namespace jetres::properties

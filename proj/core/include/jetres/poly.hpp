#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jetres::poly {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

// plain: the ambient coordinates x, y, z
// jet:   x_i, y_i, z_i
// chart: x1, y1, z1 of a toric chart
enum class VarKind : std::uint8_t { plain = 0, jet = 1, chart = 2 };

char axis_char(Axis a);
Axis axis_from_char(char c);

struct Var {
  VarKind kind = VarKind::plain;
  Axis axis = Axis::x;
  std::uint32_t index = 0;

  static constexpr Var plain(Axis a) { return {VarKind::plain, a, 0}; }
  static constexpr Var jet(Axis a, std::uint32_t i) { return {VarKind::jet, a, i}; }
  static constexpr Var chart(Axis a) { return {VarKind::chart, a, 1}; }

  std::string name() const;

  auto operator<=>(const Var&) const = default;
  bool operator==(const Var&) const = default;
};

using VarSet = std::set<Var>;

class Monomial {
 public:
  using Entry = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial of(Var v, std::uint32_t e = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool contains(Var v) const { return degree(v) > 0; }
  bool contains_any(const VarSet& vars) const;
  bool is_one() const { return entries_.empty(); }

  Monomial operator*(const Monomial& o) const;
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Entry> entries_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly
  Polynomial(const mpz_class& c);  // NOLINT
  static Polynomial variable(Var v);
  static Polynomial term(const mpz_class& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  // the constant value if the polynomial is constant (zero included)
  std::optional<mpz_class> constant_value() const;
  mpz_class coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const mpz_class& c) const;
  Polynomial shifted(const Monomial& m) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  VarSet variables() const;
  std::uint32_t max_degree(Var v) const;

  // terms ordered by total degree, z-heavy terms first within a degree;
  // implicit multiplication, e.g. "z_2^3+x_1^2y_2^2"
  std::string to_string() const;

 private:
  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// F_i = coefficient of t^i in f(sum x_i t^i, sum y_i t^i, sum z_i t^i), i = 0..m
std::vector<Polynomial> substitute_jets(const Polynomial& f, unsigned m);

// F_i reduced modulo the variables of Z, without expanding F_i first
Polynomial jet_component(const Polynomial& f, unsigned i, const VarSet& Z);

// deletes every term that contains a variable of Z
Polynomial reduce_mod_vanishing(const Polynomial& F, const VarSet& Z);

struct Content {
  Monomial monomial;
  Polynomial cofactor;
};

// F = monomial * cofactor with the componentwise minimal exponent pulled out
Content monomial_content(const Polynomial& F);

Polynomial partial_derivative(const Polynomial& F, Var v);

// replaces each plain variable by a polynomial (missing ones are kept)
Polynomial substitute(const Polynomial& F, const std::map<Var, Polynomial>& values);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "z^3+y^3*z+x^2*y^2", "z^3+(x-y)z^2-y^7z-xy^7", "x_1^2y_2^2", "x1-y1*z1"
Polynomial parse(std::string_view text);

}  // namespace jetres::poly

#include "jetres/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace jetres::poly {

char axis_char(Axis a) { return "xyz"[static_cast<int>(a)]; }

Axis axis_from_char(char c) {
  switch (c) {
    case 'x': return Axis::x;
    case 'y': return Axis::y;
    case 'z': return Axis::z;
    default: throw std::invalid_argument(std::string("unknown axis '") + c + "'");
  }
}

std::string Var::name() const {
  std::string s(1, axis_char(axis));
  if (kind == VarKind::jet) s += "_" + std::to_string(index);
  if (kind == VarKind::chart) s += "1";
  return s;
}

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v)
      entries_.back().second += e;
    else
      entries_.emplace_back(v, e);
  }
}

Monomial Monomial::of(Var v, std::uint32_t e) { return Monomial({{v, e}}); }

std::uint32_t Monomial::degree(Var v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& a, const Var& b) { return a.first < b; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& entry : entries_) d += entry.second;
  return d;
}

bool Monomial::contains_any(const VarSet& vars) const {
  for (const auto& entry : entries_)
    if (vars.count(entry.first)) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      r.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      r.entries_.push_back(*b++);
    } else {
      r.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  std::vector<Entry> out;
  for (const auto& [v, e] : entries_) {
    std::uint32_t d = o.degree(v);
    if (d > e) return std::nullopt;
    if (e > d) out.emplace_back(v, e - d);
  }
  for (const auto& [v, e] : o.entries_)
    if (degree(v) == 0) return std::nullopt;
  return Monomial(std::move(out));
}

Monomial Monomial::gcd(const Monomial& o) const {
  std::vector<Entry> out;
  for (const auto& [v, e] : entries_) {
    std::uint32_t d = std::min(e, o.degree(v));
    if (d > 0) out.emplace_back(v, d);
  }
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : entries_) {
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(Var v) { return term(1, Monomial::of(v)); }

Polynomial Polynomial::term(const mpz_class& c, const Monomial& m) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<mpz_class> Polynomial::constant_value() const {
  if (terms_.empty()) return mpz_class(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k);
  return r;
}

VarSet Polynomial::variables() const {
  VarSet vs;
  for (const auto& term : terms_)
    for (const auto& entry : term.first.entries()) vs.insert(entry.first);
  return vs;
}

std::uint32_t Polynomial::max_degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& term : terms_) d = std::max(d, term.first.degree(v));
  return d;
}

namespace {

bool print_before(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto ia = ea.rbegin(), ib = eb.rbegin();
  for (; ia != ea.rend() && ib != eb.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ib->first < ia->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != ea.rend() && ib == eb.rend();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return print_before(a->first, b->first); });
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    const mpz_class& c = t->second;
    mpz_class mag = abs(c);
    if (c < 0)
      s += "-";
    else if (!first)
      s += "+";
    if (t->first.is_one())
      s += mag.get_str();
    else {
      if (mag != 1) s += mag.get_str();
      s += t->first.to_string();
    }
    first = false;
  }
  return s;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial r(1), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

namespace {

using Series = std::vector<Polynomial>;

Series series_mul(const Series& a, const Series& b, unsigned m) {
  Series r(m + 1);
  for (unsigned i = 0; i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= m; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

void series_add(Series& a, const Series& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// f along the arcs up to t^m. The coefficient of v^d only matters up to
// t^(m - d*val[v]), so inner expansions are truncated accordingly.
Series expand(const Polynomial& f, int axis, const std::vector<Series>& arcs,
              const std::array<unsigned, 3>& val, unsigned m) {
  Series out(m + 1);
  if (axis < 0) {
    out[0] = f;
    return out;
  }
  const Var v = Var::plain(static_cast<Axis>(axis));
  std::map<std::uint32_t, Polynomial> by_degree;
  for (const auto& [mono, c] : f.terms()) {
    std::vector<Monomial::Entry> rest;
    std::uint32_t d = 0;
    for (const auto& entry : mono.entries()) {
      if (entry.first == v)
        d = entry.second;
      else
        rest.push_back(entry);
    }
    by_degree[d].add_term(Monomial(std::move(rest)), c);
  }
  Series power(m + 1);
  power[0] = Polynomial(1);
  std::uint32_t have = 0;
  for (const auto& [d, coeff] : by_degree) {
    if (std::uint64_t{d} * val[axis] > m) break;
    for (; have < d; ++have) power = series_mul(power, arcs[axis], m);
    series_add(out, series_mul(expand(coeff, axis - 1, arcs, val, m - d * val[axis]), power, m));
  }
  return out;
}

Series expand(const Polynomial& f, const std::vector<Series>& arcs, unsigned m) {
  std::array<unsigned, 3> val{};
  for (int a = 0; a < 3; ++a) {
    val[a] = m + 1;
    for (unsigned j = 0; j <= m; ++j)
      if (!arcs[a][j].is_zero()) {
        val[a] = j;
        break;
      }
  }
  return expand(f, 2, arcs, val, m);
}

}  // namespace

std::vector<Polynomial> substitute_jets(const Polynomial& f, unsigned m) {
  for (const auto& v : f.variables())
    if (v.kind != VarKind::plain)
      throw std::invalid_argument("substitute_jets expects a polynomial in x, y, z");
  if (f.is_zero()) return std::vector<Polynomial>(m + 1);
  std::vector<Series> arcs(3, Series(m + 1));
  for (int a = 0; a < 3; ++a)
    for (unsigned i = 0; i <= m; ++i)
      arcs[a][i] = Polynomial::variable(Var::jet(static_cast<Axis>(a), i));
  return expand(f, arcs, m);
}

Polynomial jet_component(const Polynomial& f, unsigned i, const VarSet& Z) {
  for (const auto& v : f.variables())
    if (v.kind != VarKind::plain)
      throw std::invalid_argument("jet_component expects a polynomial in x, y, z");
  if (f.is_zero()) return {};
  std::vector<Series> arcs(3, Series(i + 1));
  for (int a = 0; a < 3; ++a)
    for (unsigned j = 0; j <= i; ++j) {
      Var v = Var::jet(static_cast<Axis>(a), j);
      if (!Z.count(v)) arcs[a][j] = Polynomial::variable(v);
    }
  return expand(f, arcs, i)[i];
}

Polynomial reduce_mod_vanishing(const Polynomial& F, const VarSet& Z) {
  if (Z.empty()) return F;
  Polynomial r;
  for (const auto& [m, c] : F.terms())
    if (!m.contains_any(Z)) r.add_term(m, c);
  return r;
}

Content monomial_content(const Polynomial& F) {
  if (F.is_zero()) throw std::invalid_argument("monomial_content of the zero polynomial");
  Monomial g = F.terms().begin()->first;
  for (const auto& term : F.terms()) g = g.gcd(term.first);
  Polynomial cof;
  for (const auto& [m, c] : F.terms()) cof.add_term(*m.divide(g), c);
  return {g, cof};
}

Polynomial partial_derivative(const Polynomial& F, Var v) {
  Polynomial r;
  for (const auto& [m, c] : F.terms()) {
    std::uint32_t d = m.degree(v);
    if (d == 0) continue;
    r.add_term(*m.divide(Monomial::of(v)), c * d);
  }
  return r;
}

Polynomial substitute(const Polynomial& F, const std::map<Var, Polynomial>& values) {
  Polynomial r;
  std::map<std::pair<Var, std::uint32_t>, Polynomial> powers;
  for (const auto& [m, c] : F.terms()) {
    Polynomial t(c);
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, pow(it->second, e)).first;
      t *= pit->second;
    }
    r += t.shifted(Monomial(std::move(kept)));
  }
  return r;
}

}  // namespace jetres::poly

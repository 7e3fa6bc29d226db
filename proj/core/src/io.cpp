#include "jetres/io.hpp"

#include <fstream>
#include <sstream>

namespace jetres::io {

using poly::Monomial;
using poly::Polynomial;
using poly::Var;

namespace {

Var var_from_name(const std::string& name) {
  // the parser already knows every variable spelling
  Polynomial p;
  try {
    p = poly::parse(name);
  } catch (const poly::ParseError&) {
    throw FormatError("bad variable name '" + name + "'");
  }
  auto vars = p.variables();
  if (vars.size() != 1 || p.size() != 1) throw FormatError("bad variable name '" + name + "'");
  return *vars.begin();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Polynomial& p) {
  std::vector<Var> vars{Var::plain(poly::Axis::x), Var::plain(poly::Axis::y),
                        Var::plain(poly::Axis::z)};
  auto used = p.variables();
  bool plain_only = true;
  for (const auto& v : used)
    if (v.kind != poly::VarKind::plain) plain_only = false;
  if (!plain_only) vars.assign(used.begin(), used.end());

  json j;
  j["vars"] = json::array();
  for (const auto& v : vars) j["vars"].push_back(v.name());
  j["terms"] = json::array();
  for (const auto& [m, c] : p.terms()) {
    json e = json::array();
    for (const auto& v : vars) e.push_back(m.degree(v));
    j["terms"].push_back({{"c", c.get_str()}, {"e", e}});
  }
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  if (j.is_string()) return poly::parse(j.get<std::string>());
  const json& vars_j = field(j, "vars");
  if (!vars_j.is_array()) throw FormatError("'vars' must be an array");
  std::vector<Var> vars;
  for (const auto& v : vars_j) {
    if (!v.is_string()) throw FormatError("variable names must be strings");
    vars.push_back(var_from_name(v.get<std::string>()));
  }
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  Polynomial p;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const json& term = terms[t];
    const json& c = field(term, "c");
    const json& e = field(term, "e");
    mpz_class coeff;
    if (c.is_string()) {
      if (coeff.set_str(c.get<std::string>(), 10) != 0)
        throw FormatError("term " + std::to_string(t) + ": bad coefficient");
    } else if (c.is_number_integer()) {
      coeff = c.get<long>();
    } else {
      throw FormatError("term " + std::to_string(t) + ": coefficient must be an integer");
    }
    if (!e.is_array() || e.size() != vars.size())
      throw FormatError("term " + std::to_string(t) + ": exponent length differs from vars");
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!e[i].is_number_unsigned() && !(e[i].is_number_integer() && e[i].get<long>() >= 0))
        throw FormatError("term " + std::to_string(t) + ": exponents must be nonnegative");
      auto d = e[i].get<std::uint32_t>();
      if (d > 0) entries.emplace_back(vars[i], d);
    }
    std::sort(entries.begin(), entries.end());
    p.add_term(Monomial(std::move(entries)), coeff);
  }
  return p;
}

json to_json(const lattice::Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const fan::Fan& f) {
  json j;
  j["rays"] = json::array();
  for (const auto& r : f.rays) j["rays"].push_back(to_json(r));
  j["cones"] = f.cones;
  return j;
}

fan::Fan fan_from_json(const json& j) {
  fan::Fan f;
  const json& rays = field(j, "rays");
  if (!rays.is_array()) throw FormatError("'rays' must be an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const json& r = rays[i];
    if (!r.is_array() || r.size() != 3 || !r[0].is_number_integer() ||
        !r[1].is_number_integer() || !r[2].is_number_integer())
      throw FormatError("ray " + std::to_string(i) + " must be three integers");
    f.rays.push_back({r[0].get<std::int64_t>(), r[1].get<std::int64_t>(), r[2].get<std::int64_t>()});
  }
  const json& cones = field(j, "cones");
  if (!cones.is_array()) throw FormatError("'cones' must be an array");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const json& c = cones[i];
    if (!c.is_array() || c.empty()) throw FormatError("cone " + std::to_string(i) + " is empty");
    std::vector<int> idx;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<long>() < 0 ||
          x.get<std::size_t>() >= f.rays.size())
        throw FormatError("cone " + std::to_string(i) + " refers to a missing ray");
      idx.push_back(x.get<int>());
    }
    f.cones.push_back(idx);
  }
  return f;
}

json to_json(const jets::JetGraph& g) {
  json j;
  j["schema_version"] = schema_version;
  j["f"] = g.f.to_string();
  j["center"] = g.center.name();
  j["first_level"] = g.first_level;
  j["max_level"] = g.max_level;
  j["essential_rule"] =
      g.rule == jets::EssentialRule::contact ? "contact" : "contact-and-weight-change";
  j["nodes"] = json::array();
  for (const auto& n : g.nodes) {
    json node;
    node["id"] = n.id;
    node["level"] = n.level;
    json Z = json::array();
    for (const auto& v : n.Z) Z.push_back({std::string(1, poly::axis_char(v.axis)), v.index});
    node["Z"] = Z;
    node["E"] = json::array();
    for (const auto& e : n.E) node["E"].push_back(to_json(e));
    if (n.status != jets::Status::frozen) {
      auto w = jets::weight_vector(n);
      node["weight"] = {w[0], w[1], w[2]};
    } else {
      node["weight"] = nullptr;
    }
    node["essential"] = n.essential;
    node["contact"] = n.contact;
    node["status"] = jets::to_string(n.status);
    node["parents"] = n.parents;
    j["nodes"].push_back(node);
  }
  j["essential_vectors"] = json::array();
  for (const auto& w : g.essential_vectors()) j["essential_vectors"].push_back({w[0], w[1], w[2]});
  return j;
}

json to_json(const fan::SubdivisionReport& r) {
  return {{"is_fan", r.is_fan},
          {"covers_octant", r.covers_octant},
          {"all_regular", r.all_regular},
          {"refines_dual", r.refines_dual},
          {"offending_cones", r.offending},
          {"violations", r.violations}};
}

json to_json(const newton::NondegeneracyReport& r) {
  json j{{"nondegenerate", r.nondegenerate}, {"primes", r.primes}, {"faces", r.faces}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"weight", to_json(w.weight)},
                    {"face", w.face},
                    {"prime", w.prime},
                    {"point", w.point}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

namespace {

json certificate(const toric::CertificateResult& c) {
  json j{{"verdict", toric::to_string(c.verdict)}};
  j["via"] = c.via ? json(c.via->name()) : json(nullptr);
  return j;
}

}  // namespace

json to_json(const toric::ChartReport& r) {
  json j;
  j["cone_index"] = r.cone_index;
  j["cone"] = json::array();
  for (const auto& g : r.cone) j["cone"].push_back(to_json(g));
  j["map"] = r.map.to_string();
  j["exceptional"] = r.transform.exceptional.is_one() ? "1" : r.transform.exceptional.to_string();
  j["strict"] = r.transform.strict.to_string();
  j["divisor_only"] = r.transform.divisor_only;
  j["exceptional_vars"] = json::array();
  for (const auto& v : r.exceptional_vars) j["exceptional_vars"].push_back(v.name());
  j["reconstructs"] = r.reconstructs;
  j["smoothness"] = certificate(r.smoothness);
  j["transversality"] = json::object();
  for (const auto& [v, c] : r.transversality) j["transversality"][v.name()] = certificate(c);
  j["ok"] = r.ok();
  return j;
}

json to_json(const toric::ResolutionReport& r) {
  json j;
  j["schema_version"] = schema_version;
  j["verdict"] = toric::to_string(r.verdict);
  j["subdivision"] = to_json(r.subdivision);
  j["varchenko_applies"] = r.varchenko_applies;
  j["nondegeneracy"] = r.nondegeneracy ? to_json(*r.nondegeneracy) : json(nullptr);
  j["charts"] = json::array();
  for (const auto& c : r.charts) j["charts"].push_back(to_json(c));
  j["failing_charts"] = r.failing_charts;
  return j;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace jetres::io

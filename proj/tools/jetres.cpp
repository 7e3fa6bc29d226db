#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "jetres/catalog.hpp"
#include "jetres/fan.hpp"
#include "jetres/io.hpp"
#include "jetres/jets.hpp"
#include "jetres/newton.hpp"
#include "jetres/parallel.hpp"
#include "jetres/poly.hpp"
#include "jetres/toric.hpp"

namespace {

using namespace jetres;
using io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  catalog::Params p;

  void add(CLI::App* app, bool required) {
    auto* opt = app->add_option("--family", family, "E60, A_eq, A_ge, B_even, B_odd, ..., H");
    if (required) opt->required();
    app->add_option("--k", p.k, "parameter k");
    app->add_option("--l", p.l, "parameter l");
    app->add_option("--m", p.m, "parameter m");
    app->add_option("--n", p.n, "parameter n (H family)");
  }
  catalog::Instance instance() const { return catalog::make_instance(family, p); }
};

// "B_odd:k=3,l=2" or "E60"
std::optional<catalog::Instance> instance_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string fam = spec.substr(0, colon);
  if (!catalog::family_from_string(fam)) return std::nullopt;
  catalog::Params p;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      std::string kv = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("bad family parameter '" + kv + "'");
      std::string key = kv.substr(0, eq);
      int value = 0;
      try {
        value = std::stoi(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("bad value in '" + kv + "'");
      }
      if (key == "k") p.k = value;
      else if (key == "l") p.l = value;
      else if (key == "m") p.m = value;
      else if (key == "n") p.n = value;
      else throw UsageError("unknown parameter '" + key + "'");
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return catalog::make_instance(fam, p);
}

poly::Polynomial parse_polynomial_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"'))
    return io::polynomial_from_json(io::parse_json(text));
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  return poly::parse(trimmed);
}

// a file (JSON or text), a catalog name, or a literal polynomial
poly::Polynomial load_polynomial(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_polynomial_text(io::read_file(arg));
  if (auto inst = instance_from_spec(arg)) return catalog::equation(*inst);
  return parse_polynomial_text(arg);
}

fan::Fan load_fan(const std::string& path) {
  return io::fan_from_json(io::parse_json(io::read_file(path)));
}

std::string vectors_text(const std::set<jets::Weight>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : " ") + jets::to_string(w);
  return out;
}

std::string vectors_text(const std::vector<lattice::Vec3>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + lattice::to_string(v);
  return out;
}

void print_subdivision(const fan::SubdivisionReport& r, const fan::Fan& f) {
  std::cout << "is_fan " << r.is_fan << "\ncovers_octant " << r.covers_octant
            << "\nall_regular " << r.all_regular << "\nrefines_dual " << r.refines_dual << "\n";
  for (int i : r.offending) {
    std::cout << "non-regular cone " << i << ":";
    for (const auto& g : f.cone(static_cast<std::size_t>(i))) std::cout << " " << lattice::to_string(g);
    std::cout << "\n";
  }
  for (const auto& v : r.violations) std::cout << "violation: " << v << "\n";
}

// ---- jets

struct JetsCmd {
  std::string poly_arg, center = "yz", dot_path, json_path, rule = "contact";
  unsigned max_level = 0;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("jets", "explore jet scheme components over a center");
    c->add_option("--poly", poly_arg, "polynomial file, catalog name or literal")->required();
    c->add_option("--center", center, "vanishing axes: yz, xz or xy");
    c->add_option("--max-level", max_level, "deepest level (default: quasi-degree for catalog input, else 18)");
    c->add_option("--rule", rule, "essential rule: contact or weight-change");
    c->add_option("--dot", dot_path, "write the graph in DOT format");
    c->add_option("--json", json_path, "write the graph as JSON");
    cmd = c;
  }

  int run() {
    auto f = load_polynomial(poly_arg);
    unsigned level = max_level;
    if (level == 0) {
      auto inst = instance_from_spec(poly_arg);
      level = inst ? catalog::default_max_level(*inst) : 18;
    }
    jets::EssentialRule r;
    if (rule == "contact") r = jets::EssentialRule::contact;
    else if (rule == "weight-change") r = jets::EssentialRule::contact_and_weight_change;
    else throw UsageError("unknown rule '" + rule + "'");
    auto g = jets::explore(f, jets::Center::parse(center), level, r);
    if (!dot_path.empty()) io::write_file(dot_path, jets::emit_dot(g));
    if (!json_path.empty()) io::write_file(json_path, io::dump(io::to_json(g)));
    std::size_t essential = 0;
    for (const auto& n : g.nodes) essential += n.essential;
    std::cout << "f " << f.to_string() << "\ncenter V(" << g.center.name() << ")\nlevels "
              << g.first_level << ".." << g.max_level << "\nnodes " << g.nodes.size()
              << "\nessential nodes " << essential << "\nessential vectors "
              << vectors_text(g.essential_vectors()) << "\n";
    if (g.has_frozen()) std::cout << "warning: some branches are frozen\n";
    return kOk;
  }
  CLI::App* cmd = nullptr;
};

// ---- fan

struct FanCmd {
  std::string poly_arg, json_path;
  bool nondegenerate = false;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("fan", "dual Newton fan of a polynomial");
    c->add_option("--poly", poly_arg, "polynomial file, catalog name or literal")->required();
    c->add_option("--json", json_path, "write the fan as JSON");
    c->add_flag("--nondegenerate", nondegenerate, "also run the non-degeneracy certificate");
    cmd = c;
  }

  int run() {
    auto f = load_polynomial(poly_arg);
    auto np = newton::newton_polyhedron(f);
    auto dual = newton::dual_newton_fan(np);
    if (!json_path.empty()) {
      json j{{"schema_version", io::schema_version}};
      const json body = io::to_json(dual.fan);
      for (const auto& [k, v] : body.items()) j[k] = v;
      io::write_file(json_path, io::dump(j));
    }
    std::cout << "f " << f.to_string() << "\nvertices " << vectors_text(np.vertices) << "\n";
    for (const auto& fc : np.facets)
      std::cout << "facet " << lattice::to_string(fc.normal) << " offset " << fc.offset
                << (fc.compact() ? " compact" : "") << "\n";
    std::cout << "cones " << dual.fan.cones.size() << "\n";
    if (nondegenerate) {
      auto r = newton::is_nondegenerate(f);
      std::cout << "nondegenerate " << r.nondegenerate << "\n";
      if (r.witness)
        std::cout << "witness face " << r.witness->face << " mod " << r.witness->prime << " at ("
                  << r.witness->point[0] << "," << r.witness->point[1] << ","
                  << r.witness->point[2] << ")\n";
      return r.nondegenerate ? kOk : kFailed;
    }
    return kOk;
  }
  CLI::App* cmd = nullptr;
};

// ---- verify

struct VerifyCmd {
  std::string fan_path, dual_of, report_path;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("verify", "check that a fan is a regular subdivision of a dual Newton fan");
    c->add_option("--fan", fan_path, "fan JSON")->required()->check(CLI::ExistingFile);
    c->add_option("--dual-of", dual_of, "polynomial whose dual Newton fan must be refined")->required();
    c->add_option("--report", report_path, "write the report as JSON");
    cmd = c;
  }

  int run() {
    auto fan = load_fan(fan_path);
    auto dual = newton::dual_newton_fan(newton::newton_polyhedron(load_polynomial(dual_of)));
    auto r = fan::verify_regular_subdivision(fan, dual.fan);
    print_subdivision(r, fan);
    if (!report_path.empty()) {
      json j{{"schema_version", io::schema_version}};
      const json body = io::to_json(r);
      for (const auto& [k, v] : body.items()) j[k] = v;
      io::write_file(report_path, io::dump(j));
    }
    return r.ok() ? kOk : kFailed;
  }
  CLI::App* cmd = nullptr;
};

// ---- resolve

struct ResolveCmd {
  std::string poly_arg, fan_path, route = "auto", report_path;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("resolve", "verify that a fan gives an embedded resolution");
    c->add_option("--poly", poly_arg, "polynomial file, catalog name or literal")->required();
    c->add_option("--fan", fan_path, "fan JSON (default: the catalog subdivision)");
    c->add_option("--route", route, "auto, varchenko or charts");
    c->add_option("--report", report_path, "write the report as JSON");
    cmd = c;
  }

  int run() {
    auto f = load_polynomial(poly_arg);
    auto rt = toric::route_from_string(route);
    fan::Fan fan;
    if (!fan_path.empty()) {
      fan = load_fan(fan_path);
    } else {
      auto inst = instance_from_spec(poly_arg);
      if (!inst) throw UsageError("--fan is required unless --poly names a catalog family");
      auto sub = catalog::theorem_subdivision(*inst);
      if (!sub.ok) {
        std::cout << "no regular subdivision found\n";
        return kFailed;
      }
      fan = sub.fan;
    }
    auto r = toric::verify_embedded_resolution(f, fan, rt);
    if (!report_path.empty()) io::write_file(report_path, io::dump(io::to_json(r)));
    if (r.verdict == toric::Verdict::invalid_fan) {
      print_subdivision(r.subdivision, fan);
      std::cout << "verdict " << toric::to_string(r.verdict) << "\n";
      return kFailed;
    }
    std::cout << "refines_dual " << r.subdivision.refines_dual << "\n";
    if (r.nondegeneracy) std::cout << "nondegenerate " << r.nondegeneracy->nondegenerate << "\n";
    for (const auto& c : r.charts)
      if (!c.ok()) {
        std::cout << "chart " << c.cone_index << " [" << vectors_text(c.cone)
                  << "] strict " << c.transform.strict.to_string() << " smoothness "
                  << toric::to_string(c.smoothness.verdict) << "\n";
      }
    std::cout << "charts " << r.charts.size() << " failing " << r.failing_charts.size()
              << "\nverdict " << toric::to_string(r.verdict) << "\n";
    return r.verdict == toric::Verdict::inconclusive ? kFailed : kOk;
  }
  CLI::App* cmd = nullptr;
};

// ---- catalog

struct CatalogCmd {
  FamilyArgs fam;
  std::string emit = "poly", json_path;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("catalog", "equations, theorem vectors and subdivisions");
    fam.add(c, true);
    c->add_option("--emit", emit, "poly, vectors or cones")
        ->check(CLI::IsMember({"poly", "vectors", "cones"}));
    c->add_option("--json", json_path, "write the output as JSON");
    cmd = c;
  }

  int run() {
    auto inst = fam.instance();
    json j{{"schema_version", io::schema_version}, {"instance", inst.name()}};
    if (emit == "poly") {
      auto f = catalog::equation(inst);
      std::cout << f.to_string() << "\n";
      j["poly"] = io::to_json(f);
    } else if (emit == "vectors") {
      auto v = catalog::theorem_vectors(inst);
      for (const auto& x : v) std::cout << lattice::to_string(x) << "\n";
      for (const auto& x : catalog::non_primitive(v))
        std::cout << "non-primitive " << lattice::to_string(x) << "\n";
      j["vectors"] = json::array();
      for (const auto& x : v) j["vectors"].push_back(io::to_json(x));
    } else {
      auto sub = catalog::theorem_subdivision(inst);
      if (!sub.ok) {
        std::cout << "no regular subdivision found" << (sub.limit_hit ? " (search limit)" : "") << "\n";
        return kFailed;
      }
      for (std::size_t i = 0; i < sub.fan.cones.size(); ++i)
        std::cout << vectors_text(sub.fan.cone(i)) << "\n";
      if (!sub.added_rays.empty()) std::cout << "added rays " << vectors_text(sub.added_rays) << "\n";
      const json fan_json = io::to_json(sub.fan);
      for (const auto& [k, v] : fan_json.items()) j[k] = v;
    }
    if (!json_path.empty()) io::write_file(json_path, io::dump(j));
    return kOk;
  }
  CLI::App* cmd = nullptr;
};

// ---- verify-theorem

struct TheoremCheck {
  bool vectors_found = false;
  bool subdivision_ok = false;
  bool resolved = false;
  std::vector<lattice::Vec3> missing;
  std::string verdict;
};

TheoremCheck check_theorem(const catalog::Instance& inst) {
  TheoremCheck t;
  auto f = catalog::equation(inst);
  std::set<jets::Weight> found;
  for (const auto& c : catalog::centers(inst)) {
    auto g = jets::explore(f, c, catalog::default_max_level(inst));
    auto e = g.essential_vectors();
    found.insert(e.begin(), e.end());
  }
  for (const auto& v : catalog::theorem_vectors(inst)) {
    auto p = lattice::primitive(v);
    jets::Weight w{static_cast<std::uint32_t>(p[0]), static_cast<std::uint32_t>(p[1]),
                   static_cast<std::uint32_t>(p[2])};
    if (!found.count(w)) t.missing.push_back(v);
  }
  t.vectors_found = t.missing.empty();
  auto sub = catalog::theorem_subdivision(inst);
  if (sub.ok) {
    auto r = toric::verify_embedded_resolution(f, sub.fan);
    bool expect_refines = inst.family != catalog::Family::B_odd_big;
    t.subdivision_ok = r.subdivision.is_fan && r.subdivision.covers_octant &&
                       r.subdivision.all_regular && r.subdivision.refines_dual == expect_refines;
    t.resolved = r.verdict == toric::Verdict::resolved_by_varchenko ||
                 r.verdict == toric::Verdict::resolved_by_charts;
    t.verdict = toric::to_string(r.verdict);
  } else {
    t.verdict = sub.limit_hit ? "search limit" : "no subdivision";
  }
  return t;
}

struct VerifyTheoremCmd {
  FamilyArgs fam;
  bool all = false;
  std::string report_path;

  void add(CLI::App& root) {
    auto* c = root.add_subcommand("verify-theorem",
                                  "check theorem vectors, subdivision and resolution of a family");
    fam.add(c, false);
    c->add_flag("--sweep", all, "run the small-parameter sweep (of --family, or of every family)");
    c->add_option("--report", report_path, "write the results as JSON");
    cmd = c;
  }

  int run() {
    std::vector<catalog::Instance> instances;
    if (all) {
      for (auto f : catalog::all_families()) {
        if (!fam.family.empty() && catalog::to_string(f) != fam.family) continue;
        for (const auto& i : catalog::sweep(f)) instances.push_back(i);
      }
      if (instances.empty()) throw UsageError("unknown family '" + fam.family + "'");
    } else {
      if (fam.family.empty()) throw UsageError("--family or --sweep is required");
      instances.push_back(fam.instance());
    }
    json report{{"schema_version", io::schema_version}, {"instances", json::array()}};
    bool ok = true;
    for (const auto& inst : instances) {
      json entry{{"instance", inst.name()}};
      try {
        auto t = check_theorem(inst);
        bool pass = t.vectors_found && t.subdivision_ok && t.resolved;
        ok = ok && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << inst.name() << ": vectors "
                  << (t.vectors_found ? "found" : "missing " + vectors_text(t.missing))
                  << ", subdivision " << (t.subdivision_ok ? "ok" : "not ok") << ", "
                  << t.verdict << "\n";
        entry["pass"] = pass;
        entry["vectors_found"] = t.vectors_found;
        entry["missing"] = json::array();
        for (const auto& v : t.missing) entry["missing"].push_back(io::to_json(v));
        entry["subdivision_ok"] = t.subdivision_ok;
        entry["verdict"] = t.verdict;
      } catch (const catalog::Unsupported& e) {
        std::cout << "SKIP " << inst.name() << ": " << e.what() << "\n";
        entry["skipped"] = e.what();
      }
      report["instances"].push_back(entry);
    }
    if (!report_path.empty()) io::write_file(report_path, io::dump(report));
    return ok ? kOk : kFailed;
  }
  CLI::App* cmd = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jet schemes and toric embedded resolutions of surface singularities"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (overrides JETRES_THREADS)");
  app.set_version_flag("--version", "jetres 0.1.0");

  JetsCmd jets_cmd;
  FanCmd fan_cmd;
  VerifyCmd verify_cmd;
  ResolveCmd resolve_cmd;
  CatalogCmd catalog_cmd;
  VerifyTheoremCmd theorem_cmd;
  jets_cmd.add(app);
  fan_cmd.add(app);
  verify_cmd.add(app);
  resolve_cmd.add(app);
  catalog_cmd.add(app);
  theorem_cmd.add(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (threads > 0) jetres::set_max_threads(threads);

  try {
    if (jets_cmd.cmd->parsed()) return jets_cmd.run();
    if (fan_cmd.cmd->parsed()) return fan_cmd.run();
    if (verify_cmd.cmd->parsed()) return verify_cmd.run();
    if (resolve_cmd.cmd->parsed()) return resolve_cmd.run();
    if (catalog_cmd.cmd->parsed()) return catalog_cmd.run();
    if (theorem_cmd.cmd->parsed()) return theorem_cmd.run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const jetres::poly::ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
    return kUsage;
  } catch (const jetres::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

#include "jetres/jets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "jetres/parallel.hpp"

namespace jetres::jets {

using poly::Axis;
using poly::Monomial;

Center Center::parse(std::string_view text) {
  Center c;
  for (char ch : text) {
    Axis a = poly::axis_from_char(ch);
    if (std::find(c.axes.begin(), c.axes.end(), a) != c.axes.end())
      throw std::invalid_argument("repeated axis in center '" + std::string(text) + "'");
    c.axes.push_back(a);
  }
  if (c.axes.empty()) throw std::invalid_argument("empty center");
  std::sort(c.axes.begin(), c.axes.end());
  return c;
}

std::string Center::name() const {
  std::string s;
  for (Axis a : axes) s += poly::axis_char(a);
  return s;
}

VarSet Center::initial_vars() const {
  VarSet z;
  for (Axis a : axes) z.insert(Var::jet(a, 0));
  return z;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::monomial: return "monomial";
    case Status::non_monomial: return "non-monomial";
    case Status::dashed: return "dashed";
    case Status::frozen: return "frozen";
  }
  return "?";
}

Weight weight_vector(const VarSet& Z) {
  Weight w{0, 0, 0};
  for (int a = 0; a < 3; ++a)
    while (Z.count(Var::jet(static_cast<Axis>(a), w[a]))) ++w[a];
  return w;
}

Weight weight_vector(const ComponentState& state) {
  if (state.status == Status::frozen)
    throw std::invalid_argument("weight vector of a frozen state is undefined");
  return weight_vector(state.Z);
}

Weight primitive(const Weight& w) {
  std::uint32_t g = std::gcd(std::gcd(w[0], w[1]), w[2]);
  if (g <= 1) return w;
  return {w[0] / g, w[1] / g, w[2] / g};
}

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) +
         ")";
}

std::string to_string(const VarSet& Z) {
  std::string s = "{";
  bool first = true;
  for (const Var& v : Z) {
    if (!first) s += ",";
    s += v.name();
    first = false;
  }
  return s + "}";
}

std::set<Weight> JetGraph::essential_vectors() const {
  std::set<Weight> out;
  for (const auto& n : nodes)
    if (n.essential) out.insert(primitive(weight_vector(n.Z)));
  return out;
}

bool JetGraph::has_frozen() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const ComponentState& n) { return n.status == Status::frozen; });
}

JetSource jets_of(const Polynomial& f) {
  return [f](unsigned i, const VarSet& Z) { return poly::jet_component(f, i, Z); };
}

JetSource jets_of(const std::vector<Polynomial>& F) {
  return [&F](unsigned i, const VarSet& Z) {
    if (i >= F.size()) throw std::out_of_range("F_" + std::to_string(i) + " not available");
    return poly::reduce_mod_vanishing(F[i], Z);
  };
}

ComponentState initial_state(const Polynomial& f, const Center& center, unsigned limit) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial defines no surface");
  const VarSet Z0 = center.initial_vars();
  if (!poly::jet_component(f, 0, Z0).is_zero())
    throw CenterNotContained("center V(" + center.name() + ") is not contained in X");
  for (unsigned m = 0; m < limit; ++m) {
    if (!poly::jet_component(f, m + 1, Z0).is_zero()) {
      ComponentState s;
      s.level = m;
      s.Z = Z0;
      return s;
    }
  }
  throw std::invalid_argument("f vanishes to order above " + std::to_string(limit) +
                              " along the center");
}

namespace {

// two terms with disjoint variable sets
bool supported_two_term(const Polynomial& g) {
  if (g.size() != 2) return false;
  const auto& a = g.terms().begin()->first;
  const auto& b = std::next(g.terms().begin())->first;
  for (const auto& entry : a.entries())
    if (b.contains(entry.first)) return false;
  return !a.is_one() && !b.is_one();
}

ComponentState make_child(const ComponentState& parent, VarSet Z, Status status,
                          std::vector<Polynomial> E = {}) {
  ComponentState c;
  c.level = parent.level + 1;
  c.Z = std::move(Z);
  c.status = status;
  c.E = std::move(E);
  return c;
}

std::vector<ComponentState> children(const JetSource& F,
                                     const ComponentState& state) {
  switch (state.status) {
    case Status::monomial: return step(F, state);
    case Status::non_monomial: return stratify_nonmonomial(F, state);
    case Status::dashed: return {make_child(state, state.Z, Status::dashed, state.E)};
    case Status::frozen: return {};
  }
  return {};
}

}  // namespace

std::vector<ComponentState> step(const JetSource& F, const ComponentState& state) {
  if (state.status != Status::monomial)
    throw std::invalid_argument("step expects a monomial state");
  Polynomial G = F(state.level + 1, state.Z);
  if (G.is_zero()) return {make_child(state, state.Z, Status::monomial)};

  std::vector<ComponentState> out;
  auto [mono, g] = poly::monomial_content(G);
  for (const auto& entry : mono.entries()) {
    VarSet Z = state.Z;
    Z.insert(entry.first);
    out.push_back(make_child(state, std::move(Z), Status::monomial));
  }
  if (g.size() > 1) {
    Status s = supported_two_term(g) ? Status::non_monomial : Status::frozen;
    out.push_back(make_child(state, state.Z, s, {g}));
  }
  return out;
}

std::vector<ComponentState> stratify_nonmonomial(const JetSource& F,
                                                 const ComponentState& state) {
  if (state.E.size() != 1 || !supported_two_term(state.E[0]))
    return {make_child(state, state.Z, Status::frozen, state.E)};

  const Polynomial& g = state.E[0];
  const Monomial& t1 = g.terms().begin()->first;
  const Monomial& t2 = std::next(g.terms().begin())->first;
  std::vector<ComponentState> out;
  for (const auto& a : t1.entries())
    for (const auto& b : t2.entries()) {
      VarSet Z = state.Z;
      Z.insert(a.first);
      Z.insert(b.first);
      // keep the stratum only when it is a whole component of the next level
      if (F(state.level + 1, Z).is_zero())
        out.push_back(make_child(state, std::move(Z), Status::monomial));
    }
  out.push_back(make_child(state, state.Z, Status::dashed, state.E));
  return out;
}

bool is_essential(const JetSource& F, const ComponentState& state,
                  const std::vector<const ComponentState*>& parents, EssentialRule rule) {
  if (state.status != Status::monomial) return false;
  bool contact = !F(state.level + 1, state.Z).is_zero();
  if (!contact || rule == EssentialRule::contact) return contact;
  const Weight w = weight_vector(state.Z);
  for (const auto* p : parents)
    if (p->status != Status::frozen && weight_vector(p->Z) == w) return false;
  return true;
}

JetGraph explore(const Polynomial& f, const Center& center, unsigned max_level,
                 EssentialRule rule) {
  ComponentState root = initial_state(f, center);
  JetGraph g;
  g.f = f;
  g.center = center;
  g.first_level = root.level;
  g.max_level = std::max(max_level, root.level);
  g.rule = rule;
  const JetSource F = jets_of(f);
  g.levels.assign(g.max_level + 1, {});
  root.id = 0;
  g.nodes.push_back(root);
  g.levels[root.level].push_back(0);

  using Key = std::tuple<VarSet, std::string, Status>;
  for (unsigned m = root.level; m < g.max_level; ++m) {
    const std::vector<int> current = g.levels[m];
    std::vector<std::vector<ComponentState>> kids(current.size());
    parallel_for(current.size(), [&](std::size_t i) { kids[i] = children(F, g.nodes[current[i]]); });

    std::map<Key, std::size_t> index;
    std::vector<ComponentState> merged;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (auto& child : kids[i]) {
        Key key{child.Z, child.E.empty() ? std::string() : child.E[0].to_string(), child.status};
        auto it = index.find(key);
        if (it != index.end()) {
          auto& parents = merged[it->second].parents;
          if (std::find(parents.begin(), parents.end(), current[i]) == parents.end())
            parents.push_back(current[i]);
          continue;
        }
        child.parents = {current[i]};
        index.emplace(std::move(key), merged.size());
        merged.push_back(std::move(child));
      }

    auto strict_subset = [](const VarSet& a, const VarSet& b) {
      return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < merged.size(); ++i) {
      const auto& n = merged[i];
      bool drop = false;
      if (n.status == Status::monomial) {
        for (std::size_t j = 0; j < merged.size() && !drop; ++j) {
          const auto& o = merged[j];
          if (j == i) continue;
          if (o.status == Status::monomial)
            drop = strict_subset(o.Z, n.Z);
          else if (o.status == Status::non_monomial)
            drop = std::includes(n.Z.begin(), n.Z.end(), o.Z.begin(), o.Z.end()) &&
                   poly::reduce_mod_vanishing(o.E[0], n.Z).is_zero();
        }
      }
      if (drop) continue;
      ComponentState kept = n;
      kept.id = static_cast<int>(g.nodes.size());
      g.levels[m + 1].push_back(kept.id);
      g.nodes.push_back(std::move(kept));
    }
  }

  parallel_for(g.nodes.size(), [&](std::size_t i) {
    auto& n = g.nodes[i];
    if (n.status == Status::monomial) n.contact = !F(n.level + 1, n.Z).is_zero();
  });
  for (auto& n : g.nodes) {
    if (n.level >= g.max_level || !n.contact) continue;
    n.essential = true;
    if (rule == EssentialRule::contact) continue;
    const Weight w = weight_vector(n.Z);
    for (int p : n.parents)
      if (g.nodes[p].status != Status::frozen && weight_vector(g.nodes[p].Z) == w)
        n.essential = false;
  }
  return g;
}

std::vector<VarSet> brute_force_components(const Polynomial& f, const Center& center,
                                           unsigned m) {
  if (m > 6) throw std::invalid_argument("brute force is limited to m <= 6");
  std::vector<Var> vars;
  for (unsigned i = 0; i <= m; ++i)
    for (int a = 0; a < 3; ++a) vars.push_back(Var::jet(static_cast<Axis>(a), i));
  auto bit_of = [&](const Var& v) {
    return static_cast<unsigned>(std::find(vars.begin(), vars.end(), v) - vars.begin());
  };

  // F_i reduces to zero mod S exactly when every term of F_i contains a variable of S
  auto F = poly::substitute_jets(f, m);
  std::vector<std::uint32_t> supports;
  for (const auto& Fi : F)
    for (const auto& term : Fi.terms()) {
      std::uint32_t mask = 0;
      for (const auto& entry : term.first.entries()) mask |= 1u << bit_of(entry.first);
      supports.push_back(mask);
    }
  std::sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  std::uint32_t base = 0;
  for (const Var& v : center.initial_vars()) base |= 1u << bit_of(v);
  std::vector<unsigned> free;
  for (unsigned b = 0; b < vars.size(); ++b)
    if (!(base >> b & 1u)) free.push_back(b);

  const std::size_t count = std::size_t{1} << free.size();
  auto expand = [&](std::size_t bits) {
    std::uint32_t S = base;
    for (std::size_t j = 0; j < free.size(); ++j)
      if (bits >> j & 1u) S |= 1u << free[j];
    return S;
  };
  std::vector<char> hits(count);
  parallel_for(count, [&](std::size_t bits) {
    std::uint32_t S = expand(bits);
    hits[bits] = std::all_of(supports.begin(), supports.end(),
                             [S](std::uint32_t t) { return (t & S) != 0; });
  });

  std::vector<VarSet> out;
  for (std::size_t bits = 0; bits < count; ++bits) {
    if (!hits[bits]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < free.size() && minimal; ++j)
      if ((bits >> j & 1u) && hits[bits & ~(std::size_t{1} << j)]) minimal = false;
    if (!minimal) continue;
    std::uint32_t S = expand(bits);
    VarSet Z;
    for (unsigned b = 0; b < vars.size(); ++b)
      if (S >> b & 1u) Z.insert(vars[b]);
    out.push_back(std::move(Z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleComparison compare_with_oracle(const Polynomial& f, const Center& center, unsigned m) {
  JetGraph g = explore(f, center, m);
  OracleComparison r;
  std::vector<const ComponentState*> carriers;
  std::vector<VarSet> monomial;
  if (m < g.levels.size())
    for (int id : g.levels[m]) {
      const auto& n = g.nodes[id];
      if (n.status == Status::monomial)
        monomial.push_back(n.Z);
      else
        carriers.push_back(&n);
    }
  // a coordinate subspace lying inside V(Z, g) of a non-monomial node is not a component
  auto inside = [&](const VarSet& S) {
    for (const auto* n : carriers) {
      if (!std::includes(S.begin(), S.end(), n->Z.begin(), n->Z.end())) continue;
      bool all_zero = std::all_of(n->E.begin(), n->E.end(), [&](const Polynomial& e) {
        return poly::reduce_mod_vanishing(e, S).is_zero();
      });
      if (all_zero) return true;
    }
    return false;
  };
  auto raw = brute_force_components(f, center, m);
  r.oracle_raw = raw.size();
  for (auto& S : raw)
    if (!inside(S)) r.oracle.push_back(S);
  for (auto& S : monomial)
    if (!inside(S)) r.explored.push_back(S);
  std::sort(r.explored.begin(), r.explored.end());
  r.equal = r.explored == r.oracle;
  return r;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string emit_dot(const JetGraph& graph) {
  std::ostringstream os;
  os << "digraph jets {\n";
  if (graph.nodes.empty()) {
    os << "}\n";
    return os.str();
  }
  os << "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t m = 0; m < graph.levels.size(); ++m) {
    if (graph.levels[m].empty()) continue;
    os << "  subgraph level_" << m << " {\n    rank=same;\n";
    for (int id : graph.levels[m]) {
      const auto& n = graph.nodes[id];
      std::string label =
          n.status == Status::frozen ? std::string("frozen") : to_string(weight_vector(n.Z));
      for (const auto& e : n.E) label += "\\n" + dot_escape(e.to_string());
      os << "    n" << id << " [label=\"" << label << "\", xlabel=\"m=" << n.level << "\"";
      if (n.status == Status::dashed) os << ", style=dashed";
      if (n.status == Status::frozen) os << ", style=dotted";
      if (n.essential) os << ", peripheries=2";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& n : graph.nodes)
    for (int p : n.parents) {
      os << "  n" << p << " -> n" << n.id;
      if (n.status == Status::dashed || !n.essential) os << " [style=dashed]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace jetres::jets

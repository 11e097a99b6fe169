#include "rootlines/gradings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootlines {

Rational pairing(const RootSystem& system, std::size_t root, const Coweight& q) {
  return system.form()->inner(q.q, system.root(root));
}

bool is_coweight(const RootSystem& system, const Coweight& q) {
  for (std::size_t i = 0; i < system.size(); ++i)
    if (!pairing(system, i, q).is_integer()) return false;
  return true;
}

bool is_minuscule(const RootSystem& system, const Coweight& q) {
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rational p = pairing(system, i, q);
    if (!p.is_integer() || p.abs() > Rational(1)) return false;
  }
  return true;
}

Coweight fundamental_coweight(const RootSystem& system, std::size_t simple_root) {
  const auto& simple = system.simple_roots();
  auto it = std::find(simple.begin(), simple.end(), simple_root);
  if (it == simple.end()) throw std::invalid_argument("not a simple root");
  const auto p = static_cast<std::size_t>(it - simple.begin());
  const RatMatrix& inv = system.simple_gram_inverse();
  Coweight w{RatVector(system.ambient_dim(), Rational(0))};
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const Rational c = inv(i, p);
    if (c.is_zero()) continue;
    const Coords& s = system.root(simple[i]);
    for (std::size_t k = 0; k < s.size(); ++k) w.q[k] += c * Rational(s[k]);
  }
  return w;
}

const std::vector<std::size_t>& ZGrading::part(int i) const {
  static const std::vector<std::size_t> none;
  auto it = parts.find(i);
  return it == parts.end() ? none : it->second;
}

ZGrading grading_from_coweight(const RootSystem& system, const Coweight& q) {
  ZGrading g{system, q, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rational p = pairing(system, i, q);
    if (!p.is_integer()) throw std::invalid_argument("coweight pairs non-integrally with root " + std::to_string(i));
    g.parts[static_cast<int>(p.num())].push_back(i);
  }
  return g;
}

namespace {

std::string grading_name(const TypeComponent& c, int node) {
  switch (c.family) {
    case 'A': return "rectangular";
    case 'B': return "odd quadratic";
    case 'C': return "hermitian";
    case 'D': return node == 1 ? "even quadratic" : "alternating";
    case 'E': return c.rank == 6 ? "bi-Cayley" : "Albert";
    default: return "?";
  }
}

}  // namespace

std::vector<ThreeGrading> enumerate_three_gradings(const RootSystem& system) {
  const TypeDecomposition type = decompose_type(system);
  if (type.components.size() != 1) throw std::invalid_argument("3-gradings are enumerated for irreducible systems");
  const TypeComponent& comp = type.components.front();

  std::vector<Coweight> omega;
  for (auto idx : comp.nodes) omega.push_back(fundamental_coweight(system, idx));
  // highest root: the root of greatest height
  std::size_t best = 0;
  Rational best_height(-1);
  for (std::size_t i = 0; i < system.size(); ++i) {
    Rational h(0);
    for (const auto& w : omega) h += pairing(system, i, w);
    if (h > best_height) {
      best_height = h;
      best = i;
    }
  }

  std::vector<ThreeGrading> out;
  for (std::size_t k = 0; k < comp.nodes.size(); ++k) {
    if (pairing(system, best, omega[k]) != Rational(1)) continue;
    ThreeGrading g{system, omega[k], static_cast<int>(k) + 1, {}, {}, {}, grading_name(comp, static_cast<int>(k) + 1), ""};
    for (std::size_t i = 0; i < system.size(); ++i) {
      const Rational p = pairing(system, i, omega[k]);
      (p.is_zero() ? g.zero : p.sign() > 0 ? g.plus : g.minus).push_back(i);
    }
    g.zero_type = g.zero_system().label();
    out.push_back(std::move(g));
  }
  return out;
}

GradingCheck verify_three_grading(const RootSystem& s, const std::vector<std::size_t>& minus,
                                  const std::vector<std::size_t>& zero, const std::vector<std::size_t>& plus) {
  GradingCheck r;
  auto fail = [&](std::string what, std::vector<std::size_t> w) {
    r.ok = false;
    r.failure = std::move(what);
    r.witness = std::move(w);
    return r;
  };
  const int unset = 99;
  std::vector<int> degree(s.size(), unset);
  const std::pair<const std::vector<std::size_t>*, int> parts[] = {{&minus, -1}, {&zero, 0}, {&plus, 1}};
  for (auto [part, d] : parts)
    for (auto i : *part) {
      if (i >= s.size() || degree[i] != unset) return fail("partition", {i});
      degree[i] = d;
    }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (degree[i] == unset) return fail("partition", {i});
  for (std::size_t i = 0; i < s.size(); ++i)
    if (degree[s.negative_of(i)] != -degree[i]) return fail("negation", {i});

  Coords sum(s.ambient_dim());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = s.root(i)[k] + s.root(j)[k];
      auto t = s.index_of(sum);
      if (t && degree[*t] != degree[i] + degree[j]) return fail("sum", {i, j, *t});
    }
  // Phi meets Phi1 - Phi1 exactly in Phi0
  std::vector<bool> reached(s.size(), false);
  for (auto i : plus)
    for (auto j : plus) {
      if (i == j) continue;
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = s.root(i)[k] - s.root(j)[k];
      auto t = s.index_of(sum);
      if (!t) continue;
      if (degree[*t] != 0) return fail("difference", {i, j, *t});
      reached[*t] = true;
    }
  for (auto z : zero)
    if (!reached[z]) return fail("difference", {z});
  return r;
}

GradingCheck verify_three_grading(const ThreeGrading& g) {
  return verify_three_grading(g.system, g.minus, g.zero, g.plus);
}

BinaryDecomposition binary_decomposition(const ThreeGrading& g) {
  BinaryDecomposition d{LineSystem(g.system, g.zero), LineSystem(g.system, g.plus)};
  if (d.free.size() != g.plus.size()) throw std::domain_error("plus part contains opposite roots");
  if (!is_star_closed(d.closed)) throw std::domain_error("zero lines are not star-closed");
  if (!is_star_free(d.free)) throw std::domain_error("plus lines are not star-free");
  if (star_closure(d.free).size() * 2 != g.system.size()) throw std::domain_error("plus lines do not star-close to all lines");
  return d;
}

Graph decomposition_graph(const ThreeGrading& g) {
  const std::size_t n = g.plus.size();
  Graph out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g.system.inner(g.plus[a], g.plus[b]) != 0) out.add_edge(a, b);
  if (n > 0 && out.edge_count() > 0) {
    auto neighbourhood = [&](std::size_t v) { return out.induced(out.neighbours(v)); };
    const Graph first = neighbourhood(0);
    for (std::size_t v = 1; v < n; ++v)
      if (!find_isomorphism(neighbourhood(v), first))
        throw std::runtime_error("decomposition graph is not vertex-transitive at vertex " + std::to_string(v));
  } else if (n > 0) {
    for (std::size_t v = 0; v < n; ++v)
      if (out.degree(v) != 0) throw std::runtime_error("decomposition graph is not vertex-transitive");
  }
  return out;
}

bool is_nested(const GradingSequence& seq) {
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const RootSystem& next = seq[k + 1].system;
    const ThreeGrading& prev = seq[k];
    if (!next.same_ambient(prev.system) || next.size() != prev.zero.size()) return false;
    for (auto z : prev.zero)
      if (!next.index_of(prev.system.root(z))) return false;
  }
  return true;
}

LocalityReport is_local_sequence(const GradingSequence& seq) {
  LocalityReport r;
  if (!is_nested(seq)) {
    r.failure = "arrows are not nested";
    return r;
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const Graph prev = decomposition_graph(seq[k]);
    const Graph next = decomposition_graph(seq[k + 1]);
    Graph local;
    try {
      local = local_subgraph(prev);
    } catch (const std::invalid_argument&) {
      r.failure = "arrow " + std::to_string(k + 1) + " has no local subgraph";
      return r;
    }
    auto iso = find_isomorphism(next, local);
    if (!iso) {
      r.failure = "arrow " + std::to_string(k + 2) + " is not the local subgraph of arrow " + std::to_string(k + 1);
      return r;
    }
    r.certificates.push_back(*iso);
  }
  r.local = true;
  return r;
}

bool is_maximal_sequence(const GradingSequence& seq) {
  if (!is_nested(seq)) return false;
  for (const auto& g : seq) {
    std::size_t best = 0;
    for (const auto& h : enumerate_three_gradings(g.system)) best = std::max(best, h.weight());
    if (g.weight() != best) return false;
  }
  return true;
}

namespace {

void extend(const RootSystem& system, GradingSequence& prefix, bool nonempty_zero, std::vector<GradingSequence>& out) {
  std::vector<ThreeGrading> options;
  if (system.size() > 0 && decompose_type(system).components.size() == 1) {
    std::set<std::pair<std::string, std::size_t>> seen;
    for (auto& g : enumerate_three_gradings(system)) {
      if (nonempty_zero && g.zero.empty()) continue;
      if (seen.insert({g.zero_type, g.weight()}).second) options.push_back(std::move(g));
    }
  }
  if (options.empty()) {
    if (!prefix.empty()) out.push_back(prefix);
    return;
  }
  for (auto& g : options) {
    const RootSystem next = g.zero_system();
    prefix.push_back(std::move(g));
    extend(next, prefix, nonempty_zero, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<GradingSequence> enumerate_sequences(const RootSystem& system, bool nonempty_zero) {
  std::vector<GradingSequence> out;
  GradingSequence prefix;
  extend(system, prefix, nonempty_zero, out);
  return out;
}

std::vector<std::string> sequence_labels(const GradingSequence& seq) {
  std::vector<std::string> out;
  if (seq.empty()) return out;
  out.push_back(seq.front().system.label());
  for (const auto& g : seq) out.push_back(g.zero_type);
  return out;
}

bool GradingMesh::has_arrow(const std::string& source, const std::string& target, std::size_t weight) const {
  return std::any_of(arrows.begin(), arrows.end(), [&](const MeshArrow& a) {
    return a.source == source && a.target == target && a.weight == weight;
  });
}

namespace {

std::vector<std::string> irreducible_labels(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back("E" + std::to_string(n));
  return out;
}

}  // namespace

GradingMesh build_mesh(int max_rank, bool nonempty_zero) {
  if (max_rank < 1 || max_rank > 8) throw std::invalid_argument("mesh rank must lie in 1..8");
  GradingMesh mesh;
  std::set<std::string> nodes;
  for (const auto& label : irreducible_labels(max_rank)) {
    nodes.insert(label);
    for (const auto& g : enumerate_three_gradings(build_simply_laced(label))) {
      if (nonempty_zero && g.zero.empty()) continue;
      MeshArrow a{label, g.zero_type, g.weight(), g.name};
      if (mesh.has_arrow(a.source, a.target, a.weight)) continue;
      nodes.insert(a.target);
      mesh.arrows.push_back(std::move(a));
    }
  }
  mesh.nodes.assign(nodes.begin(), nodes.end());
  return mesh;
}

std::string mesh_to_dot(const GradingMesh& mesh) {
  std::ostringstream os;
  os << "digraph mesh {\n";
  for (const auto& n : mesh.nodes) os << "  \"" << n << "\";\n";
  for (const auto& a : mesh.arrows)
    os << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.weight << "\", name=\"" << a.name
       << "\"];\n";
  os << "}\n";
  return os.str();
}

UniquenessReport verify_exceptional_uniqueness(int max_rank) {
  UniquenessReport rep;
  const GradingMesh mesh = build_mesh(max_rank);
  std::set<std::string> targets;
  for (const auto& a : mesh.arrows) targets.insert(a.target);
  for (const auto& label : irreducible_labels(max_rank)) {
    if (targets.count(label)) continue;
    if (label[0] == 'A' || label[0] == 'D') {
      rep.notes.push_back(label + " is the zero part of a grading of a larger " + label.substr(0, 1) +
                          " system outside the rank bound");
      continue;
    }
    const bool has_arrow = std::any_of(mesh.arrows.begin(), mesh.arrows.end(),
                                       [&](const MeshArrow& a) { return a.source == label; });
    if (!has_arrow) {
      rep.notes.push_back(label + " admits no 3-grading");
      continue;
    }
    rep.sources.push_back(label);
  }
  for (const auto& label : rep.sources)
    for (auto& seq : enumerate_sequences(build_simply_laced(label))) rep.sequences.push_back(std::move(seq));
  for (std::size_t i = 0; i < rep.sequences.size(); ++i) {
    if (is_local_sequence(rep.sequences[i]).local) rep.local.push_back(i);
    if (is_maximal_sequence(rep.sequences[i])) rep.maximal.push_back(i);
  }
  rep.unique_local = rep.local.size() == 1;
  rep.unique_maximal = rep.maximal.size() == 1;
  rep.agree = rep.unique_local && rep.unique_maximal && rep.local.front() == rep.maximal.front();
  if (rep.agree) rep.winner = sequence_labels(rep.sequences[rep.local.front()]);
  return rep;
}

std::vector<Coweight> minuscule_orbit(const RootSystem& e7) {
  const TypeDecomposition type = decompose_type(e7);
  if (type.label() != "E7") throw std::invalid_argument("minuscule orbit is defined for E7");
  const std::size_t node7 = type.components.front().nodes[6];
  std::set<Coweight> seen{fundamental_coweight(e7, node7)};
  std::vector<Coweight> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Coweight> next;
    for (const auto& w : frontier)
      for (auto s : e7.simple_roots()) {
        const Rational p = pairing(e7, s, w);
        if (p.is_zero()) continue;
        Coweight r = w;
        for (std::size_t k = 0; k < r.q.size(); ++k) r.q[k] -= p * Rational(e7.root(s)[k]);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

RatMatrix orbit_line_gram(const RootSystem& e7, const std::vector<Coweight>& orbit) {
  std::vector<const Coweight*> reps;
  std::set<Coweight> used;
  for (const auto& w : orbit) {
    Coweight neg = w;
    for (auto& c : neg.q) c = -c;
    if (used.count(neg)) continue;
    used.insert(w);
    reps.push_back(&w);
  }
  RatMatrix g(reps.size(), reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) g(i, j) = e7.form()->inner(reps[i]->q, reps[j]->q);
  return g;
}

std::string orthogonal_subsystem(const RootSystem& system, const std::vector<Coweight>& acute) {
  for (std::size_t i = 0; i < acute.size(); ++i)
    for (std::size_t j = i + 1; j < acute.size(); ++j)
      if (system.form()->inner(acute[i].q, acute[j].q).sign() <= 0)
        throw std::invalid_argument("coweights " + std::to_string(i) + "," + std::to_string(j) + " are not acute");
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < system.size(); ++r)
    if (std::all_of(acute.begin(), acute.end(), [&](const Coweight& w) { return pairing(system, r, w).is_zero(); }))
      keep.push_back(r);
  return system.subsystem(keep).label();
}

}  // namespace rootlines

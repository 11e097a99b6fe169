#include "rootlines/io.hpp"

#include <set>
#include <stdexcept>

namespace rootlines {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const RootSystem& system) {
  return {{"label", system.label()}, {"gram", system.form()->matrix()}, {"roots", system.roots()}};
}

RootSystem root_system_from_json(const json& j) {
  try {
    auto gram = j.at("gram").get<IntMatrix>();
    auto roots = j.at("roots").get<std::vector<Coords>>();
    for (const auto& row : gram)
      if (row.size() != gram.size()) throw std::invalid_argument("gram is not square");
    for (const auto& r : roots)
      if (r.size() != gram.size()) throw std::invalid_argument("root length does not match gram");
    return RootSystem(j.at("label").get<std::string>(), std::make_shared<GramForm>(std::move(gram)),
                      std::move(roots));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed root system: ") + e.what());
  }
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("vertices").get<std::size_t>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return g;
}

json to_json(const IncidenceStructure& s) {
  json points = json::array();
  for (std::size_t p = 0; p < s.points; ++p) points.push_back(p);
  return {{"points", points}, {"blocks", s.blocks}};
}

static json gq_json(const GqResult& gq) {
  json j = {{"ok", gq.ok}};
  if (gq.ok) {
    j["s"] = gq.s;
    j["t"] = gq.t;
  } else {
    j["failure"] = gq.failure;
  }
  return j;
}

json to_json(const NamedTriads& t) {
  std::set<std::string> points;
  for (const auto& b : t.names) points.insert(b.begin(), b.end());
  return {{"points", points}, {"blocks", t.names}, {"gq", gq_json(t.gq)}};
}

json to_json(const LineSystem& l) {
  json reps = json::array();
  for (auto r : l.reps()) reps.push_back(l.ambient().root(r));
  return reps;
}

json to_json(const StarDecomposition& d) {
  json star = json::array();
  for (auto r : d.star) star.push_back(d.part_a.ambient().root(r));
  return {{"star", star},
          {"part_a", to_json(d.part_a)},
          {"part_b", to_json(d.part_b)},
          {"part_c", to_json(d.part_c)},
          {"part_d", to_json(d.part_d)}};
}

json to_json(const Classification& c) {
  return {{"label", c.label},
          {"case", std::string(1, c.theorem_case)},
          {"graph", c.graph},
          {"part_a_graph", to_json(c.part_a_graph)},
          {"decomposition", to_json(c.decomposition)}};
}

json to_json(const ThreeGrading& g) {
  json q = json::array();
  for (const auto& x : g.q.q) q.push_back(to_json(x));
  return {{"source", g.system.label()}, {"target", g.zero_type}, {"weight", g.weight()},
          {"name", g.name},             {"node", g.node},        {"coweight", q}};
}

json to_json(const MeshArrow& a) {
  return {{"source", a.source}, {"target", a.target}, {"weight", a.weight}, {"name", a.name}};
}

json to_json(const GradingMesh& mesh) {
  json arrows = json::array();
  for (const auto& a : mesh.arrows) arrows.push_back(to_json(a));
  return {{"nodes", mesh.nodes}, {"arrows", arrows}};
}

json sequence_to_json(const GradingSequence& seq) {
  json out = json::array();
  for (const auto& g : seq) out.push_back(to_json(MeshArrow{g.system.label(), g.zero_type, g.weight(), g.name}));
  return out;
}

json to_json(const UniquenessReport& r) {
  json seqs = json::array();
  for (const auto& s : r.sequences) seqs.push_back(sequence_to_json(s));
  return {{"sources", r.sources},     {"notes", r.notes},
          {"sequences", seqs},        {"local", r.local},
          {"maximal", r.maximal},     {"unique_local", r.unique_local},
          {"unique_maximal", r.unique_maximal}, {"agree", r.agree},
          {"winner", r.winner}};
}

json structure_constants_json(const LieAlgebra& l) {
  json out = json::array();
  for (std::size_t x = 0; x < l.dim(); ++x)
    for (std::size_t y = x + 1; y < l.dim(); ++y) {
      const Element& b = l.bracket_basis(x, y);
      if (b.is_zero()) continue;
      json result = json::array();
      for (const auto& [i, c] : b.terms()) result.push_back({i, to_json(c)});
      out.push_back({{"x", x}, {"y", y}, {"result", result}});
    }
  return out;
}

json particle_table_json() {
  json out = json::array();
  for (const auto& row : particle_table())
    out.push_back({{"name", row.name},
                   {"symbol", row.symbol},
                   {"B", to_json(row.values[0])},
                   {"W0", to_json(row.values[1])},
                   {"lambda3", to_json(row.values[2])},
                   {"sqrt3lambda8", to_json(row.values[3])}});
  return out;
}

json census_json(const StandardModel& sm) {
  json out = json::array();
  for (const auto& rec : sm.records()) {
    const auto& e = rec.eigenvalues;
    out.push_back({{"name", rec.name},
                   {"B", to_json(e[kB])},
                   {"W0", to_json(e[kW0])},
                   {"lambda3", to_json(e[kLambda3])},
                   {"sqrt3lambda8", to_json(e[kLambda8])},
                   {"rho3", to_json(e[kRho3])},
                   {"sqrt3rho8", to_json(e[kRho8])},
                   {"H", to_json(e[kH])},
                   {"colour", rec.colour},
                   {"generation", rec.generation ? json(rec.generation) : json("none")},
                   {"classification", to_string(rec.kind)}});
  }
  return out;
}

}  // namespace rootlines

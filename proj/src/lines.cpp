#include "rootlines/lines.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace rootlines {

std::size_t line_of(const RootSystem& system, std::size_t root) {
  return system.is_positive(root) ? root : system.negative_of(root);
}

LineSystem::LineSystem(RootSystem ambient, const std::vector<std::size_t>& roots) : ambient_(std::move(ambient)) {
  for (auto r : roots) {
    if (r >= ambient_.size()) throw std::invalid_argument("root index out of range");
    if (ambient_.norm(r) != 2) throw std::invalid_argument("line representatives must have norm 2");
    reps_.push_back(line_of(ambient_, r));
  }
  std::sort(reps_.begin(), reps_.end());
  reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
  for (std::size_t a = 0; a < reps_.size(); ++a)
    for (std::size_t b = a + 1; b < reps_.size(); ++b) {
      const auto ip = inner(a, b);
      if (ip < -1 || ip > 1) throw std::invalid_argument("lines are not of type (0,1/2)");
    }
}

bool LineSystem::contains(std::size_t root) const {
  return std::binary_search(reps_.begin(), reps_.end(), line_of(ambient_, root));
}

std::size_t LineSystem::position_of(std::size_t root) const {
  auto it = std::lower_bound(reps_.begin(), reps_.end(), line_of(ambient_, root));
  if (it == reps_.end() || *it != line_of(ambient_, root)) throw std::invalid_argument("line not in system");
  return static_cast<std::size_t>(it - reps_.begin());
}

Graph LineSystem::nonorthogonality_graph() const {
  Graph g(size());
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (inner(a, b) != 0) g.add_edge(a, b);
  return g;
}

bool operator==(const LineSystem& a, const LineSystem& b) {
  if (!a.ambient_.same_ambient(b.ambient_) || a.size() != b.size()) return false;
  std::set<Coords> ca, cb;
  for (auto r : a.reps_) ca.insert(a.ambient_.root(r));
  for (auto r : b.reps_) cb.insert(b.ambient_.root(r));
  return ca == cb;
}

LineSystem lines_of(const RootSystem& system) {
  for (std::size_t i = 0; i < system.size(); ++i)
    if (system.norm(i) != 2) throw std::invalid_argument("lines_of needs a simply-laced system of norm-2 roots");
  std::vector<std::size_t> pos(system.positive_count());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  return LineSystem(system, pos);
}

std::optional<std::size_t> third_line(const RootSystem& ambient, std::size_t a, std::size_t b) {
  const auto ip = ambient.inner(a, b);
  if (ip == 0) return std::nullopt;
  Coords c = ambient.root(a);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= static_cast<int>(ip) * ambient.root(b)[k];
  auto idx = ambient.index_of(c);
  if (!idx) return std::nullopt;
  return line_of(ambient, *idx);
}

LineSystem star_closure(const LineSystem& partial) {
  const RootSystem& amb = partial.ambient();
  std::vector<std::size_t> lines = partial.reps();
  std::vector<bool> member(amb.size(), false);
  for (auto r : lines) member[r] = true;
  // every new line is paired with all earlier ones exactly once
  for (std::size_t j = 0; j < lines.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (amb.inner(lines[i], lines[j]) == 0) continue;
      auto third = third_line(amb, lines[i], lines[j]);
      if (!third) throw std::domain_error("star closure escapes the ambient root system");
      if (!member[*third]) {
        member[*third] = true;
        lines.push_back(*third);
      }
    }
  return LineSystem(amb, lines);
}

bool is_star_closed(const LineSystem& l) { return star_closure(l).size() == l.size(); }

bool is_star_free(const LineSystem& l) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.inner(a, b) == 0) continue;
      auto third = third_line(l.ambient(), l.reps()[a], l.reps()[b]);
      if (third && l.contains(*third)) return false;
    }
  return true;
}

bool is_indecomposable(const LineSystem& l) { return l.nonorthogonality_graph().connected(); }

std::optional<std::array<std::size_t, 3>> first_star(const LineSystem& l) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.inner(a, b) == 0) continue;
      auto third = third_line(l.ambient(), l.reps()[a], l.reps()[b]);
      if (third && l.contains(*third)) return std::array<std::size_t, 3>{a, b, l.position_of(*third)};
    }
  return std::nullopt;
}

StarDecomposition star_decomposition(const LineSystem& l, const std::array<std::size_t, 3>& star) {
  const RootSystem& amb = l.ambient();
  std::array<std::size_t, 3> s;
  for (int i = 0; i < 3; ++i) {
    if (!l.contains(star[i])) throw std::invalid_argument("star is not contained in the line system");
    s[i] = line_of(amb, star[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (s[i] == s[j] || amb.inner(s[i], s[j]) == 0) throw std::invalid_argument("lines do not form a star");
  if (third_line(amb, s[0], s[1]) != s[2]) throw std::invalid_argument("lines do not form a star");

  std::array<std::vector<std::size_t>, 4> parts;
  for (auto r : l.reps()) {
    if (r == s[0] || r == s[1] || r == s[2]) continue;
    int orth = 0;
    int which = -1;
    for (int i = 0; i < 3; ++i)
      if (amb.inner(r, s[i]) == 0) {
        ++orth;
        which = i;
      }
    if (orth == 1) parts[static_cast<std::size_t>(which)].push_back(r);
    else if (orth == 3) parts[3].push_back(r);
    else throw std::domain_error("line orthogonal to " + std::to_string(orth) + " star members");
  }
  return {s, LineSystem(amb, parts[0]), LineSystem(amb, parts[1]), LineSystem(amb, parts[2]),
          LineSystem(amb, parts[3])};
}

Representation representation_graph(const LineSystem& a) {
  const RootSystem& amb = a.ambient();
  const std::size_t n = a.size();
  std::vector<std::size_t> chosen = a.reps();
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (seen[v] || a.inner(u, v) == 0) continue;
        seen[v] = true;
        if (amb.inner(chosen[u], chosen[v]) < 0) chosen[v] = amb.negative_of(chosen[v]);
        queue.push_back(v);
      }
    }
  }
  Representation rep{Graph(n), chosen};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto ip = amb.inner(chosen[u], chosen[v]);
      if (ip < 0) throw std::domain_error("no non-negative representation: the lines contain a star");
      if (ip == 1) rep.graph.add_edge(u, v);
    }
  return rep;
}

IncidenceStructure triads_of(const LineSystem& a) {
  const Representation rep = representation_graph(a);
  IncidenceStructure out{a.size(), {}};
  for (auto& set : maximal_independent_sets(rep.graph)) {
    if (set.size() < 2) continue;
    if (set.size() != 3) throw std::domain_error("maximal orthogonal set of size " + std::to_string(set.size()));
    out.blocks.push_back(std::move(set));
  }
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      if (rep.graph.adjacent(u, v)) continue;
      const bool covered = std::any_of(out.blocks.begin(), out.blocks.end(), [&](const auto& b) {
        return std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v);
      });
      if (!covered) throw std::domain_error("orthogonal pair extends to no triad");
    }
  return out;
}

GqResult gq_check(const IncidenceStructure& st) {
  GqResult r;
  if (st.points == 0 || st.blocks.empty()) {
    r.failure = "empty";
    return r;
  }
  const std::size_t block_size = st.blocks.front().size();
  for (const auto& b : st.blocks)
    if (b.size() != block_size || block_size < 2) {
      r.failure = "block size";
      return r;
    }
  std::vector<std::size_t> deg(st.points, 0);
  for (const auto& b : st.blocks)
    for (auto p : b) {
      if (p >= st.points) throw std::invalid_argument("block references a missing point");
      ++deg[p];
    }
  for (auto d : deg)
    if (d != deg.front() || d == 0) {
      r.failure = "point degree";
      return r;
    }

  // bipartite incidence graph: points first, then blocks
  const std::size_t n = st.points + st.blocks.size();
  Graph inc(n);
  for (std::size_t b = 0; b < st.blocks.size(); ++b)
    for (auto p : st.blocks[b]) inc.add_edge(p, st.points + b);

  std::size_t diameter = 0;
  std::size_t girth = SIZE_MAX;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : inc.neighbours(u)) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          girth = std::min(girth, dist[u] + dist[v] + 1);
        }
      }
    }
    for (auto d : dist) diameter = std::max(diameter, d);
  }
  if (diameter != 4) {
    r.failure = "diameter";
    return r;
  }
  if (girth != 8) {
    r.failure = "girth";
    return r;
  }
  r.ok = true;
  r.s = block_size - 1;
  r.t = deg.front() - 1;
  return r;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    if (v < 0) return std::nullopt;
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
  };
  auto n = isqrt(q.num());
  auto d = isqrt(q.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace

EquiangularReport equiangular_bound_check(const RatMatrix& gram, std::size_t dimension) {
  const std::size_t n = gram.rows();
  EquiangularReport rep;
  rep.lines = n;
  rep.dimension = dimension;
  rep.bound = dimension * (dimension + 1) / 2;
  std::optional<Rational> common;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational c2 = gram(i, j) * gram(i, j) / (gram(i, i) * gram(j, j));
      if (c2 == 1) throw std::invalid_argument("coincident lines " + std::to_string(i) + "," + std::to_string(j));
      if (!common) common = c2;
      else if (*common != c2)
        throw std::domain_error("not equiangular: pair " + std::to_string(i) + "," + std::to_string(j));
    }
  rep.cos_squared = common.value_or(Rational(0));
  rep.cos = rational_sqrt(rep.cos_squared);
  rep.meets_bound = n == rep.bound;
  return rep;
}

Classification classify_indecomposable(const LineSystem& l) {
  if (l.empty() || !is_indecomposable(l)) throw std::invalid_argument("line system is decomposable");
  if (!is_star_closed(l)) throw std::invalid_argument("line system is not star-closed");
  const auto star = first_star(l);
  if (!star) {
    if (l.size() == 1) {
      // a single line: no star, the A1 system
      const LineSystem none(l.ambient(), {});
      return Classification{'-', "A1", "-", StarDecomposition{{l.reps()[0], l.reps()[0], l.reps()[0]}, none, none, none, none},
                            Graph(0)};
    }
    throw std::invalid_argument("indecomposable system without a star");
  }
  Classification out{'?', "", "", star_decomposition(l, {l.reps()[(*star)[0]], l.reps()[(*star)[1]], l.reps()[(*star)[2]]}),
                     Graph(0)};
  out.part_a_graph = representation_graph(out.decomposition.part_a).graph;
  const Graph& g = out.part_a_graph;
  const std::size_t n = g.order();

  if (n == 0 || g.edge_count() == n * (n - 1) / 2) {
    out.theorem_case = 'a';
    out.label = "A" + std::to_string(n + 2);
    out.graph = "K" + std::to_string(n);
    return out;
  }
  if (n % 2 == 1 && find_isomorphism(g, disjoint_union(cocktail_party_graph(n / 2), Graph(1)))) {
    out.theorem_case = 'b';
    out.label = "D" + std::to_string(n / 2 + 3);
    out.graph = "CP(" + std::to_string(n / 2) + ")+K1";
    return out;
  }
  const auto srg = srg_check(g);
  if (srg.ok()) {
    const SrgParameters p = *srg.params;
    const std::pair<char, const char*> exceptional[] = {{'c', "E6"}, {'d', "E7"}, {'e', "E8"}};
    const SrgParameters params[] = {{9, 4, 1, 2}, {15, 8, 4, 4}, {27, 16, 10, 8}};
    for (int i = 0; i < 3; ++i)
      if (p == params[i]) {
        out.theorem_case = exceptional[i].first;
        out.label = exceptional[i].second;
        out.graph = p.str();
        return out;
      }
  }
  throw std::runtime_error("part A graph matches none of the five families");
}

}  // namespace rootlines

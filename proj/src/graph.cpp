#include "rootlines/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rootlines {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[u][v]) return;
  adj_[u][v] = adj_[v][u] = true;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adj_[vertices[i]][vertices[j]]) g.add_edge(i, j);
  return g;
}

Graph Graph::complement() const {
  Graph g(order());
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (!adj_[u][v]) g.add_edge(u, v);
  return g;
}

bool Graph::connected() const {
  if (order() == 0) return true;
  std::vector<bool> seen(order(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : nbrs_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  return count == order();
}

Graph complete_graph(std::size_t n) { return Graph(n).complement(); }

Graph cocktail_party_graph(std::size_t m) {
  Graph g(2 * m);
  for (std::size_t u = 0; u < 2 * m; ++u)
    for (std::size_t v = u + 1; v < 2 * m; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

std::string SrgParameters::str() const {
  std::ostringstream os;
  os << "srg(" << v << "," << k << "," << lambda << "," << mu << ")";
  return os.str();
}

SrgResult srg_check(const Graph& g) {
  SrgResult r;
  const std::size_t n = g.order();
  if (n == 0) {
    r.failure = "empty graph";
    return r;
  }
  const std::size_t k = g.degree(0);
  for (std::size_t v = 1; v < n; ++v)
    if (g.degree(v) != k) {
      r.failure = "not regular";
      r.witness = {0, v};
      return r;
    }
  std::optional<std::size_t> lambda, mu;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      std::size_t common = 0;
      for (auto w : g.neighbours(u))
        if (g.adjacent(v, w)) ++common;
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        r.failure = g.adjacent(u, v) ? "adjacent pairs disagree on common neighbours"
                                     : "non-adjacent pairs disagree on common neighbours";
        r.witness = {u, v};
        return r;
      }
    }
  r.params = SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
  return r;
}

std::vector<std::vector<std::size_t>> maximal_independent_sets(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 64) throw std::invalid_argument("independent set enumeration is limited to 64 vertices");
  using Bits = std::uint64_t;
  // independent sets of g are cliques of the complement
  std::vector<Bits> nonadj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) nonadj[u] |= Bits{1} << v;

  std::vector<std::vector<std::size_t>> out;
  std::function<void(Bits, Bits, Bits)> bron_kerbosch = [&](Bits r, Bits p, Bits x) {
    if (p == 0 && x == 0) {
      std::vector<std::size_t> set;
      for (std::size_t v = 0; v < n; ++v)
        if (r >> v & 1) set.push_back(v);
      out.push_back(std::move(set));
      return;
    }
    // pivot maximizing |P ∩ N(u)|
    Bits px = p | x;
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t u = 0; u < n; ++u)
      if (px >> u & 1) {
        int c = __builtin_popcountll(p & nonadj[u]);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    Bits candidates = p & ~nonadj[pivot];
    for (std::size_t v = 0; v < n; ++v) {
      if (!(candidates >> v & 1)) continue;
      const Bits bit = Bits{1} << v;
      bron_kerbosch(r | bit, p & nonadj[v], x & nonadj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  if (n > 0) bron_kerbosch(0, n == 64 ? ~Bits{0} : (Bits{1} << n) - 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Joint colour refinement: colours are comparable across the two graphs.
bool refine(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const std::size_t n = g.order();
  auto distinct = [](const std::vector<int>& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  };
  std::size_t colours = distinct(cg);
  for (;;) {
    using Sig = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& gr, const std::vector<int>& c, std::size_t v) {
      std::vector<int> nb;
      for (auto w : gr.neighbours(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return Sig{c[v], std::move(nb)};
    };
    std::vector<Sig> sg(n), sh(n);
    std::map<Sig, int> ids;
    for (std::size_t v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    std::vector<int> hg = cg, hh = ch;
    std::sort(hg.begin(), hg.end());
    std::sort(hh.begin(), hh.end());
    if (hg != hh) return false;
    const std::size_t now = distinct(cg);
    if (now == colours) return true;
    colours = now;
  }
}

bool search(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch, std::vector<std::size_t>& map) {
  if (!refine(g, h, cg, ch)) return false;
  const std::size_t n = g.order();
  std::map<int, std::vector<std::size_t>> cells_g, cells_h;
  for (std::size_t v = 0; v < n; ++v) {
    cells_g[cg[v]].push_back(v);
    cells_h[ch[v]].push_back(v);
  }
  const std::vector<std::size_t>* target = nullptr;
  int target_colour = 0;
  for (const auto& [colour, cell] : cells_g)
    if (cell.size() > 1 && (!target || cell.size() < target->size())) {
      target = &cell;
      target_colour = colour;
    }
  if (!target) {
    for (std::size_t v = 0; v < n; ++v) map[v] = cells_h[cg[v]].front();
    return is_isomorphism(g, h, map);
  }
  const int fresh = static_cast<int>(n) + 1;
  const std::size_t v = target->front();
  for (auto w : cells_h[target_colour]) {
    auto ng = cg, nh = ch;
    ng[v] = fresh;
    nh[w] = fresh;
    if (search(g, h, std::move(ng), std::move(nh), map)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<std::size_t> map(g.order());
  std::vector<int> cg(g.order(), 0), ch(h.order(), 0);
  if (!search(g, h, cg, ch, map)) return std::nullopt;
  return map;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map) {
  const std::size_t n = g.order();
  if (h.order() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : map) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

Graph local_subgraph(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("local subgraph of an empty graph");
  if (g.degree(0) == 0) throw std::invalid_argument("local subgraph of an isolated vertex");
  return g.induced(g.neighbours(0));
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rootlines

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rootlines {

/// Simple undirected graph on vertices 0..order()-1.
class Graph {
 public:
  explicit Graph(std::size_t order = 0) : adj_(order, std::vector<bool>(order, false)), nbrs_(order) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// Throws std::invalid_argument on loops or out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return nbrs_[v]; }
  std::size_t degree(std::size_t v) const { return nbrs_[v].size(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  Graph induced(const std::vector<std::size_t>& vertices) const;
  Graph complement() const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::size_t edges_ = 0;
};

Graph complete_graph(std::size_t n);
/// K_{2m} minus a perfect matching; vertex 2i is paired with 2i+1.
Graph cocktail_party_graph(std::size_t m);
/// Disjoint union, vertices of b shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

struct SrgParameters {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
  std::string str() const;
};

/// Strong-regularity test. On failure `failure` names the broken property
/// and `witness` holds an offending vertex or vertex pair.
struct SrgResult {
  std::optional<SrgParameters> params;
  std::string failure;
  std::pair<std::size_t, std::size_t> witness{0, 0};
  bool ok() const { return params.has_value(); }
};
SrgResult srg_check(const Graph& g);

/// All maximal independent sets, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> maximal_independent_sets(const Graph& g);

/// Vertex bijection g -> h preserving adjacency, or nullopt.
/// Colour refinement plus individualization backtracking.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map);

/// Induced subgraph on the neighbours of vertex 0. Throws
/// std::invalid_argument for an empty graph or an isolated vertex 0.
Graph local_subgraph(const Graph& g);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace rootlines

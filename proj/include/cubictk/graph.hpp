// Small undirected simple graphs and an exact isomorphism search.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cubictk {

class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::vector<std::size_t> sorted_degree_sequence() const;
  /// Regular degree, or nullopt if the graph is not regular.
  std::optional<std::size_t> regular_degree() const;

 private:
  std::size_t n_;
  std::size_t edges_ = 0;
  std::vector<char> adj_;
};

/// Returns a vertex bijection phi with g1.adjacent(u,v) == g2.adjacent(phi[u],phi[v]),
/// or nullopt when the graphs are not isomorphic. Backtracking with degree and
/// adjacency-consistency pruning; intended for graphs of a few dozen vertices.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2);

/// True iff perm (a vertex permutation) preserves adjacency.
bool is_automorphism(const Graph& g, const std::vector<std::size_t>& perm);

}  // namespace cubictk

#include "cubictk/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubictk {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) throw std::invalid_argument("bad edge");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++edges_;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (adj_[v * n_ + u]) out.push_back(u);
  return out;
}

std::vector<std::size_t> Graph::sorted_degree_sequence() const {
  std::vector<std::size_t> ds(n_);
  for (std::size_t v = 0; v < n_; ++v) ds[v] = degree(v);
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  std::size_t d = degree(0);
  for (std::size_t v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

namespace {

struct IsoSearch {
  const Graph& g1;
  const Graph& g2;
  std::vector<std::size_t> order;  // g1 vertices in assignment order
  std::vector<std::size_t> map;    // g1 -> g2
  std::vector<char> used;

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t u, std::size_t w) const {
    if (g1.degree(u) != g2.degree(w)) return false;
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
      if (map[v] == kUnset) continue;
      if (g1.adjacent(u, v) != g2.adjacent(w, map[v])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    std::size_t u = order[depth];
    for (std::size_t w = 0; w < g2.vertex_count(); ++w) {
      if (used[w] || !consistent(u, w)) continue;
      map[u] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      map[u] = kUnset;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.sorted_degree_sequence() != g2.sorted_degree_sequence()) return std::nullopt;

  IsoSearch s{g1, g2, {}, std::vector<std::size_t>(n, IsoSearch::kUnset), std::vector<char>(n, 0)};
  // BFS order keeps every new vertex adjacent to already-mapped ones, which
  // makes the consistency check prune early.
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = s.order.size();
    s.order.push_back(root);
    while (head < s.order.size()) {
      std::size_t v = s.order[head++];
      for (std::size_t u : g1.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          s.order.push_back(u);
        }
      }
    }
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

bool is_automorphism(const Graph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = 1;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace cubictk

#include "trigraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace trigraph {

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_per_row_((n + kWordBits - 1) / kWordBits), bits_(n * words_per_row_, 0) {}

Graph Graph::from_edge_list(std::optional<std::size_t> n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t max_id_plus_one = 0;
  for (const auto& e : edges) {
    if (e.u == e.v) throw SelfLoop(e.u);
    if (n && (e.u >= *n || e.v >= *n)) throw VertexOutOfRange(std::max(e.u, e.v), *n);
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::size_t{canon.back().v} + 1);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  const std::size_t nv = n.value_or(max_id_plus_one);
  g.offsets_.assign(nv + 1, 0);
  for (const auto& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < nv; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted, so the first pass appends each row's smaller neighbors in
  // increasing order and the second pass its larger ones.
  for (const auto& e : canon) g.targets_[cursor[e.v]++] = e.u;
  for (const auto& e : canon) g.targets_[cursor[e.u]++] = e.v;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (matrix_) return matrix_->test(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const BitMatrix& Graph::matrix() const {
  if (!matrix_) throw MatrixMissing();
  return *matrix_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_matrix(Graph g, std::size_t max_vertices) {
  if (g.matrix_) return g;
  const std::size_t n = g.num_vertices();
  if (n > max_vertices) throw MatrixTooLarge(n, max_vertices);
  BitMatrix m(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) m.set(u, v);
  }
  g.matrix_ = std::move(m);
  return g;
}

std::uint64_t edge_cost_sum(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) total += std::min(g.degree(u), g.degree(v));
    }
  }
  return total;
}

Degeneracy degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Degeneracy out;
  out.order.reserve(n);
  std::vector<std::size_t> remaining(n);
  std::vector<bool> removed(n, false);
  using Key = std::pair<std::size_t, Vertex>;  // (current degree, id)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    heap.emplace(remaining[v], v);
  }
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (removed[v] || deg != remaining[v]) continue;  // stale entry
    removed[v] = true;
    out.order.push_back(v);
    out.d = std::max(out.d, deg);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) heap.emplace(--remaining[w], w);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t n = g.num_vertices();
  InducedSubgraph out;
  out.mapping.assign(vertices.begin(), vertices.end());
  for (Vertex v : out.mapping) {
    if (v >= n) throw VertexOutOfRange(v, n);
  }
  std::sort(out.mapping.begin(), out.mapping.end());
  out.mapping.erase(std::unique(out.mapping.begin(), out.mapping.end()), out.mapping.end());

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> new_id(n, kAbsent);
  for (std::size_t i = 0; i < out.mapping.size(); ++i) {
    new_id[out.mapping[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.mapping.size(); ++i) {
    for (Vertex w : g.neighbors(out.mapping[i])) {
      if (new_id[w] != kAbsent && new_id[w] > i) edges.push_back({static_cast<Vertex>(i), new_id[w]});
    }
  }
  out.graph = Graph::from_edge_list(out.mapping.size(), edges);
  return out;
}

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  s.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.degrees[v] = g.degree(v);
    s.max_degree = std::max(s.max_degree, s.degrees[v]);
  }
  s.avg_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(m) / static_cast<double>(n);
  s.edge_cost_sum = edge_cost_sum(g);
  auto deg = degeneracy(g);
  s.degeneracy = deg.d;
  s.degeneracy_order = std::move(deg.order);
  s.arboricity_upper = s.degeneracy;
  // alpha <= d <= 2*alpha - 1 only holds once there is an edge.
  if (m > 0) {
    const std::size_t from_degeneracy = (s.degeneracy + 2) / 2;
    const std::size_t from_density = (m + (n - 1) - 1) / (n - 1);
    s.arboricity_lower = std::max(from_degeneracy, from_density);
  }
  return s;
}

}  // namespace trigraph

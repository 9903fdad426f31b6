#include "trigraph/independent_set.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace trigraph {
namespace {

// Bucket queue keyed by current degree with O(1) moves between buckets.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(const Graph& g)
      : degree_(g.num_vertices()),
        head_(g.num_vertices() + 1, kNil),
        prev_(g.num_vertices(), kNil),
        next_(g.num_vertices(), kNil) {
    for (Vertex v = static_cast<Vertex>(g.num_vertices()); v-- > 0;) {
      degree_[v] = g.degree(v);
      push(v);
    }
    size_ = g.num_vertices();
  }

  bool empty() const { return size_ == 0; }

  Vertex pop_min() {
    while (head_[min_] == kNil) ++min_;
    const Vertex v = head_[min_];
    remove(v);
    return v;
  }

  void remove(Vertex v) {
    if (prev_[v] != kNil) {
      next_[prev_[v]] = next_[v];
    } else {
      head_[degree_[v]] = next_[v];
    }
    if (next_[v] != kNil) prev_[next_[v]] = prev_[v];
    prev_[v] = next_[v] = kNil;
    --size_;
  }

  void decrement(Vertex v) {
    remove(v);
    --degree_[v];
    push(v);
    ++size_;
    min_ = std::min(min_, degree_[v]);
  }

 private:
  static constexpr Vertex kNil = ~Vertex{0};

  void push(Vertex v) {
    next_[v] = head_[degree_[v]];
    prev_[v] = kNil;
    if (next_[v] != kNil) prev_[next_[v]] = v;
    head_[degree_[v]] = v;
  }

  std::vector<std::size_t> degree_;
  std::vector<Vertex> head_;
  std::vector<Vertex> prev_;
  std::vector<Vertex> next_;
  std::size_t min_ = 0;
  std::size_t size_ = 0;
};

Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

// Tests all pairs among the first `size` neighbors of v.
IsOrTriangleResult probe_neighborhood(const Graph& g, Vertex v, std::size_t size) {
  IsOrTriangleResult r;
  auto nb = g.neighbors(v).first(size);
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      ++r.probes;
      if (g.has_edge(nb[a], nb[b])) {
        r.outcome = TriangleFound{Triangle::canonical(v, nb[a], nb[b])};
        return r;
      }
    }
  }
  r.outcome = IndependentSet{{nb.begin(), nb.end()}, size};
  return r;
}

IndependentSet whole_vertex_set(const Graph& g) {
  IndependentSet s;
  s.vertices.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) s.vertices[v] = v;
  s.guarantee = g.num_vertices();
  return s;
}

}  // namespace

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex v : vertices) {
    if (v >= g.num_vertices() || member[v]) return false;
    member[v] = 1;
  }
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (member[w]) return false;
    }
  }
  return true;
}

std::uint64_t turan_bound(std::size_t n, std::size_t m) {
  if (n == 0) return 0;
  const std::uint64_t num = std::uint64_t{n} * n;
  const std::uint64_t den = 2 * std::uint64_t{m} + n;
  return (num + den - 1) / den;
}

std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> chosen;
  std::vector<char> gone(n, 0);
  DegreeBuckets buckets(g);
  while (!buckets.empty()) {
    const Vertex v = buckets.pop_min();
    gone[v] = 1;
    chosen.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      gone[w] = 1;
      buckets.remove(w);
      for (Vertex x : g.neighbors(w)) {
        if (!gone[x]) buckets.decrement(x);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

IsOrTriangleResult is_or_triangle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (m == 0) return {whole_vertex_set(g), 0};
  const std::size_t size = (2 * m + n - 1) / n;  // <= max degree
  return probe_neighborhood(g, max_degree_vertex(g), size);
}

IsOrTriangleResult approx_is_or_triangle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw ParamOutOfRange("approx_is_or_triangle needs at least one vertex");
  const std::size_t m = g.num_edges();
  // Average degree 2m/n <= sqrt(n)  <=>  4 m^2 <= n^3.
  const long double lhs = 4.0L * static_cast<long double>(m) * static_cast<long double>(m);
  const long double rhs = static_cast<long double>(n) * n * n;
  if (lhs <= rhs) {
    const auto guarantee = static_cast<std::uint64_t>(
        std::ceil(static_cast<long double>(n) / (std::sqrt(static_cast<long double>(n)) + 1.0L)));
    return {IndependentSet{greedy_independent_set(g), guarantee}, 0};
  }
  return probe_neighborhood(g, max_degree_vertex(g), detail::ceil_sqrt(n));
}

bool validate(const Graph& g, const IsOrTriangleResult& result) {
  if (const auto* s = std::get_if<IndependentSet>(&result.outcome)) {
    return s->vertices.size() >= s->guarantee && is_independent_set(g, s->vertices);
  }
  return is_valid_triangle(g, std::get<TriangleFound>(result.outcome).triangle);
}

}  // namespace trigraph

#include "trigraph/triangles.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "detail.hpp"

namespace trigraph {
namespace {

constexpr std::array kTriangleAlgorithms = {Algorithm::hybrid, Algorithm::chiba_nishizeki,
                                            Algorithm::itai_rodeh, Algorithm::matrix,
                                            Algorithm::ayz, Algorithm::brute};

}  // namespace

bool is_valid_triangle(const Graph& g, const Triangle& t) {
  const std::size_t n = g.num_vertices();
  if (!(t.i < t.j && t.j < t.k) || t.k >= n) return false;
  return g.has_edge(t.i, t.j) && g.has_edge(t.j, t.k) && g.has_edge(t.i, t.k);
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::hybrid: return "hybrid";
    case Algorithm::chiba_nishizeki: return "chiba_nishizeki";
    case Algorithm::itai_rodeh: return "itai_rodeh";
    case Algorithm::matrix: return "matrix";
    case Algorithm::ayz: return "ayz";
    case Algorithm::brute: return "brute";
    case Algorithm::cliques: return "cliques";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kTriangleAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw UnknownAlgorithm(std::string(name));
}

std::span<const Algorithm> triangle_algorithms() { return kTriangleAlgorithms; }

std::vector<Triangle> brute_force_list(const Graph& g) {
  std::vector<Triangle> out;
  list_brute(g, [&](const Triangle& t) { out.push_back(t); });
  return out;
}

ListingReport list_brute(const Graph& g, const TriangleVisitor& visit) {
  detail::Stopwatch clock;
  ListingReport r{Algorithm::brute};
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (Vertex k = j + 1; k < n; ++k) {
        ++r.probes;
        if (g.has_edge(i, k) && g.has_edge(j, k)) {
          visit({i, j, k});
          ++r.triangles_emitted;
        }
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

ListingReport list_hybrid(const Graph& g, const TriangleVisitor& visit) {
  const BitMatrix& adj = g.matrix();
  detail::Stopwatch clock;
  ListingReport r{Algorithm::hybrid};
  r.matrix_bytes = adj.bytes();
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      // Scan the lower-degree endpoint; ties go to i.
      const bool scan_i = g.degree(i) <= g.degree(j);
      const Vertex x = scan_i ? i : j;
      const Vertex y = scan_i ? j : i;
      for (Vertex k : g.neighbors(x)) {
        ++r.probes;
        if (j < k && adj.test(y, k)) {
          visit({i, j, k});
          ++r.triangles_emitted;
        }
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

ListingReport list_chiba_nishizeki(const Graph& g, const TriangleVisitor& visit) {
  detail::Stopwatch clock;
  ListingReport r{Algorithm::chiba_nishizeki};
  const std::size_t n = g.num_vertices();

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t p = 0; p < n; ++p) rank[order[p]] = p;

  // Neighbor lists sorted by processing rank. Deleting the processed vertex
  // u then amounts to skipping a prefix, tracked per list by `live_from`.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + g.degree(v);
  std::vector<Vertex> by_rank(offsets[n]);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto first = by_rank.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    std::copy(nb.begin(), nb.end(), first);
    std::sort(first, first + static_cast<std::ptrdiff_t>(nb.size()),
              [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }
  std::vector<std::size_t> live_from(offsets.begin(), offsets.end() - 1);
  auto live_neighbors = [&](Vertex v, std::size_t current) {
    std::size_t& s = live_from[v];
    while (s < offsets[v + 1] && rank[by_rank[s]] < current) ++s;
    return std::span<const Vertex>(by_rank.data() + s, by_rank.data() + offsets[v + 1]);
  };

  std::vector<char> marked(n, 0);
  for (std::size_t p = 0; p + 2 < n; ++p) {
    const Vertex u = order[p];
    auto nu = live_neighbors(u, p);
    for (Vertex v : nu) marked[v] = 1;
    for (Vertex v : nu) {
      for (Vertex w : live_neighbors(v, p)) {
        ++r.probes;
        if (marked[w]) {
          visit(Triangle::canonical(u, v, w));
          ++r.triangles_emitted;
        }
      }
      marked[v] = 0;
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

ListingReport list_itai_rodeh(const Graph& g, const TriangleVisitor& visit) {
  detail::Stopwatch clock;
  ListingReport r{Algorithm::itai_rodeh};
  const std::size_t n = g.num_vertices();
  constexpr Vertex kNone = ~Vertex{0};

  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  std::size_t edges_left = g.num_edges();
  std::vector<Vertex> parent(n);
  std::vector<char> visited(n);
  std::vector<Edge> tree;
  std::vector<Vertex> queue;

  while (edges_left > 0) {
    // BFS spanning forest, roots in increasing id order.
    std::fill(parent.begin(), parent.end(), kNone);
    std::fill(visited.begin(), visited.end(), 0);
    tree.clear();
    for (Vertex root = 0; root < n; ++root) {
      if (visited[root] || adj[root].empty()) continue;
      visited[root] = 1;
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex a = queue[head];
        for (Vertex b : adj[a]) {
          if (visited[b]) continue;
          visited[b] = 1;
          parent[b] = a;
          tree.push_back({std::min(a, b), std::max(a, b)});
          queue.push_back(b);
        }
      }
    }
    auto is_tree = [&](Vertex a, Vertex b) { return parent[a] == b || parent[b] == a; };

    for (const Edge& e : tree) {
      const auto& na = adj[e.u];
      const auto& nb = adj[e.v];
      auto ia = na.begin();
      auto ib = nb.begin();
      while (ia != na.end() && ib != nb.end()) {
        ++r.probes;
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          const Vertex c = *ia;
          ++ia;
          ++ib;
          // Only the lexicographically smallest tree edge of the triangle
          // reports it.
          const Triangle t = Triangle::canonical(e.u, e.v, c);
          const std::array<Edge, 3> sides = {Edge{t.i, t.j}, Edge{t.i, t.k}, Edge{t.j, t.k}};
          for (const Edge& s : sides) {
            if (!is_tree(s.u, s.v)) continue;
            if (s == e) {
              visit(t);
              ++r.triangles_emitted;
            }
            break;
          }
        }
      }
    }

    for (Vertex v = 0; v < n; ++v) {
      std::erase_if(adj[v], [&](Vertex w) { return is_tree(v, w); });
    }
    edges_left -= tree.size();
  }
  r.elapsed = clock.elapsed();
  return r;
}

ListingReport list_matrix(const Graph& g, const TriangleVisitor& visit) {
  const BitMatrix& adj = g.matrix();
  detail::Stopwatch clock;
  ListingReport r{Algorithm::matrix};
  r.matrix_bytes = adj.bytes();
  constexpr std::size_t W = BitMatrix::kWordBits;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex i = 0; i < n; ++i) {
    auto ri = adj.row(i);
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      auto rj = adj.row(j);
      // Common neighbors k > j only.
      const std::size_t first = (std::size_t{j} + 1) / W;
      for (std::size_t w = first; w < ri.size(); ++w) {
        ++r.probes;
        BitMatrix::Word common = ri[w] & rj[w];
        if (w == first) common &= ~BitMatrix::Word{0} << ((std::size_t{j} + 1) % W);
        while (common != 0) {
          const auto k = static_cast<Vertex>(w * W + static_cast<std::size_t>(std::countr_zero(common)));
          common &= common - 1;
          visit({i, j, k});
          ++r.triangles_emitted;
        }
      }
    }
  }
  r.elapsed = clock.elapsed();
  return r;
}

std::uint64_t count_matrix(const Graph& g) {
  const BitMatrix& adj = g.matrix();
  std::uint64_t paths = 0;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex i = 0; i < n; ++i) {
    auto ri = adj.row(i);
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      auto rj = adj.row(j);
      for (std::size_t w = 0; w < ri.size(); ++w) {
        paths += static_cast<std::uint64_t>(std::popcount(ri[w] & rj[w]));
      }
    }
  }
  return paths / 3;
}

std::optional<Triangle> detect_matrix(const Graph& g) {
  const BitMatrix& adj = g.matrix();
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex i = 0; i < n; ++i) {
    auto ri = adj.row(i);
    for (Vertex j : g.neighbors(i)) {
      if (j <= i) continue;
      auto rj = adj.row(j);
      for (std::size_t w = 0; w < ri.size(); ++w) {
        if (const auto common = ri[w] & rj[w]; common != 0) {
          const auto k = static_cast<Vertex>(w * BitMatrix::kWordBits +
                                             static_cast<std::size_t>(std::countr_zero(common)));
          return Triangle::canonical(i, j, k);
        }
      }
    }
  }
  return std::nullopt;
}

ListingReport list_ayz(const Graph& g, std::optional<std::size_t> threshold,
                       const TriangleVisitor& visit, std::size_t matrix_budget) {
  detail::Stopwatch clock;
  ListingReport r{Algorithm::ayz};
  const std::size_t n = g.num_vertices();
  const std::size_t limit = threshold.value_or(detail::ceil_sqrt(g.num_edges()));
  auto low = [&](Vertex v) { return g.degree(v) <= limit; };

  std::vector<Vertex> high;
  for (Vertex v = 0; v < n; ++v) {
    if (!low(v)) {
      high.push_back(v);
      continue;
    }
    auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        ++r.probes;
        const Vertex x = nb[a];
        const Vertex y = nb[b];
        if (!g.has_edge(x, y)) continue;
        // Attributed to the smallest low-degree vertex of the triangle.
        const Triangle t = Triangle::canonical(v, x, y);
        const Vertex owner = low(t.i) ? t.i : (low(t.j) ? t.j : t.k);
        if (owner == v) {
          visit(t);
          ++r.triangles_emitted;
        }
      }
    }
  }

  // Every remaining triangle has three high-degree vertices.
  auto sub = induced_subgraph(g, high);
  const Graph dense = build_matrix(std::move(sub.graph), matrix_budget);
  auto inner = list_matrix(dense, [&](const Triangle& t) {
    visit({sub.mapping[t.i], sub.mapping[t.j], sub.mapping[t.k]});
  });
  r.triangles_emitted += inner.triangles_emitted;
  r.probes += inner.probes;
  r.matrix_bytes = inner.matrix_bytes;
  r.elapsed = clock.elapsed();
  return r;
}

ListingReport run_listing(const Graph& g, Algorithm algo, const TriangleVisitor& visit,
                          std::size_t matrix_budget) {
  auto with_matrix = [&](auto&& fn) {
    if (g.has_matrix()) return fn(g);
    return fn(build_matrix(g, matrix_budget));
  };
  switch (algo) {
    case Algorithm::hybrid:
      return with_matrix([&](const Graph& gm) { return list_hybrid(gm, visit); });
    case Algorithm::matrix:
      return with_matrix([&](const Graph& gm) { return list_matrix(gm, visit); });
    case Algorithm::chiba_nishizeki: return list_chiba_nishizeki(g, visit);
    case Algorithm::itai_rodeh: return list_itai_rodeh(g, visit);
    case Algorithm::ayz: return list_ayz(g, std::nullopt, visit, matrix_budget);
    case Algorithm::brute: return list_brute(g, visit);
    case Algorithm::cliques:
      return list_cliques(g, 3, [&](std::span<const Vertex> c) { visit({c[0], c[1], c[2]}); });
  }
  throw UnknownAlgorithm(std::string(to_string(algo)));
}

std::uint64_t count(const Graph& g, Algorithm algo, std::size_t matrix_budget) {
  if (algo == Algorithm::matrix) {
    return g.has_matrix() ? count_matrix(g) : count_matrix(build_matrix(g, matrix_budget));
  }
  return run_listing(g, algo, [](const Triangle&) {}, matrix_budget).triangles_emitted;
}

std::vector<Triangle> collect(const Graph& g, Algorithm algo, std::size_t matrix_budget) {
  std::vector<Triangle> out;
  run_listing(g, algo, [&](const Triangle& t) { out.push_back(t); }, matrix_budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trigraph

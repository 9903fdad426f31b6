#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "trigraph/graph.hpp"
#include "trigraph/triangles.hpp"

namespace trigraph {

struct IndependentSet {
  std::vector<Vertex> vertices;  // sorted
  std::uint64_t guarantee = 0;   // promised lower bound on vertices.size()
};

struct TriangleFound {
  Triangle triangle;
};

struct IsOrTriangleResult {
  std::variant<IndependentSet, TriangleFound> outcome;
  std::uint64_t probes = 0;  // pairwise adjacency tests

  bool found_triangle() const { return std::holds_alternative<TriangleFound>(outcome); }
};

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

// ceil(n / (2m/n + 1)) computed exactly as ceil(n^2 / (2m + n)).
std::uint64_t turan_bound(std::size_t n, std::size_t m);

// Repeatedly takes a minimum-degree vertex and deletes its closed
// neighborhood. Size is at least turan_bound(n, m).
std::vector<Vertex> greedy_independent_set(const Graph& g);

// Either ceil(2m/n) neighbors of a maximum-degree vertex that are pairwise
// non-adjacent, or a triangle through that vertex.
IsOrTriangleResult is_or_triangle(const Graph& g);

// Independent set of size >= ceil(n / (sqrt(n) + 1)), or a triangle.
IsOrTriangleResult approx_is_or_triangle(const Graph& g);

// Checks either variant against g.
bool validate(const Graph& g, const IsOrTriangleResult& result);

}  // namespace trigraph

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

struct Triangle {
  Vertex i;
  Vertex j;
  Vertex k;

  static Triangle canonical(Vertex a, Vertex b, Vertex c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return {a, b, c};
  }
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// i < j < k and all three edges present.
bool is_valid_triangle(const Graph& g, const Triangle& t);

struct CliqueTuple {
  std::vector<Vertex> vertices;  // strictly increasing
  friend auto operator<=>(const CliqueTuple&, const CliqueTuple&) = default;
};

enum class Algorithm { hybrid, chiba_nishizeki, itai_rodeh, matrix, ayz, brute, cliques };

std::string_view to_string(Algorithm a);
// Accepts the triangle algorithms only; throws UnknownAlgorithm otherwise.
Algorithm parse_algorithm(std::string_view name);
// The six exact triangle algorithms, in a fixed order.
std::span<const Algorithm> triangle_algorithms();

struct ListingReport {
  Algorithm algorithm = Algorithm::brute;
  std::uint64_t triangles_emitted = 0;
  std::chrono::nanoseconds elapsed{0};
  // Unit of work each algorithm counts: hybrid counts (edge, neighbor) probes,
  // the matrix method counts word intersections, the others count inner-loop
  // adjacency inspections.
  std::uint64_t probes = 0;
  std::size_t matrix_bytes = 0;  // largest adjacency matrix the run touched
};

using TriangleVisitor = std::function<void(const Triangle&)>;
using CliqueVisitor = std::function<void(std::span<const Vertex>)>;

// Oracle: tests every triple. Intended for small graphs.
std::vector<Triangle> brute_force_list(const Graph& g);
ListingReport list_brute(const Graph& g, const TriangleVisitor& visit);

// Edge iterator over the lower-degree endpoint with matrix lookups.
// Requires build_matrix().
ListingReport list_hybrid(const Graph& g, const TriangleVisitor& visit);

// Vertex iterator in degree-descending order with neighbor marking.
ListingReport list_chiba_nishizeki(const Graph& g, const TriangleVisitor& visit);

// Repeated spanning forests; triangles on tree edges are listed, then the
// tree edges are removed.
ListingReport list_itai_rodeh(const Graph& g, const TriangleVisitor& visit);

// Bit-row intersection over every edge. Requires build_matrix().
ListingReport list_matrix(const Graph& g, const TriangleVisitor& visit);
std::uint64_t count_matrix(const Graph& g);
std::optional<Triangle> detect_matrix(const Graph& g);

// Low/high degree split. Triangles touching a vertex of degree <= threshold
// come from neighbor-pair scans; the rest from the matrix method on the
// high-degree induced subgraph. Default threshold is ceil(sqrt(m)).
ListingReport list_ayz(const Graph& g, std::optional<std::size_t> threshold,
                       const TriangleVisitor& visit,
                       std::size_t matrix_budget = kDefaultMatrixBudget);

// Every K_ell (3 <= ell <= 8) once, as a sorted tuple.
ListingReport list_cliques(const Graph& g, int ell, const CliqueVisitor& visit);
std::vector<CliqueTuple> collect_cliques(const Graph& g, int ell);

// Runs a triangle algorithm, building the matrix on demand for the ones that
// need it.
ListingReport run_listing(const Graph& g, Algorithm algo, const TriangleVisitor& visit,
                          std::size_t matrix_budget = kDefaultMatrixBudget);
std::uint64_t count(const Graph& g, Algorithm algo,
                    std::size_t matrix_budget = kDefaultMatrixBudget);
// Sorted triangle list produced by `algo`.
std::vector<Triangle> collect(const Graph& g, Algorithm algo,
                              std::size_t matrix_budget = kDefaultMatrixBudget);

}  // namespace trigraph

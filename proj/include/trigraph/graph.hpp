#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trigraph/errors.hpp"

namespace trigraph {

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Largest vertex count for which build_matrix will allocate n*n bits unless
// the caller passes a larger budget.
inline constexpr std::size_t kDefaultMatrixBudget = std::size_t{1} << 17;

// Row-major bit-packed adjacency matrix.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_per_row_; }
  std::size_t bytes() const { return bits_.size() * sizeof(Word); }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_per_row_, words_per_row_};
  }
  bool test(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ + v / kWordBits] >>
            (v % kWordBits)) &
           1U;
  }
  void set(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_per_row_ + v / kWordBits] |= Word{1}
                                                                            << (v % kWordBits);
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> bits_;
};

// Immutable undirected simple graph in CSR form: every adjacency list is
// strictly increasing, symmetric, and loop-free. An adjacency matrix can be
// attached with build_matrix().
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs and both orientations collapse to one edge. Without an
  // explicit n, n = max id + 1 (0 for no edges).
  static Graph from_edge_list(std::optional<std::size_t> n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Matrix lookup when available, binary search otherwise.
  bool has_edge(Vertex u, Vertex v) const;

  bool has_matrix() const { return matrix_.has_value(); }
  const BitMatrix& matrix() const;

  // Canonical edge list: u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend Graph build_matrix(Graph g, std::size_t max_vertices);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::optional<BitMatrix> matrix_;
};

// Returns g with its adjacency matrix populated. Idempotent.
Graph build_matrix(Graph g, std::size_t max_vertices = kDefaultMatrixBudget);

// F(G): sum over edges of the smaller endpoint degree.
std::uint64_t edge_cost_sum(const Graph& g);

struct Degeneracy {
  std::size_t d = 0;
  std::vector<Vertex> order;  // min-degree peeling order
};

// Repeatedly removes a vertex of minimum remaining degree, smallest id first.
Degeneracy degeneracy(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> mapping;  // new id -> original id, increasing
};

// Duplicates in `vertices` are ignored; the result is relabelled in increasing
// original-id order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct GraphStats {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
  std::uint64_t edge_cost_sum = 0;
  std::size_t degeneracy = 0;
  std::vector<Vertex> degeneracy_order;
  std::size_t arboricity_lower = 0;
  std::size_t arboricity_upper = 0;
  std::size_t matrix_word_bits = BitMatrix::kWordBits;
};

GraphStats compute_stats(const Graph& g);

}  // namespace trigraph

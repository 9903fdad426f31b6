#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"
#include "trigraph/triangles.hpp"

namespace trigraph {

struct ApproxParams {
  double delta = 0.25;    // sampling probability is n^-delta, 0 < delta <= 0.25
  double epsilon = 0.5;   // target relative error, 0 < epsilon <= 0.5
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::optional<double> p_override;  // replaces n^-delta when set, in (0, 1]

  // Throws ParamOutOfRange / InvalidProbability.
  void validate() const;
};

struct TrialRecord {
  std::size_t sample_size = 0;        // X = |U|
  std::size_t induced_edges = 0;      // Y
  std::uint64_t induced_triangles = 0;  // Z
  double estimate = 0.0;              // Z / p^3
};

struct ApproxResult {
  double estimate = 0.0;  // mean of the per-trial estimates
  double p_used = 1.0;
  std::vector<TrialRecord> trials;
  std::optional<Triangle> witness;  // original vertex ids
  std::vector<std::string> warnings;
};

// Seed for trial `index` derived from the root seed (splitmix64 finalizer).
std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index);

// p_override, else n^-delta; 1 for n <= 1.
double sampling_probability(std::size_t n, const ApproxParams& params);

// Keeps each vertex independently with probability p.
std::vector<Vertex> sample_vertices(const Graph& g, double p, std::mt19937_64& rng);

ApproxResult approx_count(const Graph& g, const ApproxParams& params,
                          std::size_t matrix_budget = kDefaultMatrixBudget);

// Single-trial sampling rounds until one sample contains a triangle. An empty
// result does not mean the graph is triangle-free.
std::optional<Triangle> detect_via_sampling(const Graph& g, const ApproxParams& params,
                                            std::size_t max_rounds,
                                            std::size_t matrix_budget = kDefaultMatrixBudget);

// Upper bound t p^3 + 6 t m p^5 + 6 t n p^4 on Var[Z].
double variance_bound(double n, double m, double t, double p);

}  // namespace trigraph

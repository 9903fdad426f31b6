#include "trigraph/approx_count.hpp"

#include <cmath>
#include <sstream>

namespace trigraph {
namespace {

struct SampleOutcome {
  TrialRecord record;
  std::optional<Triangle> witness;
};

// Exact count on G[U]: matrix method when it fits, vertex iterator otherwise.
SampleOutcome run_trial(const Graph& g, double p, std::uint64_t seed, std::size_t matrix_budget) {
  std::mt19937_64 rng(seed);
  const auto sample = sample_vertices(g, p, rng);
  auto sub = induced_subgraph(g, sample);

  SampleOutcome out;
  out.record.sample_size = sub.graph.num_vertices();
  out.record.induced_edges = sub.graph.num_edges();
  std::optional<Triangle> local;
  if (sub.graph.num_vertices() <= matrix_budget) {
    const Graph dense = build_matrix(std::move(sub.graph), matrix_budget);
    out.record.induced_triangles = count_matrix(dense);
    if (out.record.induced_triangles > 0) local = detect_matrix(dense);
  } else {
    out.record.induced_triangles =
        list_chiba_nishizeki(sub.graph, [&](const Triangle& t) {
          if (!local) local = t;
        }).triangles_emitted;
  }
  if (local) {
    out.witness = Triangle::canonical(sub.mapping[local->i], sub.mapping[local->j],
                                      sub.mapping[local->k]);
  }
  out.record.estimate = static_cast<double>(out.record.induced_triangles) / (p * p * p);
  return out;
}

}  // namespace

void ApproxParams::validate() const {
  if (!(delta > 0.0 && delta <= 0.25)) {
    throw ParamOutOfRange("delta must lie in (0, 0.25], got " + std::to_string(delta));
  }
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw ParamOutOfRange("epsilon must lie in (0, 0.5], got " + std::to_string(epsilon));
  }
  if (trials < 1) throw ParamOutOfRange("trials must be at least 1");
  if (p_override && !(*p_override > 0.0 && *p_override <= 1.0)) {
    throw InvalidProbability(*p_override);
  }
}

std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double sampling_probability(std::size_t n, const ApproxParams& params) {
  if (params.p_override) return *params.p_override;
  if (n <= 1) return 1.0;
  return std::pow(static_cast<double>(n), -params.delta);
}

std::vector<Vertex> sample_vertices(const Graph& g, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability(p);
  std::bernoulli_distribution keep(p);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep(rng)) out.push_back(v);
  }
  return out;
}

ApproxResult approx_count(const Graph& g, const ApproxParams& params, std::size_t matrix_budget) {
  params.validate();
  ApproxResult result;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const double p = sampling_probability(n, params);
  result.p_used = p;

  double sum = 0.0;
  for (std::size_t t = 0; t < params.trials; ++t) {
    auto outcome = run_trial(g, p, trial_seed(params.seed, t), matrix_budget);
    sum += outcome.record.estimate;
    if (!result.witness && outcome.witness) result.witness = outcome.witness;
    result.trials.push_back(outcome.record);
  }
  result.estimate = sum / static_cast<double>(params.trials);

  // The accuracy guarantee needs m = Omega(n^(1 + 3.82 delta)) and
  // t = Omega(m^(1 + delta)); only flagged, never enforced.
  if (!params.p_override && n > 1) {
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    const double edge_floor = std::pow(dn, 1.0 + 3.82 * params.delta);
    if (dm < edge_floor) {
      std::ostringstream msg;
      msg << "m=" << m << " below n^(1+3.82*delta)=" << edge_floor
          << "; accuracy guarantee does not apply";
      result.warnings.push_back(msg.str());
    }
    const double triangle_floor = std::pow(dm, 1.0 + params.delta);
    if (m > 0 && result.estimate < triangle_floor) {
      std::ostringstream msg;
      msg << "estimated t=" << result.estimate << " below m^(1+delta)=" << triangle_floor
          << "; accuracy guarantee does not apply";
      result.warnings.push_back(msg.str());
    }
  }
  return result;
}

std::optional<Triangle> detect_via_sampling(const Graph& g, const ApproxParams& params,
                                            std::size_t max_rounds, std::size_t matrix_budget) {
  params.validate();
  if (max_rounds < 1) throw ParamOutOfRange("max_rounds must be at least 1");
  const double p = sampling_probability(g.num_vertices(), params);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    auto outcome = run_trial(g, p, trial_seed(params.seed, round), matrix_budget);
    if (outcome.witness) return outcome.witness;
  }
  return std::nullopt;
}

double variance_bound(double n, double m, double t, double p) {
  return t * p * p * p + 6.0 * t * m * std::pow(p, 5) + 6.0 * t * n * std::pow(p, 4);
}

}  // namespace trigraph

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trigraph/graph.hpp"

namespace trigraph {

enum class Family { clique_plus, layered_cliques, gnm, gnp };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);  // throws ParamOutOfRange

// Closed-form exact counts for a generated instance.
struct Certificate {
  std::uint64_t triangles = 0;
  std::map<int, std::uint64_t> cliques;  // ell -> number of K_ell
  std::string derivation;               // which closed form produced the counts
  std::optional<std::uint64_t> arboricity_upper;
};

struct GeneratedInstance {
  Graph graph;
  Family family = Family::gnm;
  nlohmann::json params = nlohmann::json::object();
  std::optional<Certificate> certificate;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// K_x on {0..x-1} with x = floor(sqrt(2m)), vertices x..n-1 independent, and
// the remaining m - C(x,2) edges joined lexicographically from the first
// independent vertex to the clique. Requires n >= 3 and 3 <= m <= C(n,2).
GeneratedInstance gen_clique_plus(std::size_t n, std::size_t m);

// k disjoint K_b blocks plus b/2 independent vertices joined to every block
// vertex. Requires k >= 1 and even b >= 2. Certificate covers ell = 3..8.
GeneratedInstance gen_layered_cliques(std::size_t k, std::size_t b);

// Uniform graph with exactly m edges.
GeneratedInstance gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

// Each pair present independently with probability p.
GeneratedInstance gen_gnp(std::size_t n, double p, std::uint64_t seed);

// Dispatches on family with parameters read from a JSON object
// (clique_plus: n, m; layered_cliques: k, b; gnm: n, m, seed; gnp: n, p, seed).
GeneratedInstance generate(Family family, const nlohmann::json& params);

// Sidecar record: family, params, n, m, counts, arboricity_upper.
nlohmann::json certificate_record(const GeneratedInstance& inst);

}  // namespace trigraph

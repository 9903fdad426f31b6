#include "trigraph/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "detail.hpp"

namespace trigraph {
namespace {

std::uint64_t pairs(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Row-major rank of pair (u, v), u < v, among all pairs of n vertices.
Edge unrank_pair(std::uint64_t rank, std::uint64_t n) {
  // Row u holds n-1-u pairs and starts at u*n - u*(u+1)/2.
  auto row_start = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
  // Invert approximately, then correct.
  const double nn = static_cast<double>(n);
  const double disc = (2.0 * nn - 1.0) * (2.0 * nn - 1.0) - 8.0 * static_cast<double>(rank);
  auto u = static_cast<std::uint64_t>(std::max(0.0, ((2.0 * nn - 1.0) - std::sqrt(std::max(0.0, disc))) / 2.0));
  while (u > 0 && row_start(u) > rank) --u;
  while (u + 1 < n && row_start(u + 1) <= rank) ++u;
  const std::uint64_t v = u + 1 + (rank - row_start(u));
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::uint64_t get_uint(const nlohmann::json& params, const char* key) {
  if (!params.contains(key)) throw ParamOutOfRange(std::string("missing parameter '") + key + "'");
  const auto& v = params.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParamOutOfRange(std::string("parameter '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::clique_plus: return "clique_plus";
    case Family::layered_cliques: return "layered_cliques";
    case Family::gnm: return "gnm";
    case Family::gnp: return "gnp";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::clique_plus, Family::layered_cliques, Family::gnm, Family::gnp}) {
    if (to_string(f) == name) return f;
  }
  throw ParamOutOfRange("unknown family '" + std::string(name) + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

GeneratedInstance gen_clique_plus(std::size_t n, std::size_t m) {
  if (n < 3 || m < 3 || m > pairs(n)) {
    throw ParamOutOfRange("clique_plus needs n >= 3 and 3 <= m <= C(n,2)");
  }
  const auto x = static_cast<Vertex>(detail::floor_sqrt(2 * std::uint64_t{m}));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (Vertex a = 0; a < x; ++a) {
    for (Vertex b = a + 1; b < x; ++b) edges.push_back({a, b});
  }
  std::uint64_t surplus = m - pairs(x);
  Certificate cert;
  cert.triangles = binomial(x, 3);
  for (auto u = static_cast<Vertex>(x); surplus > 0 && u < n; ++u) {
    const auto cross = static_cast<Vertex>(std::min<std::uint64_t>(x, surplus));
    for (Vertex c = 0; c < cross; ++c) edges.push_back({c, u});
    cert.triangles += binomial(cross, 2);
    surplus -= cross;
  }
  cert.derivation = "clique_plus: C(x,3) + sum over independent vertices of C(cross_deg,2)";

  GeneratedInstance inst;
  inst.graph = Graph::from_edge_list(n, edges);
  inst.family = Family::clique_plus;
  inst.params = {{"n", n}, {"m", m}, {"x", x}};
  inst.certificate = std::move(cert);
  return inst;
}

GeneratedInstance gen_layered_cliques(std::size_t k, std::size_t b) {
  if (k < 1 || b < 2 || b % 2 != 0) {
    throw ParamOutOfRange("layered_cliques needs k >= 1 and even b >= 2");
  }
  const std::size_t half = b / 2;
  const std::size_t block_vertices = k * b;
  std::vector<Edge> edges;
  for (std::size_t blk = 0; blk < k; ++blk) {
    const auto base = static_cast<Vertex>(blk * b);
    for (Vertex a = 0; a < b; ++a) {
      for (Vertex c = a + 1; c < b; ++c) edges.push_back({base + a, base + c});
    }
  }
  for (std::size_t s = 0; s < half; ++s) {
    for (std::size_t v = 0; v < block_vertices; ++v) {
      edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(block_vertices + s)});
    }
  }

  Certificate cert;
  for (int ell = 3; ell <= 8; ++ell) {
    cert.cliques[ell] = k * binomial(b, ell) + k * binomial(b, ell - 1) * half;
  }
  cert.triangles = cert.cliques[3];
  cert.derivation = "layered_cliques: k*C(b,l) + k*C(b,l-1)*(b/2)";
  cert.arboricity_upper = b;

  GeneratedInstance inst;
  inst.graph = Graph::from_edge_list(block_vertices + half, edges);
  inst.family = Family::layered_cliques;
  inst.params = {{"k", k}, {"b", b}};
  inst.certificate = std::move(cert);
  return inst;
}

GeneratedInstance gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = pairs(n);
  if (m > total) throw ParamOutOfRange("gnm needs m <= C(n,2)");
  // Floyd's sampling of m distinct ranks from [0, total).
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(m * 2);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    std::uint64_t r = pick(rng);
    if (!picked.insert(r).second) {
      r = j;
      picked.insert(r);
    }
    edges.push_back(unrank_pair(r, n));
  }
  GeneratedInstance inst;
  inst.graph = Graph::from_edge_list(n, edges);
  inst.family = Family::gnm;
  inst.params = {{"n", n}, {"m", m}, {"seed", seed}};
  return inst;
}

GeneratedInstance gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParamOutOfRange("gnp needs p in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  GeneratedInstance inst;
  inst.graph = Graph::from_edge_list(n, edges);
  inst.family = Family::gnp;
  inst.params = {{"n", n}, {"p", p}, {"seed", seed}};
  return inst;
}

GeneratedInstance generate(Family family, const nlohmann::json& params) {
  switch (family) {
    case Family::clique_plus:
      return gen_clique_plus(get_uint(params, "n"), get_uint(params, "m"));
    case Family::layered_cliques:
      return gen_layered_cliques(get_uint(params, "k"), get_uint(params, "b"));
    case Family::gnm:
      return gen_random(get_uint(params, "n"), get_uint(params, "m"),
                        params.contains("seed") ? get_uint(params, "seed") : 0);
    case Family::gnp: {
      if (!params.contains("p") || !params.at("p").is_number()) {
        throw ParamOutOfRange("missing numeric parameter 'p'");
      }
      return gen_gnp(get_uint(params, "n"), params.at("p").get<double>(),
                     params.contains("seed") ? get_uint(params, "seed") : 0);
    }
  }
  throw ParamOutOfRange("unknown family");
}

nlohmann::json certificate_record(const GeneratedInstance& inst) {
  nlohmann::json rec;
  rec["family"] = to_string(inst.family);
  rec["params"] = inst.params;
  rec["n"] = inst.graph.num_vertices();
  rec["m"] = inst.graph.num_edges();
  if (inst.certificate) {
    nlohmann::json counts;
    counts["triangles"] = inst.certificate->triangles;
    for (const auto& [ell, c] : inst.certificate->cliques) counts["K" + std::to_string(ell)] = c;
    rec["counts"] = counts;
    rec["derivation"] = inst.certificate->derivation;
    rec["arboricity_upper"] = inst.certificate->arboricity_upper
                                  ? nlohmann::json(*inst.certificate->arboricity_upper)
                                  : nlohmann::json(nullptr);
  } else {
    rec["counts"] = nullptr;
    rec["arboricity_upper"] = nullptr;
  }
  return rec;
}

}  // namespace trigraph

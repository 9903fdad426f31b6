#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigraph/generators.hpp"
#include "trigraph/triangles.hpp"

namespace trigraph::bench {

struct Instance {
  Family family;
  nlohmann::json params;
};

struct Suite {
  std::vector<Instance> instances;
  std::vector<Algorithm> algorithms;
  std::size_t matrix_budget = kDefaultMatrixBudget;
};

struct Record {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algorithm = Algorithm::hybrid;
  std::uint64_t triangles = 0;
  std::int64_t nanos = 0;
  std::uint64_t probes = 0;
  std::size_t matrix_bytes = 0;
  std::uint64_t edge_cost_sum = 0;  // F(G)
  double edge_cost_bound = 0.0;     // 4 m^{3/2}
};

// Suite document:
//   {"algorithms": ["hybrid", ...],           // default: all but brute
//    "instances": [{"family": "...", "params": {...}}, ...],
//    "ladders": [{"family": "clique_plus", "param": "n", "values": [500, 1000],
//                 "params": {...}, "powers": {"m": 1.5}}]}
// A ladder expands to one instance per value; each "powers" entry sets that
// parameter to floor(value^power).
Suite parse_suite(const nlohmann::json& doc);

// One record per instance x algorithm, in suite order. Throws Error when the
// algorithms disagree on an instance's triangle count.
std::vector<Record> run(const Suite& suite);

inline constexpr const char* kCsvHeader = "family,n,m,algorithm,triangles,nanos,probes,matrix_bytes";
void write_csv(std::ostream& out, const std::vector<Record>& records);
nlohmann::json to_json(const std::vector<Record>& records);

}  // namespace trigraph::bench

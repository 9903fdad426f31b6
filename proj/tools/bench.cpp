#include "bench.hpp"

#include <cmath>
#include <ostream>

namespace trigraph::bench {

Suite parse_suite(const nlohmann::json& doc) {
  Suite suite;
  if (doc.contains("algorithms")) {
    for (const auto& a : doc.at("algorithms")) suite.algorithms.push_back(parse_algorithm(a.get<std::string>()));
  } else {
    for (Algorithm a : triangle_algorithms()) {
      if (a != Algorithm::brute) suite.algorithms.push_back(a);
    }
  }
  if (doc.contains("instances")) {
    for (const auto& inst : doc.at("instances")) {
      suite.instances.push_back(
          {parse_family(inst.at("family").get<std::string>()), inst.value("params", nlohmann::json::object())});
    }
  }
  if (doc.contains("ladders")) {
    for (const auto& ladder : doc.at("ladders")) {
      const Family family = parse_family(ladder.at("family").get<std::string>());
      const auto key = ladder.at("param").get<std::string>();
      for (const auto& value : ladder.at("values")) {
        nlohmann::json params = ladder.value("params", nlohmann::json::object());
        params[key] = value;
        if (ladder.contains("powers")) {
          for (const auto& [name, power] : ladder.at("powers").items()) {
            params[name] = static_cast<std::uint64_t>(
                std::floor(std::pow(value.get<double>(), power.get<double>())));
          }
        }
        suite.instances.push_back({family, std::move(params)});
      }
    }
  }
  if (doc.contains("matrix_budget")) suite.matrix_budget = doc.at("matrix_budget").get<std::size_t>();
  return suite;
}

std::vector<Record> run(const Suite& suite) {
  std::vector<Record> records;
  for (const auto& inst : suite.instances) {
    const auto generated = generate(inst.family, inst.params);
    const Graph& g = generated.graph;
    const std::uint64_t f = edge_cost_sum(g);
    const double bound = 4.0 * std::pow(static_cast<double>(g.num_edges()), 1.5);
    const std::size_t first = records.size();
    for (Algorithm algo : suite.algorithms) {
      const auto report = run_listing(g, algo, [](const Triangle&) {}, suite.matrix_budget);
      Record rec;
      rec.family = std::string(to_string(inst.family));
      rec.n = g.num_vertices();
      rec.m = g.num_edges();
      rec.algorithm = algo;
      rec.triangles = report.triangles_emitted;
      rec.nanos = report.elapsed.count();
      rec.probes = report.probes;
      rec.matrix_bytes = report.matrix_bytes;
      rec.edge_cost_sum = f;
      rec.edge_cost_bound = bound;
      if (records.size() > first && records[first].triangles != rec.triangles) {
        throw Error("bench: " + std::string(to_string(algo)) + " counted " +
                    std::to_string(rec.triangles) + " triangles, " +
                    std::string(to_string(records[first].algorithm)) + " counted " +
                    std::to_string(records[first].triangles));
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << to_string(r.algorithm) << ','
        << r.triangles << ',' << r.nanos << ',' << r.probes << ',' << r.matrix_bytes << '\n';
  }
}

nlohmann::json to_json(const std::vector<Record>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"family", r.family},
                   {"n", r.n},
                   {"m", r.m},
                   {"algorithm", to_string(r.algorithm)},
                   {"triangles", r.triangles},
                   {"nanos", r.nanos},
                   {"probes", r.probes},
                   {"matrix_bytes", r.matrix_bytes},
                   {"edge_cost_sum", r.edge_cost_sum},
                   {"edge_cost_bound", r.edge_cost_bound}});
  }
  return arr;
}

}  // namespace trigraph::bench

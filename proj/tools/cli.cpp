#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bench.hpp"
#include "trigraph/approx_count.hpp"
#include "trigraph/edge_list_io.hpp"
#include "trigraph/generators.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/independent_set.hpp"
#include "trigraph/triangles.hpp"

namespace trigraph::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string in;
  std::string out;
  std::string family;
  std::vector<std::string> params;
  std::string algo = "hybrid";
  std::vector<std::string> algos;
  std::string method = "matrix";
  std::string suite;
  bool json = false;
  bool sorted = false;
  bool count_only = false;
  bool approx = false;
  std::uint64_t seed = 0;
  std::size_t matrix_budget = kDefaultMatrixBudget;
  std::size_t threshold = 0;
  bool threshold_set = false;
  double delta = 0.25;
  double epsilon = 0.5;
  std::size_t trials = 1;
  double p = 1.0;
  std::size_t rounds = 1;
  int ell = 4;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "k=3,b=4" (possibly spread over several tokens) -> {"k": 3, "b": 4}.
json parse_params(const std::vector<std::string>& tokens) {
  json params = json::object();
  for (const auto& token : tokens) {
    for (const auto& kv : split(token, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("malformed parameter '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      std::uint64_t as_int = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), as_int);
      if (ec == std::errc{} && ptr == value.data() + value.size()) {
        params[key] = as_int;
        continue;
      }
      try {
        std::size_t used = 0;
        const double as_double = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        params[key] = as_double;
      } catch (const std::logic_error&) {
        throw UsageError("parameter '" + key + "' is not a number");
      }
    }
  }
  return params;
}

struct Loaded {
  Graph graph;
  std::optional<Certificate> certificate;
  std::string family = "file";
};

std::optional<Certificate> read_sidecar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json rec;
  try {
    rec = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
  if (!rec.contains("counts") || rec["counts"].is_null()) return std::nullopt;
  Certificate cert;
  cert.triangles = rec["counts"].at("triangles").get<std::uint64_t>();
  for (int ell = 3; ell <= 8; ++ell) {
    const std::string key = "K" + std::to_string(ell);
    if (rec["counts"].contains(key)) cert.cliques[ell] = rec["counts"][key].get<std::uint64_t>();
  }
  cert.derivation = rec.value("derivation", "");
  return cert;
}

Loaded load(const Options& o) {
  Loaded l;
  if (!o.in.empty()) {
    l.graph = read_edge_list(std::filesystem::path(o.in));
    l.certificate = read_sidecar(o.in + ".cert.json");
    return l;
  }
  if (!o.family.empty()) {
    const Family family = parse_family(o.family);
    json params = parse_params(o.params);
    if ((family == Family::gnm || family == Family::gnp) && !params.contains("seed")) params["seed"] = o.seed;
    auto inst = generate(family, params);
    l.graph = std::move(inst.graph);
    l.certificate = std::move(inst.certificate);
    l.family = std::string(to_string(family));
    return l;
  }
  throw UsageError("an input graph is required: pass --in <path> or --family/--params");
}

json triangle_json(const std::optional<Triangle>& t) {
  if (!t) return nullptr;
  return json::array({t->i, t->j, t->k});
}

void print_triangle(std::ostream& out, const std::optional<Triangle>& t) {
  if (t) {
    out << "TRIANGLE: " << t->i << ' ' << t->j << ' ' << t->k << '\n';
  } else {
    out << "NONE\n";
  }
}

ListingReport do_listing(const Graph& g, Algorithm algo, const TriangleVisitor& visit,
                         const Options& o) {
  if (algo == Algorithm::ayz && o.threshold_set) return list_ayz(g, o.threshold, visit, o.matrix_budget);
  return run_listing(g, algo, visit, o.matrix_budget);
}

int cmd_stats(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto s = compute_stats(l.graph);
  const double bound = 4.0 * std::pow(static_cast<double>(l.graph.num_edges()), 1.5);
  json rec = {{"n", l.graph.num_vertices()},
              {"m", l.graph.num_edges()},
              {"max_degree", s.max_degree},
              {"avg_degree", s.avg_degree},
              {"edge_cost_sum", s.edge_cost_sum},
              {"edge_cost_bound", bound},
              {"degeneracy", s.degeneracy},
              {"arboricity_lower", s.arboricity_lower},
              {"arboricity_upper", s.arboricity_upper},
              {"matrix_word_bits", s.matrix_word_bits}};
  if (o.json) {
    out << rec.dump() << '\n';
  } else {
    for (const auto& [key, value] : rec.items()) out << key << ": " << value.dump() << '\n';
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Algorithm algo = parse_algorithm(o.algo);
  const auto l = load(o);
  if (!o.json) {
    out << (algo == Algorithm::ayz ? do_listing(l.graph, algo, [](const Triangle&) {}, o).triangles_emitted
                                   : count(l.graph, algo, o.matrix_budget))
        << '\n';
    return kOk;
  }
  const auto r = do_listing(l.graph, algo, [](const Triangle&) {}, o);
  out << json{{"algorithm", to_string(algo)},
              {"triangles", r.triangles_emitted},
              {"nanos", r.elapsed.count()},
              {"probes", r.probes}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  const Algorithm algo = parse_algorithm(o.algo);
  const auto l = load(o);
  if (o.count_only) {
    out << do_listing(l.graph, algo, [](const Triangle&) {}, o).triangles_emitted << '\n';
    return kOk;
  }
  if (o.sorted) {
    std::vector<Triangle> all;
    do_listing(l.graph, algo, [&](const Triangle& t) { all.push_back(t); }, o);
    std::sort(all.begin(), all.end());
    for (const auto& t : all) out << t.i << ' ' << t.j << ' ' << t.k << '\n';
    return kOk;
  }
  do_listing(l.graph, algo, [&](const Triangle& t) { out << t.i << ' ' << t.j << ' ' << t.k << '\n'; }, o);
  return kOk;
}

int cmd_cliques(const Options& o, std::ostream& out) {
  if (o.ell < 3 || o.ell > 8) throw EllOutOfRange(o.ell);
  const auto l = load(o);
  if (o.count_only) {
    out << list_cliques(l.graph, o.ell, [](std::span<const Vertex>) {}).triangles_emitted << '\n';
    return kOk;
  }
  for (const auto& c : collect_cliques(l.graph, o.ell)) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? " " : "") << c.vertices[i];
    out << '\n';
  }
  return kOk;
}

ApproxParams approx_params(const Options& o, bool p_given) {
  ApproxParams params;
  params.delta = o.delta;
  params.epsilon = o.epsilon;
  params.seed = o.seed;
  params.trials = o.trials;
  if (p_given) params.p_override = o.p;
  params.validate();
  return params;
}

int cmd_detect(const Options& o, bool p_given, std::ostream& out) {
  if (o.method != "matrix" && o.method != "sampling") {
    throw UsageError("--method must be 'matrix' or 'sampling'");
  }
  const auto params = approx_params(o, p_given);
  const auto l = load(o);
  std::optional<Triangle> found;
  if (o.method == "sampling") {
    found = detect_via_sampling(l.graph, params, o.rounds, o.matrix_budget);
  } else if (l.graph.num_vertices() <= o.matrix_budget) {
    found = detect_matrix(build_matrix(l.graph, o.matrix_budget));
  } else {
    list_chiba_nishizeki(l.graph, [&](const Triangle& t) {
      if (!found) found = t;
    });
  }
  if (o.json) {
    out << json{{"method", o.method}, {"triangle", triangle_json(found)}}.dump() << '\n';
  } else {
    print_triangle(out, found);
  }
  return kOk;
}

int cmd_approx(const Options& o, bool p_given, std::ostream& out) {
  const auto params = approx_params(o, p_given);
  const auto l = load(o);
  const auto r = approx_count(l.graph, params, o.matrix_budget);
  json per_trial = json::array();
  for (const auto& t : r.trials) {
    per_trial.push_back({{"X", t.sample_size}, {"Y", t.induced_edges}, {"Z", t.induced_triangles}});
  }
  out << json{{"estimate", r.estimate},
              {"trials", params.trials},
              {"p", r.p_used},
              {"per_trial", per_trial},
              {"witness", triangle_json(r.witness)},
              {"seed", params.seed},
              {"warnings", r.warnings}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_is_or_triangle(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto r = o.approx ? approx_is_or_triangle(l.graph) : is_or_triangle(l.graph);
  if (const auto* s = std::get_if<IndependentSet>(&r.outcome)) {
    if (o.json) {
      out << json{{"kind", "independent_set"},
                  {"size", s->vertices.size()},
                  {"guarantee", s->guarantee},
                  {"vertices", s->vertices},
                  {"probes", r.probes}}
                 .dump()
          << '\n';
    } else {
      out << "IS " << s->vertices.size() << ':';
      for (Vertex v : s->vertices) out << ' ' << v;
      out << '\n';
    }
  } else {
    const auto& t = std::get<TriangleFound>(r.outcome).triangle;
    if (o.json) {
      out << json{{"kind", "triangle"}, {"triangle", triangle_json(t)}, {"probes", r.probes}}.dump()
          << '\n';
    } else {
      print_triangle(out, t);
    }
  }
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Family family = parse_family(o.family);
  json params = parse_params(o.params);
  if ((family == Family::gnm || family == Family::gnp) && !params.contains("seed")) params["seed"] = o.seed;
  const auto inst = generate(family, params);
  if (o.out.empty()) {
    write_edge_list(out, inst.graph);
    return kOk;
  }
  write_edge_list(std::filesystem::path(o.out), inst.graph);
  const std::string sidecar = o.out + ".cert.json";
  std::ofstream cert(sidecar);
  if (!cert) throw Error("cannot write " + sidecar);
  cert << certificate_record(inst).dump(2) << '\n';
  out << "wrote " << o.out << " (n=" << inst.graph.num_vertices() << ", m=" << inst.graph.num_edges()
      << ") and " << sidecar << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const Graph& g = l.graph;
  const bool matrix_fits = g.num_vertices() <= o.matrix_budget;
  bool ok = true;
  auto report = [&](bool pass, const std::string& what) {
    out << (pass ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };

  std::optional<std::vector<Triangle>> reference;
  std::string reference_name;
  if (g.num_vertices() <= 500) {
    reference = brute_force_list(g);
    reference_name = "brute";
    out << "ok   brute " << reference->size() << '\n';
  }
  for (Algorithm algo : triangle_algorithms()) {
    if (algo == Algorithm::brute) continue;
    if ((algo == Algorithm::hybrid || algo == Algorithm::matrix) && !matrix_fits) {
      out << "skip " << to_string(algo) << " (n above matrix budget)\n";
      continue;
    }
    auto got = collect(g, algo, o.matrix_budget);
    if (!reference) {
      reference = std::move(got);
      reference_name = std::string(to_string(algo));
      out << "ok   " << reference_name << ' ' << reference->size() << '\n';
      continue;
    }
    report(got == *reference, std::string(to_string(algo)) + ' ' + std::to_string(got.size()) +
                                  (got == *reference ? "" : " (differs from " + reference_name + ")"));
  }
  if (matrix_fits) {
    const auto c = count_matrix(build_matrix(g, o.matrix_budget));
    report(c == reference->size(), "count_matrix " + std::to_string(c));
  }
  if (l.certificate) {
    report(l.certificate->triangles == reference->size(),
           "certificate triangles " + std::to_string(l.certificate->triangles));
    for (const auto& [ell, expected] : l.certificate->cliques) {
      const auto got = list_cliques(g, ell, [](std::span<const Vertex>) {}).triangles_emitted;
      report(got == expected, "certificate K" + std::to_string(ell) + ' ' + std::to_string(expected) +
                                  (got == expected ? "" : " (listed " + std::to_string(got) + ")"));
    }
  }
  out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerifyFailed;
}

int cmd_bench(const Options& o, std::ostream& out) {
  bench::Suite suite;
  if (!o.suite.empty()) {
    std::ifstream in(o.suite);
    if (!in) throw Error("cannot open " + o.suite);
    try {
      suite = bench::parse_suite(json::parse(in));
    } catch (const json::exception& e) {
      throw UsageError(o.suite + ": " + e.what());
    }
  } else if (!o.family.empty()) {
    json params = parse_params(o.params);
    const Family family = parse_family(o.family);
    if ((family == Family::gnm || family == Family::gnp) && !params.contains("seed")) params["seed"] = o.seed;
    suite.instances.push_back({family, params});
  }
  if (!o.algos.empty()) {
    suite.algorithms.clear();
    for (const auto& token : o.algos) {
      for (const auto& name : split(token, ',')) suite.algorithms.push_back(parse_algorithm(name));
    }
  } else if (o.suite.empty()) {
    for (Algorithm a : triangle_algorithms()) {
      if (a != Algorithm::brute) suite.algorithms.push_back(a);
    }
  }
  suite.matrix_budget = o.matrix_budget;
  const auto records = bench::run(suite);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw Error("cannot write " + o.out);
  }
  std::ostream& sink = o.out.empty() ? out : file;
  if (o.json) {
    sink << bench::to_json(records).dump(2) << '\n';
  } else {
    bench::write_csv(sink, records);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle detection, counting, listing and related graph tools"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Edge-list file");
    sub->add_option("--family", o.family, "Generate the input instead: clique_plus, layered_cliques, gnm, gnp");
    sub->add_option("--params", o.params, "Generator parameters, e.g. k=3,b=4");
    sub->add_option("--matrix-budget", o.matrix_budget, "Largest n for which an adjacency matrix is built");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_flag("--json", o.json, "Structured output");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "Sampling exponent, p = n^-delta");
    sub->add_option("--epsilon", o.epsilon, "Target relative error");
    sub->add_option("--trials", o.trials, "Independent trials to average");
    return sub->add_option("--p", o.p, "Sampling probability override");
  };

  auto* stats = app.add_subcommand("stats", "Degrees, F(G), degeneracy, arboricity interval");
  add_input(stats);

  auto* count_cmd = app.add_subcommand("count", "Exact triangle count");
  add_input(count_cmd);
  count_cmd->add_option("--algo", o.algo, "hybrid, chiba_nishizeki, itai_rodeh, matrix, ayz, brute");
  auto* count_threshold = count_cmd->add_option("--threshold", o.threshold, "ayz low/high degree split");

  auto* list = app.add_subcommand("list", "List triangles as 'i j k' lines");
  add_input(list);
  list->add_option("--algo", o.algo, "Listing algorithm");
  auto* list_threshold = list->add_option("--threshold", o.threshold, "ayz low/high degree split");
  list->add_flag("--sorted", o.sorted, "Collect and sort before printing");
  list->add_flag("--count-only", o.count_only, "Print only the number of triangles");

  auto* cliques = app.add_subcommand("cliques", "List copies of K_ell");
  add_input(cliques);
  cliques->add_option("--ell", o.ell, "Clique size, 3..8");
  cliques->add_flag("--count-only", o.count_only, "Print only the count");

  auto* detect = app.add_subcommand("detect", "Find one triangle");
  add_input(detect);
  detect->add_option("--method", o.method, "matrix or sampling");
  detect->add_option("--rounds", o.rounds, "Sampling rounds");
  auto* detect_p = add_sampling(detect);

  auto* approx = app.add_subcommand("approx", "Sampling estimate of the triangle count (JSON)");
  add_input(approx);
  auto* approx_p = add_sampling(approx);

  auto* dichotomy = app.add_subcommand("is-or-triangle", "Independent set or triangle");
  add_input(dichotomy);
  dichotomy->add_flag("--approx", o.approx, "sqrt(n) variant: approximate maximum independent set or triangle");

  auto* gen = app.add_subcommand("generate", "Write a generated instance and its certificate");
  gen->add_option("--family", o.family, "clique_plus, layered_cliques, gnm, gnp")->required();
  gen->add_option("--params", o.params, "Family parameters, e.g. n=10,m=21");
  gen->add_option("--out", o.out, "Edge-list path; certificate goes to <path>.cert.json");
  gen->add_option("--seed", o.seed, "Seed for random families");

  auto* verify = app.add_subcommand("verify", "Cross-check every exact algorithm");
  add_input(verify);

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark table (CSV or JSON)");
  bench_cmd->add_option("--suite", o.suite, "Suite JSON file");
  bench_cmd->add_option("--family", o.family, "Single-instance family");
  bench_cmd->add_option("--params", o.params, "Single-instance parameters");
  bench_cmd->add_option("--algos", o.algos, "Comma-separated algorithms");
  bench_cmd->add_option("--out", o.out, "Output file");
  bench_cmd->add_option("--seed", o.seed, "Seed for random families");
  bench_cmd->add_option("--matrix-budget", o.matrix_budget, "Largest n for which an adjacency matrix is built");
  bench_cmd->add_flag("--json", o.json, "JSON records instead of CSV");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("trigraph");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  o.threshold_set = count_threshold->count() > 0 || list_threshold->count() > 0;

  try {
    if (stats->parsed()) return cmd_stats(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (list->parsed()) return cmd_list(o, out);
    if (cliques->parsed()) return cmd_cliques(o, out);
    if (detect->parsed()) return cmd_detect(o, detect_p->count() > 0, out);
    if (approx->parsed()) return cmd_approx(o, approx_p->count() > 0, out);
    if (dichotomy->parsed()) return cmd_is_or_triangle(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bench_cmd->parsed()) return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnknownAlgorithm& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const EllOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParamOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidProbability& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const MatrixTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace trigraph::cli

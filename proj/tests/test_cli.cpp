#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bench.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using trigraph::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("trigraph_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("count on K4") {
  TempDir dir;
  const auto path = dir.file("k4.txt");
  write_file(path, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  for (const char* algo : {"hybrid", "chiba_nishizeki", "itai_rodeh", "matrix", "ayz", "brute"}) {
    const auto r = call({"count", "--in", path, "--algo", algo});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
  }
  const auto j = call({"count", "--in", path, "--json"});
  const auto rec = nlohmann::json::parse(j.out);
  CHECK(rec.at("triangles") == 4);
  CHECK(rec.at("algorithm") == "hybrid");
  CHECK(rec.at("probes") == 18);
}

TEST_CASE("unknown algorithm is a usage error") {
  const auto r = call({"count", "--family", "layered_cliques", "--params", "k=3,b=4", "--algo", "nosuch"});
  CHECK(r.code == trigraph::cli::kUsageError);
  CHECK(r.err.find("nosuch") != std::string::npos);
}

TEST_CASE("verify passes on G(64, 512) seed 7") {
  const auto r = call({"verify", "--family", "gnm", "--params", "n=64,m=512,seed=7"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "verify: PASS");
}

TEST_CASE("verify checks the certificate of a layered instance") {
  const auto r = call({"verify", "--family", "layered_cliques", "--params", "k=3,b=4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificate triangles 48") != std::string::npos);
  CHECK(r.out.find("certificate K4 27") != std::string::npos);
}

TEST_CASE("verify fails on a wrong sidecar") {
  TempDir dir;
  const auto path = dir.file("g.txt");
  write_file(path, "0 1\n1 2\n0 2\n");
  write_file(path + ".cert.json", R"({"counts": {"triangles": 2}})");
  const auto r = call({"verify", "--in", path});
  CHECK(r.code == trigraph::cli::kVerifyFailed);
  CHECK(lines(r.out).back() == "verify: FAIL");
}

TEST_CASE("generate then count reproduces the certificate") {
  TempDir dir;
  const auto path = dir.file("lc.txt");
  auto r = call({"generate", "--family", "layered_cliques", "--params", "k=3,b=4", "--out", path});
  REQUIRE(r.code == 0);
  REQUIRE(fs::exists(path + ".cert.json"));
  std::ifstream cert_in(path + ".cert.json");
  const auto cert = nlohmann::json::parse(cert_in);
  CHECK(cert.at("counts").at("triangles") == 48);

  r = call({"count", "--in", path});
  CHECK(r.out == "48\n");
  r = call({"cliques", "--in", path, "--ell", "4", "--count-only"});
  CHECK(r.out == "27\n");
  r = call({"verify", "--in", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificate K5 6") != std::string::npos);
}

TEST_CASE("generate without --out writes the edge list") {
  const auto r = call({"generate", "--family", "clique_plus", "--params", "n=4,m=3"});
  CHECK(r.code == 0);
  CHECK(r.out == "# n 4\n0 1\n0 2\n1 2\n");
  CHECK(call({"generate", "--params", "n=4"}).code == trigraph::cli::kUsageError);
  CHECK(call({"generate", "--family", "clique_plus", "--params", "n=4,m=99"}).code ==
        trigraph::cli::kUsageError);
  CHECK(call({"generate", "--family", "gnm", "--params", "n=4,m"}).code == trigraph::cli::kUsageError);
}

TEST_CASE("list output") {
  const auto r = call({"list", "--family", "clique_plus", "--params", "n=4,m=6", "--sorted"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  const auto c = call({"list", "--family", "clique_plus", "--params", "n=4,m=6", "--count-only",
                       "--algo", "ayz", "--threshold", "0"});
  CHECK(c.out == "4\n");
  const auto raw = call({"list", "--family", "layered_cliques", "--params", "k=2,b=4", "--algo", "itai_rodeh"});
  CHECK(lines(raw.out).size() == 32);
}

TEST_CASE("cliques output") {
  const auto r = call({"cliques", "--family", "clique_plus", "--params", "n=5,m=10", "--ell", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"0 1 2 3", "0 1 2 4", "0 1 3 4", "0 2 3 4", "1 2 3 4"});
  CHECK(call({"cliques", "--family", "clique_plus", "--params", "n=5,m=10", "--ell", "9"}).code ==
        trigraph::cli::kUsageError);
}

TEST_CASE("detect output") {
  auto r = call({"detect", "--family", "clique_plus", "--params", "n=4,m=3"});
  CHECK(r.out == "TRIANGLE: 0 1 2\n");
  r = call({"detect", "--family", "gnp", "--params", "n=6,p=0"});
  CHECK(r.out == "NONE\n");
  r = call({"detect", "--family", "layered_cliques", "--params", "k=2,b=4", "--method", "sampling",
            "--p", "1", "--json"});
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("triangle").size() == 3);
  CHECK(call({"detect", "--family", "gnp", "--params", "n=6,p=0", "--method", "bogus"}).code ==
        trigraph::cli::kUsageError);
}

TEST_CASE("is-or-triangle output") {
  auto r = call({"is-or-triangle", "--family", "clique_plus", "--params", "n=3,m=3"});
  CHECK(r.out == "TRIANGLE: 0 1 2\n");
  r = call({"is-or-triangle", "--family", "gnp", "--params", "n=5,p=0"});
  CHECK(r.out == "IS 5: 0 1 2 3 4\n");
  r = call({"is-or-triangle", "--family", "gnp", "--params", "n=9,p=0", "--approx", "--json"});
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("kind") == "independent_set");
  CHECK(rec.at("size") == 9);
  CHECK(rec.at("guarantee") == 3);
}

TEST_CASE("approx output") {
  auto r = call({"approx", "--family", "layered_cliques", "--params", "k=3,b=4", "--p", "1", "--trials", "2"});
  REQUIRE(r.code == 0);
  auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("estimate") == 48.0);
  CHECK(rec.at("trials") == 2);
  CHECK(rec.at("p") == 1.0);
  REQUIRE(rec.at("per_trial").size() == 2);
  CHECK(rec.at("per_trial")[0].at("X") == 14);
  CHECK(rec.at("per_trial")[0].at("Y") == 42);
  CHECK(rec.at("per_trial")[0].at("Z") == 48);
  CHECK(rec.at("witness").size() == 3);
  CHECK(rec.at("warnings").empty());

  r = call({"approx", "--family", "gnm", "--params", "n=100,m=300", "--seed", "5"});
  rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("seed") == 5);
  CHECK_FALSE(rec.at("warnings").empty());

  CHECK(call({"approx", "--family", "gnm", "--params", "n=10,m=5", "--delta", "0.5"}).code ==
        trigraph::cli::kUsageError);
  CHECK(call({"approx", "--family", "gnm", "--params", "n=10,m=5", "--p", "2"}).code ==
        trigraph::cli::kUsageError);
}

TEST_CASE("stats output") {
  const auto r = call({"stats", "--family", "layered_cliques", "--params", "k=3,b=4", "--json"});
  REQUIRE(r.code == 0);
  const auto rec = nlohmann::json::parse(r.out);
  CHECK(rec.at("n") == 14);
  CHECK(rec.at("m") == 42);
  CHECK(rec.at("edge_cost_sum") == 210);
  CHECK(rec.at("degeneracy") == 5);
  CHECK(rec.at("arboricity_lower") <= 4);
  CHECK(rec.at("arboricity_upper") >= 4);
  const auto text = call({"stats", "--family", "layered_cliques", "--params", "k=3,b=4"});
  CHECK(text.out.find("edge_cost_sum: 210") != std::string::npos);
}

TEST_CASE("input errors map to exit codes") {
  TempDir dir;
  const auto bad = dir.file("bad.txt");
  write_file(bad, "0 1\nnot an edge\n");
  CHECK(call({"count", "--in", bad}).code == trigraph::cli::kDataError);
  CHECK(call({"count", "--in", dir.file("missing.txt")}).code == trigraph::cli::kDataError);
  CHECK(call({"count"}).code == trigraph::cli::kUsageError);
  CHECK(call({}).code == trigraph::cli::kUsageError);
  CHECK(call({"frobnicate"}).code == trigraph::cli::kUsageError);
  CHECK(call({"count", "--bogus-flag"}).code == trigraph::cli::kUsageError);

  const auto big = call({"count", "--family", "gnm", "--params", "n=100,m=10", "--matrix-budget", "50"});
  CHECK(big.code == trigraph::cli::kDataError);
  CHECK(big.err.find("matrix-budget") != std::string::npos);
  CHECK(call({"count", "--family", "gnm", "--params", "n=100,m=10", "--matrix-budget", "50", "--algo",
              "chiba_nishizeki"})
            .code == 0);
}

TEST_CASE("verify skips matrix methods above the budget") {
  const auto r = call({"verify", "--family", "gnm", "--params", "n=100,m=400", "--matrix-budget", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skip hybrid") != std::string::npos);
  CHECK(r.out.find("skip matrix") != std::string::npos);
}

TEST_CASE("bench") {
  TempDir dir;
  const auto empty = dir.file("empty.json");
  write_file(empty, "{}");
  auto r = call({"bench", "--suite", empty});
  CHECK(r.code == 0);
  CHECK(r.out == std::string(trigraph::bench::kCsvHeader) + "\n");

  r = call({"bench", "--family", "layered_cliques", "--params", "k=3,b=4", "--algos", "hybrid,chiba_nishizeki"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind("layered_cliques,14,42,hybrid,48,", 0) == 0);
  CHECK(rows[2].rfind("layered_cliques,14,42,chiba_nishizeki,48,", 0) == 0);

  r = call({"bench", "--family", "layered_cliques", "--params", "k=3,b=4", "--algos", "hybrid", "--json"});
  const auto recs = nlohmann::json::parse(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].at("probes") == 210);
  CHECK(recs[0].at("edge_cost_sum") == 210);

  const auto ladder = dir.file("ladder.json");
  write_file(ladder, R"({"algorithms": ["hybrid", "chiba_nishizeki", "ayz"],
    "ladders": [{"family": "clique_plus", "param": "n", "values": [50, 100, 200],
                 "powers": {"m": 1.5}}]})");
  const auto out = dir.file("ladder.csv");
  r = call({"bench", "--suite", ladder, "--out", out});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  rows = lines(buf.str());
  REQUIRE(rows.size() == 10);
  CHECK(rows[1].rfind("clique_plus,50,353,hybrid,", 0) == 0);
  CHECK(rows[7].rfind("clique_plus,200,2828,hybrid,", 0) == 0);

  CHECK(call({"bench", "--suite", dir.file("nope.json")}).code == trigraph::cli::kDataError);
  write_file(empty, "{not json");
  CHECK(call({"bench", "--suite", empty}).code == trigraph::cli::kUsageError);
}

TEST_CASE("bench ladder: equal counts and growing probes") {
  trigraph::bench::Suite suite = trigraph::bench::parse_suite(nlohmann::json::parse(R"({
    "algorithms": ["hybrid", "chiba_nishizeki", "itai_rodeh", "matrix", "ayz"],
    "ladders": [{"family": "clique_plus", "param": "n", "values": [100, 200, 400],
                 "powers": {"m": 1.5}}]})"));
  const auto records = trigraph::bench::run(suite);
  REQUIRE(records.size() == 15);
  std::uint64_t last_probes = 0;
  for (std::size_t i = 0; i < records.size(); i += 5) {
    for (std::size_t j = 1; j < 5; ++j) CHECK(records[i + j].triangles == records[i].triangles);
    CHECK(records[i].probes == records[i].edge_cost_sum);
    CHECK(static_cast<double>(records[i].probes) <= records[i].edge_cost_bound);
    CHECK(records[i].probes > last_probes);
    last_probes = records[i].probes;
  }
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = TRIGRAPH_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("--help") == 0);
  CHECK(status("count --family layered_cliques --params k=3,b=4") == 0);
  CHECK(status("count --family layered_cliques --params k=3,b=4 --algo nosuch") == 1);
}

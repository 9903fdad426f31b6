#include <doctest.h>

#include <sstream>

#include "trigraph/edge_list_io.hpp"
#include "trigraph/generators.hpp"

using namespace trigraph;

TEST_CASE("reader skips comments and blank lines") {
  std::istringstream in("# a comment\n\n0 1\n  1\t2  \n# another\n");
  const auto g = read_edge_list(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("reader honours the vertex-count directive") {
  std::istringstream in("# n 10\n0 1\n");
  const auto g = read_edge_list(in);
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 1);

  std::istringstream small("# n 2\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(small), VertexOutOfRange);
}

TEST_CASE("reader rejects malformed lines") {
  for (const char* text : {"0\n", "0 1 2\n", "a b\n", "0 -1\n", "1.5 2\n", "# n x\n"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), ParseError);
  }
  std::istringstream loop("3 3\n");
  CHECK_THROWS_AS(read_edge_list(loop), SelfLoop);
}

TEST_CASE("reader reports the failing line") {
  std::istringstream in("0 1\n# ok\nbad\n");
  try {
    read_edge_list(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("writer emits directive and canonical sorted edges") {
  const std::vector<Edge> e = {{2, 1}, {0, 3}, {1, 0}};
  std::ostringstream out;
  write_edge_list(out, Graph::from_edge_list(5, e));
  CHECK(out.str() == "# n 5\n0 1\n0 3\n1 2\n");
}

TEST_CASE("write then read is the identity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random(10 + seed * 3, seed * 7, seed).graph;
    std::stringstream buf;
    write_edge_list(buf, g);
    const auto back = read_edge_list(buf);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
  }
}

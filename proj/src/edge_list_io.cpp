#include "trigraph/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace trigraph {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses exactly `count` whitespace-separated non-negative integers.
bool parse_ints(std::string_view s, std::uint64_t* out, int count) {
  for (int i = 0; i < count; ++i) {
    s = trim(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out[i]);
    if (ec != std::errc{}) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.empty() && s.front() != ' ' && s.front() != '\t') return false;
  }
  return trim(s).empty();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  constexpr std::uint64_t kMaxId = std::numeric_limits<Vertex>::max() - 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      s.remove_prefix(1);
      s = trim(s);
      if (s.size() >= 2 && s[0] == 'n' && (s[1] == ' ' || s[1] == '\t')) {
        std::uint64_t count = 0;
        if (!parse_ints(s.substr(1), &count, 1)) throw ParseError(lineno, "malformed '# n' directive");
        if (count > kMaxId + 1) throw ParseError(lineno, "vertex count too large");
        n = static_cast<std::size_t>(count);
      }
      continue;
    }
    std::uint64_t uv[2];
    if (!parse_ints(s, uv, 2)) throw ParseError(lineno, "expected two non-negative integers");
    if (uv[0] > kMaxId || uv[1] > kMaxId) throw ParseError(lineno, "vertex id too large");
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace trigraph

#include <algorithm>

#include "detail.hpp"
#include "trigraph/triangles.hpp"

namespace trigraph {
namespace {

struct CliqueSearch {
  int ell;
  const std::vector<std::vector<Vertex>>& later;  // neighbors later in degeneracy order
  const CliqueVisitor& visit;
  ListingReport& report;
  std::vector<Vertex> stack;
  std::vector<Vertex> tuple;

  void extend(const std::vector<Vertex>& candidates) {
    const auto needed = static_cast<std::size_t>(ell) - stack.size();
    if (needed == 1) {
      for (Vertex c : candidates) {
        tuple = stack;
        tuple.push_back(c);
        std::sort(tuple.begin(), tuple.end());
        visit(tuple);
        ++report.triangles_emitted;
      }
      return;
    }
    for (Vertex c : candidates) {
      std::vector<Vertex> next;
      const auto& oc = later[c];
      auto a = candidates.begin();
      auto b = oc.begin();
      while (a != candidates.end() && b != oc.end()) {
        ++report.probes;
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          next.push_back(*a);
          ++a;
          ++b;
        }
      }
      if (next.size() + 1 < needed) continue;
      stack.push_back(c);
      extend(next);
      stack.pop_back();
    }
  }
};

}  // namespace

ListingReport list_cliques(const Graph& g, int ell, const CliqueVisitor& visit) {
  if (ell < 3 || ell > 8) throw EllOutOfRange(ell);
  detail::Stopwatch clock;
  ListingReport r{Algorithm::cliques};
  const std::size_t n = g.num_vertices();

  const auto order = degeneracy(g).order;
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
  std::vector<std::vector<Vertex>> later(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later[v].push_back(w);  // stays id-sorted
    }
  }

  CliqueSearch search{ell, later, visit, r, {}, {}};
  for (Vertex v = 0; v < n; ++v) {
    if (later[v].size() + 1 < static_cast<std::size_t>(ell)) continue;
    search.stack.assign(1, v);
    search.extend(later[v]);
  }
  r.elapsed = clock.elapsed();
  return r;
}

std::vector<CliqueTuple> collect_cliques(const Graph& g, int ell) {
  std::vector<CliqueTuple> out;
  list_cliques(g, ell, [&](std::span<const Vertex> c) {
    out.push_back({std::vector<Vertex>(c.begin(), c.end())});
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trigraph

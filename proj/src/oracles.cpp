#include "tricent/oracles.hpp"

#include <string>
#include <vector>

#include "tricent/errors.hpp"

namespace tricent::oracle {

std::map<NodeId, std::size_t> triangles(const Graph& g) {
  const auto nodes = g.nodes();
  if (nodes.size() > kTriangleOracleMaxNodes) {
    throw RefusalError("triangle oracle refuses graphs above " +
                       std::to_string(kTriangleOracleMaxNodes) + " nodes");
  }
  std::map<NodeId, std::size_t> counts;
  for (NodeId id : nodes) counts[id] = 0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (!g.has_edge(nodes[a], nodes[b])) continue;
      for (std::size_t c = b + 1; c < nodes.size(); ++c) {
        if (g.has_edge(nodes[a], nodes[c]) && g.has_edge(nodes[b], nodes[c])) {
          ++counts[nodes[a]];
          ++counts[nodes[b]];
          ++counts[nodes[c]];
        }
      }
    }
  }
  return counts;
}

namespace {

struct PathSearch {
  const Graph& g;
  std::span<const NodeId> nodes;
  std::vector<bool> on_path;
  std::vector<std::size_t> path;
  std::vector<std::vector<std::size_t>> found;

  // Collects every simple path from `at` to `target` using exactly `hops` more edges.
  void extend(std::size_t at, std::size_t target, std::size_t hops) {
    if (hops == 0) {
      if (at == target) found.push_back(path);
      return;
    }
    for (std::size_t next = 0; next < nodes.size(); ++next) {
      if (on_path[next] || !g.has_edge(nodes[at], nodes[next])) continue;
      on_path[next] = true;
      path.push_back(next);
      extend(next, target, hops - 1);
      path.pop_back();
      on_path[next] = false;
    }
  }
};

}  // namespace

ScoreVector betweenness(const Graph& g) {
  const auto nodes = g.nodes();
  const std::size_t n = nodes.size();
  if (n > kBetweennessOracleMaxNodes) {
    throw RefusalError("betweenness oracle refuses graphs above " +
                       std::to_string(kBetweennessOracleMaxNodes) + " nodes");
  }

  std::vector<double> score(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      PathSearch search{g, nodes, std::vector<bool>(n, false), {s}, {}};
      search.on_path[s] = true;
      // Iterative deepening: the first depth with any path is the distance.
      for (std::size_t hops = 1; hops < n && search.found.empty(); ++hops) {
        search.extend(s, t, hops);
      }
      if (search.found.empty()) {
        throw RefusalError("betweenness oracle needs a connected graph");
      }
      const double share = 1.0 / static_cast<double>(search.found.size());
      for (const auto& p : search.found) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) score[p[i]] += share;
      }
    }
  }
  if (n >= 3) {
    const double factor = 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (double& v : score) v *= factor;
  }
  return ScoreVector(MeasureTag::kBC, std::vector<NodeId>(nodes.begin(), nodes.end()),
                     std::move(score));
}

}  // namespace tricent::oracle

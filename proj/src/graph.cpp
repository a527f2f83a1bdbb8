#include "tricent/graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "tricent/errors.hpp"

namespace tricent {

std::ostream& operator<<(std::ostream& os, NodeId id) { return os << id.value; }

Graph Graph::from_edge_list(std::span<const Edge> edges, std::span<const NodeId> isolated) {
  Graph g;
  g.labels_.reserve(edges.size() * 2 + isolated.size());
  for (const auto& [u, v] : edges) {
    g.labels_.push_back(u);
    g.labels_.push_back(v);
  }
  g.labels_.insert(g.labels_.end(), isolated.begin(), isolated.end());
  std::sort(g.labels_.begin(), g.labels_.end());
  g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());

  g.adjacency_.resize(g.labels_.size());
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    const std::size_t a = g.index_of(u);
    const std::size_t b = g.index_of(v);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  std::size_t ends = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    ends += list.size();
  }
  g.edge_count_ = ends / 2;
  return g;
}

bool Graph::contains(NodeId id) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), id);
}

std::size_t Graph::index_of(NodeId id) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
  if (it == labels_.end() || *it != id) {
    throw LookupError("unknown node " + std::to_string(id.value));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::has_edge_at(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<NodeId> Graph::neighbors(NodeId id) const {
  std::vector<NodeId> out;
  for (std::size_t j : adjacent(index_of(id))) out.push_back(labels_[j]);
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const { return has_edge_at(index_of(u), index_of(v)); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(labels_[u], labels_[v]);
    }
  }
  return out;
}

namespace {

// Number of neighbors of j that are also neighbors of i. Both lists are sorted.
std::size_t common_neighbors(const Graph& g, std::size_t i, std::size_t j) {
  const auto a = g.adjacent(i);
  const auto b = g.adjacent(j);
  std::size_t count = 0;
  auto p = a.begin();
  auto q = b.begin();
  while (p != a.end() && q != b.end()) {
    if (*p < *q) {
      ++p;
    } else if (*q < *p) {
      ++q;
    } else {
      ++count;
      ++p;
      ++q;
    }
  }
  return count;
}

}  // namespace

std::vector<std::size_t> triangle_neighbor_indices(const Graph& g, std::size_t i) {
  std::vector<std::size_t> members;
  for (std::size_t j : g.adjacent(i)) {
    if (common_neighbors(g, i, j) > 0) members.push_back(j);
  }
  return members;
}

GammaSet triangle_neighbors(const Graph& g, NodeId i) {
  GammaSet gamma{i, {}};
  for (std::size_t j : triangle_neighbor_indices(g, g.index_of(i))) {
    gamma.members.push_back(g.label(j));
  }
  return gamma;
}

std::size_t triangles_at_index(const Graph& g, std::size_t i) {
  std::size_t twice = 0;
  for (std::size_t j : g.adjacent(i)) twice += common_neighbors(g, i, j);
  return twice / 2;
}

std::size_t triangles_at(const Graph& g, NodeId i) { return triangles_at_index(g, g.index_of(i)); }

std::size_t global_triangle_count(const Graph& g) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) total += triangles_at_index(g, i);
  return total / 3;
}

double density(std::size_t nodes, std::size_t edges) {
  if (nodes < 2) {
    throw DomainError("density is undefined for " + std::to_string(nodes) + " node(s)");
  }
  const double n = static_cast<double>(nodes);
  return 2.0 * static_cast<double>(edges) / (n * (n - 1.0));
}

double density(const Graph& g) { return density(g.node_count(), g.edge_count()); }

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  std::vector<bool> kept(g.node_count(), false);
  for (NodeId id : keep) kept[g.index_of(id)] = true;

  std::vector<Edge> edges;
  std::vector<NodeId> isolated;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (!kept[u]) continue;
    isolated.push_back(g.label(u));
    for (std::size_t v : g.adjacent(u)) {
      if (u < v && kept[v]) edges.emplace_back(g.label(u), g.label(v));
    }
  }
  return Graph::from_edge_list(edges, isolated);
}

Graph remove_nodes(const Graph& g, std::span<const NodeId> victims) {
  std::vector<bool> removed(g.node_count(), false);
  for (NodeId id : victims) removed[g.index_of(id)] = true;

  std::vector<NodeId> keep;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (!removed[u]) keep.push_back(g.label(u));
  }
  return induced_subgraph(g, keep);
}

}  // namespace tricent

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace tricent {

// Node label as it appears in the source file. Never reindexed.
struct NodeId {
  std::int64_t value{};

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::ostream& operator<<(std::ostream& os, NodeId id);

using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph.
//
// Nodes are stored in ascending label order; the position of a label in that
// order is its dense index, which the index-based accessors use. Adjacency
// lists hold sorted indices, are symmetric and contain no self-loops.
class Graph {
 public:
  Graph() = default;

  // Self-loops are dropped and duplicate or reversed edges collapse to one.
  // Every endpoint and every label in `isolated` becomes a node.
  static Graph from_edge_list(std::span<const Edge> edges,
                              std::span<const NodeId> isolated = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<NodeId>& nodes() const& noexcept { return labels_; }
  std::vector<NodeId> nodes() && noexcept { return std::move(labels_); }
  bool contains(NodeId id) const noexcept;

  // Throws LookupError for unknown labels.
  std::size_t index_of(NodeId id) const;
  NodeId label(std::size_t index) const { return labels_.at(index); }

  std::span<const std::size_t> adjacent(std::size_t index) const {
    return adjacency_.at(index);
  }
  std::size_t degree_at(std::size_t index) const { return adjacency_.at(index).size(); }
  bool has_edge_at(std::size_t u, std::size_t v) const;

  std::vector<NodeId> neighbors(NodeId id) const;
  std::size_t degree(NodeId id) const { return degree_at(index_of(id)); }
  bool has_edge(NodeId u, NodeId v) const;

  // Each edge once as (smaller, larger), sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<NodeId> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

// One-hop triangle-connected neighbors of `owner`: neighbors j that share an
// edge with some other neighbor of `owner`. Members are sorted by label.
struct GammaSet {
  NodeId owner;
  std::vector<NodeId> members;
};

GammaSet triangle_neighbors(const Graph& g, NodeId i);
std::vector<std::size_t> triangle_neighbor_indices(const Graph& g, std::size_t i);

// Triangles incident to i, i.e. edges among i's neighbors.
std::size_t triangles_at(const Graph& g, NodeId i);
std::size_t triangles_at_index(const Graph& g, std::size_t i);
std::size_t global_triangle_count(const Graph& g);

// 2N / (n(n-1)). Throws DomainError when n < 2.
double density(const Graph& g);
double density(std::size_t nodes, std::size_t edges);

// Induced subgraph on g.nodes \ victims. Throws LookupError on unknown victims.
Graph remove_nodes(const Graph& g, std::span<const NodeId> victims);

// Induced subgraph on `keep`. Throws LookupError on unknown labels.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

}  // namespace tricent

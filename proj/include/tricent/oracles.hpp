#pragma once

#include <cstddef>
#include <map>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

// Exhaustive reference implementations used to check the fast paths. They
// rely only on Graph::has_edge and the node list.
namespace tricent::oracle {

inline constexpr std::size_t kTriangleOracleMaxNodes = 200;
inline constexpr std::size_t kBetweennessOracleMaxNodes = 8;

// All-triples enumeration. Throws RefusalError above 200 nodes.
std::map<NodeId, std::size_t> triangles(const Graph& g);

// Enumerates every shortest path of every pair by iterative deepening and
// counts pass-through fractions; normalized like betweenness_centrality.
// Throws RefusalError above 8 nodes or on disconnected input.
ScoreVector betweenness(const Graph& g);

}  // namespace tricent::oracle

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricent/graph.hpp"

namespace tricent {

enum class MeasureTag { kTC, kTR, kDC, kBC, kCNC, kEC, kPR, kSDEG };

inline constexpr MeasureTag kAllMeasures[] = {MeasureTag::kTC,  MeasureTag::kTR, MeasureTag::kDC,
                                              MeasureTag::kBC,  MeasureTag::kCNC, MeasureTag::kEC,
                                              MeasureTag::kPR,  MeasureTag::kSDEG};

// "TC", "TR", ...
std::string_view to_string(MeasureTag tag);
// Case-insensitive inverse of to_string.
std::optional<MeasureTag> parse_measure(std::string_view name);

// One finite score per node of the source graph, in the graph's label order.
class ScoreVector {
 public:
  ScoreVector(MeasureTag measure, std::vector<NodeId> nodes, std::vector<double> scores);

  MeasureTag measure() const noexcept { return measure_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<NodeId>& nodes() const& noexcept { return nodes_; }
  std::vector<NodeId> nodes() && noexcept { return std::move(nodes_); }
  const std::vector<double>& values() const& noexcept { return scores_; }
  std::vector<double> values() && noexcept { return std::move(scores_); }

  // Throws LookupError for labels not in the vector.
  double at(NodeId id) const;

 private:
  MeasureTag measure_;
  std::vector<NodeId> nodes_;
  std::vector<double> scores_;
};

struct IterationParams {
  double damping = 0.85;
  double tol = 1e-10;
  std::size_t max_iter = 1000;
};

std::size_t sdeg(const Graph& g, NodeId i);

// How the neighborhood sum of Tr-centrality weighs each node of {i} ∪ γ_i.
enum class TrSumConvention {
  // Degree of the node inside the triangle subgraph G_i = induced({i} ∪ γ_i).
  kSubgraphDegree,
  // Global sdeg of the node. Kept for comparison; does not reproduce the
  // karate benchmark ranking.
  kGlobalSdeg,
};

// The ingredients of one node's Tr-centrality.
struct TrTerms {
  std::size_t sdeg = 0;             // |γ_i|
  std::size_t neighborhood = 0;     // N_i = sdeg + 1
  std::size_t triangles = 0;        // NT_i
  std::size_t neighborhood_sum = 0; // Σ over {i} ∪ γ_i

  // 3·sdeg − (2·N + NT) + Σ, before the 0.01 scale.
  long long gruebler() const;
  // sdeg − 2 − NT + Σ, algebraically identical to gruebler().
  long long closed_form() const;
};

inline constexpr double kTrScale = 0.01;

TrTerms tr_terms(const Graph& g, NodeId i,
                 TrSumConvention convention = TrSumConvention::kSubgraphDegree);

ScoreVector sdeg_centrality(const Graph& g);
ScoreVector tr_centrality(const Graph& g,
                          TrSumConvention convention = TrSumConvention::kSubgraphDegree);
ScoreVector triangle_count_centrality(const Graph& g);
ScoreVector degree_centrality(const Graph& g);

enum class BetweennessScale { kNormalized, kRaw };

// Brandes accumulation over unordered pairs. kNormalized multiplies by
// 2/((n-1)(n-2)) when n >= 3.
ScoreVector betweenness_centrality(const Graph& g,
                                   BetweennessScale scale = BetweennessScale::kNormalized);

// (r/(n-1)) * (r/S) where r counts reachable nodes and S sums their
// distances; 0 for nodes that reach nothing.
ScoreVector closeness_centrality(const Graph& g);

// Power iteration from the uniform vector, unit Euclidean norm, nonnegative.
// Converged when max|Ax - λx| < tol. Degree-0 nodes score 0.
// Throws ConvergenceError after max_iter iterations.
ScoreVector eigenvector_centrality(const Graph& g, double tol = 1e-10,
                                   std::size_t max_iter = 1000);

// Undirected PageRank with uniform teleport and uniform redistribution of
// dangling mass; stops when the largest per-node change is below tol.
ScoreVector pagerank(const Graph& g, double damping = 0.85, double tol = 1e-10,
                     std::size_t max_iter = 1000);

// max|Ax - λx| with λ the Rayleigh quotient, for a vector in graph order.
double eigen_residual(const Graph& g, std::span<const double> x);

ScoreVector compute(const Graph& g, MeasureTag tag, const IterationParams& params = {});

}  // namespace tricent

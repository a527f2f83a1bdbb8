#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/graph.hpp"

namespace tricent {

// Column order of the published comparison tables.
inline constexpr MeasureTag kComparisonMeasures[] = {MeasureTag::kTR, MeasureTag::kBC,
                                                     MeasureTag::kCNC, MeasureTag::kEC,
                                                     MeasureTag::kPR, MeasureTag::kTC};

inline constexpr std::uint64_t kDefaultSeed = 20201018;

// Descending score, ties (equal to 12 significant digits) by ascending label.
// Returns the first min(k, n) nodes.
std::vector<NodeId> rank_top_k(const ScoreVector& scores, std::size_t k);

struct RankingColumn {
  MeasureTag measure;
  std::vector<NodeId> nodes;
};

struct RankingTable {
  std::string graph_name;
  std::size_t k = 0;
  std::vector<RankingColumn> columns;

  const RankingColumn& column(MeasureTag tag) const;
};

RankingTable comparison_table(const Graph& g, const std::string& name, std::size_t k,
                              const IterationParams& params = {},
                              std::span<const MeasureTag> measures = kComparisonMeasures);

struct RemovalRow {
  MeasureTag measure;
  double density = 0.0;
  std::vector<NodeId> removed;
  std::size_t residual_nodes = 0;
  std::size_t residual_edges = 0;
};

struct RemovalReport {
  std::string graph_name;
  std::size_t k = 0;
  std::vector<RemovalRow> rows;

  const RemovalRow& row(MeasureTag tag) const;
};

// Removes each measure's top-k nodes and records the residual density.
// Throws DomainError when k >= n or the residual graph has fewer than 2 nodes.
RemovalReport removal_impact(const Graph& g, const std::string& name, std::size_t k,
                             const IterationParams& params = {},
                             std::span<const MeasureTag> measures = kComparisonMeasures);

struct PlotSeriesLine {
  MeasureTag measure;
  std::vector<double> densities;
};

// x[i] is network i + 1; each line has one density per network.
struct PlotSeries {
  std::vector<std::string> networks;
  std::vector<PlotSeriesLine> series;
};

// Throws ShapeError when the reports carry different measure sets.
PlotSeries plot_series(std::span<const RemovalReport> reports);

// Mean residual density after removing k uniformly random nodes, over `trials`
// draws from a seeded mt19937_64.
double random_removal_density(const Graph& g, std::size_t k, std::size_t trials,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace tricent

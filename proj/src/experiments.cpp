#include "tricent/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "tricent/errors.hpp"

namespace tricent {
namespace {

// Scores that agree to 12 significant digits compare equal.
double tie_key(double value) {
  if (value == 0.0) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return std::strtod(buf, nullptr);
}

// Unbiased draw from [0, bound) that does not depend on the standard
// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

}  // namespace

std::vector<NodeId> rank_top_k(const ScoreVector& scores, std::size_t k) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> keys(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) keys[i] = tie_key(scores.values()[i]);

  const auto nodes = scores.nodes();
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (keys[a] != keys[b]) return keys[a] > keys[b];
                      return nodes[a] < nodes[b];
                    });

  std::vector<NodeId> top;
  top.reserve(take);
  for (std::size_t i = 0; i < take; ++i) top.push_back(nodes[order[i]]);
  return top;
}

const RankingColumn& RankingTable::column(MeasureTag tag) const {
  for (const auto& c : columns) {
    if (c.measure == tag) return c;
  }
  throw LookupError("ranking table has no " + std::string(to_string(tag)) + " column");
}

RankingTable comparison_table(const Graph& g, const std::string& name, std::size_t k,
                              const IterationParams& params,
                              std::span<const MeasureTag> measures) {
  RankingTable table{name, k, {}};
  for (MeasureTag tag : measures) {
    table.columns.push_back({tag, rank_top_k(compute(g, tag, params), k)});
  }
  return table;
}

const RemovalRow& RemovalReport::row(MeasureTag tag) const {
  for (const auto& r : rows) {
    if (r.measure == tag) return r;
  }
  throw LookupError("removal report has no " + std::string(to_string(tag)) + " row");
}

RemovalReport removal_impact(const Graph& g, const std::string& name, std::size_t k,
                             const IterationParams& params,
                             std::span<const MeasureTag> measures) {
  if (k >= g.node_count()) {
    throw DomainError("cannot remove " + std::to_string(k) + " of " +
                      std::to_string(g.node_count()) + " nodes");
  }
  RemovalReport report{name, k, {}};
  for (MeasureTag tag : measures) {
    RemovalRow row{tag, 0.0, {}, 0, 0};
    if (k > 0) row.removed = rank_top_k(compute(g, tag, params), k);
    const Graph residual = remove_nodes(g, row.removed);
    row.residual_nodes = residual.node_count();
    row.residual_edges = residual.edge_count();
    row.density = density(residual);
    report.rows.push_back(std::move(row));
  }
  return report;
}

PlotSeries plot_series(std::span<const RemovalReport> reports) {
  PlotSeries plot;
  if (reports.empty()) return plot;

  std::vector<MeasureTag> measures;
  for (const auto& row : reports.front().rows) measures.push_back(row.measure);
  for (MeasureTag tag : measures) plot.series.push_back({tag, {}});

  for (const auto& report : reports) {
    if (report.rows.size() != measures.size()) {
      throw ShapeError("report '" + report.graph_name + "' has a different measure set");
    }
    for (std::size_t m = 0; m < measures.size(); ++m) {
      if (report.rows[m].measure != measures[m]) {
        throw ShapeError("report '" + report.graph_name + "' has a different measure set");
      }
      plot.series[m].densities.push_back(report.rows[m].density);
    }
    plot.networks.push_back(report.graph_name);
  }
  return plot;
}

double random_removal_density(const Graph& g, std::size_t k, std::size_t trials,
                              std::uint64_t seed) {
  if (k >= g.node_count()) {
    throw DomainError("cannot remove " + std::to_string(k) + " of " +
                      std::to_string(g.node_count()) + " nodes");
  }
  if (trials == 0) throw DomainError("random removal needs at least one trial");

  std::mt19937_64 rng(seed);
  std::vector<NodeId> pool(g.nodes().begin(), g.nodes().end());
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    // Partial Fisher-Yates: the first k slots become the sample.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(bounded(rng, pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    total += density(remove_nodes(g, std::span<const NodeId>(pool.data(), k)));
  }
  return total / static_cast<double>(trials);
}

}  // namespace tricent

#include "tricent/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "tricent/errors.hpp"

namespace tricent {

std::string_view to_string(MeasureTag tag) {
  switch (tag) {
    case MeasureTag::kTC: return "TC";
    case MeasureTag::kTR: return "TR";
    case MeasureTag::kDC: return "DC";
    case MeasureTag::kBC: return "BC";
    case MeasureTag::kCNC: return "CNC";
    case MeasureTag::kEC: return "EC";
    case MeasureTag::kPR: return "PR";
    case MeasureTag::kSDEG: return "SDEG";
  }
  return "?";
}

std::optional<MeasureTag> parse_measure(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (MeasureTag tag : kAllMeasures) {
    if (to_string(tag) == upper) return tag;
  }
  return std::nullopt;
}

ScoreVector::ScoreVector(MeasureTag measure, std::vector<NodeId> nodes, std::vector<double> scores)
    : measure_(measure), nodes_(std::move(nodes)), scores_(std::move(scores)) {
  if (nodes_.size() != scores_.size()) {
    throw std::invalid_argument("score vector needs one score per node");
  }
  for (double s : scores_) {
    if (!std::isfinite(s)) throw std::invalid_argument("non-finite centrality score");
  }
}

double ScoreVector::at(NodeId id) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end()) throw LookupError("no score for node " + std::to_string(id.value));
  return scores_[static_cast<std::size_t>(it - nodes_.begin())];
}

namespace {

ScoreVector make_scores(const Graph& g, MeasureTag tag, std::vector<double> scores) {
  return ScoreVector(tag, std::vector<NodeId>(g.nodes().begin(), g.nodes().end()),
                     std::move(scores));
}

template <typename PerNode>
ScoreVector per_node(const Graph& g, MeasureTag tag, PerNode f) {
  std::vector<double> scores(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) scores[i] = static_cast<double>(f(i));
  return make_scores(g, tag, std::move(scores));
}

// Hop distances from `source`; unreachable nodes get max().
std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.node_count(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.adjacent(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<double> multiply_adjacency(const Graph& g, std::span<const double> x) {
  std::vector<double> y(g.node_count(), 0.0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    double sum = 0.0;
    for (std::size_t j : g.adjacent(i)) sum += x[j];
    y[i] = sum;
  }
  return y;
}

}  // namespace

std::size_t sdeg(const Graph& g, NodeId i) {
  return triangle_neighbor_indices(g, g.index_of(i)).size();
}

long long TrTerms::gruebler() const {
  const auto s = static_cast<long long>(sdeg);
  const auto n = static_cast<long long>(neighborhood);
  const auto nt = static_cast<long long>(triangles);
  return 3 * s - (2 * n + nt) + static_cast<long long>(neighborhood_sum);
}

long long TrTerms::closed_form() const {
  return static_cast<long long>(sdeg) - 2 - static_cast<long long>(triangles) +
         static_cast<long long>(neighborhood_sum);
}

namespace {

TrTerms tr_terms_at(const Graph& g, std::size_t i, TrSumConvention convention,
                    std::span<const std::size_t> global_sdeg) {
  const auto gamma = triangle_neighbor_indices(g, i);
  TrTerms terms;
  terms.sdeg = gamma.size();
  terms.neighborhood = terms.sdeg + 1;
  terms.triangles = triangles_at_index(g, i);

  if (convention == TrSumConvention::kGlobalSdeg) {
    std::size_t sum = global_sdeg[i];
    for (std::size_t j : gamma) sum += global_sdeg[j];
    terms.neighborhood_sum = sum;
    return terms;
  }

  // Degrees inside G_i: i reaches every member of γ_i, and each member j
  // additionally reaches the members of γ_i adjacent to it.
  std::size_t sum = gamma.size();
  for (std::size_t j : gamma) {
    std::size_t inside = 1;
    for (std::size_t k : gamma) {
      if (k != j && g.has_edge_at(j, k)) ++inside;
    }
    sum += inside;
  }
  terms.neighborhood_sum = sum;
  return terms;
}

std::vector<std::size_t> all_sdeg(const Graph& g) {
  std::vector<std::size_t> out(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out[i] = triangle_neighbor_indices(g, i).size();
  }
  return out;
}

}  // namespace

TrTerms tr_terms(const Graph& g, NodeId i, TrSumConvention convention) {
  const std::size_t index = g.index_of(i);
  std::vector<std::size_t> global;
  if (convention == TrSumConvention::kGlobalSdeg) global = all_sdeg(g);
  return tr_terms_at(g, index, convention, global);
}

ScoreVector sdeg_centrality(const Graph& g) {
  return per_node(g, MeasureTag::kSDEG,
                  [&](std::size_t i) { return triangle_neighbor_indices(g, i).size(); });
}

ScoreVector tr_centrality(const Graph& g, TrSumConvention convention) {
  std::vector<std::size_t> global;
  if (convention == TrSumConvention::kGlobalSdeg) global = all_sdeg(g);
  return per_node(g, MeasureTag::kTC, [&](std::size_t i) {
    return kTrScale * static_cast<double>(tr_terms_at(g, i, convention, global).gruebler());
  });
}

ScoreVector triangle_count_centrality(const Graph& g) {
  return per_node(g, MeasureTag::kTR, [&](std::size_t i) { return triangles_at_index(g, i); });
}

ScoreVector degree_centrality(const Graph& g) {
  return per_node(g, MeasureTag::kDC, [&](std::size_t i) { return g.degree_at(i); });
}

ScoreVector betweenness_centrality(const Graph& g, BetweennessScale scale) {
  const std::size_t n = g.node_count();
  std::vector<double> score(n, 0.0);

  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> predecessors(n);
  std::vector<double> sigma(n);
  std::vector<long long> dist(n);
  std::vector<double> delta(n);
  std::deque<std::size_t> queue;

  for (std::size_t s = 0; s < n; ++s) {
    order.clear();
    for (auto& p : predecessors) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(delta.begin(), delta.end(), 0.0);

    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w : g.adjacent(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }

  // Every unordered pair was visited from both ends.
  double factor = 0.5;
  if (scale == BetweennessScale::kNormalized && n >= 3) {
    factor *= 2.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  }
  for (double& s : score) s *= factor;
  return make_scores(g, MeasureTag::kBC, std::move(score));
}

ScoreVector closeness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  return per_node(g, MeasureTag::kCNC, [&](std::size_t i) {
    const auto dist = bfs_distances(g, i);
    std::size_t reached = 0;
    std::size_t total = 0;
    for (std::size_t d : dist) {
      if (d != std::numeric_limits<std::size_t>::max() && d > 0) {
        ++reached;
        total += d;
      }
    }
    if (reached == 0) return 0.0;
    const double r = static_cast<double>(reached);
    return (r / static_cast<double>(n - 1)) * (r / static_cast<double>(total));
  });
}

double eigen_residual(const Graph& g, std::span<const double> x) {
  const auto ax = multiply_adjacency(g, x);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += x[i] * ax[i];
    den += x[i] * x[i];
  }
  const double lambda = den > 0.0 ? num / den : 0.0;
  double residual = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
  }
  return residual;
}

ScoreVector eigenvector_centrality(const Graph& g, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 0.0);
  std::size_t active = 0;
  for (std::size_t i = 0; i < n; ++i) active += g.degree_at(i) > 0 ? 1 : 0;
  if (active == 0) return make_scores(g, MeasureTag::kEC, std::move(x));

  const double start = 1.0 / std::sqrt(static_cast<double>(active));
  for (std::size_t i = 0; i < n; ++i) x[i] = g.degree_at(i) > 0 ? start : 0.0;

  // Iterating with A + I keeps the same eigenvectors and stops bipartite
  // graphs from oscillating between two vectors.
  double residual = eigen_residual(g, x);
  std::size_t iter = 0;
  while (residual >= tol) {
    if (iter == max_iter) {
      throw ConvergenceError("eigenvector centrality did not converge", residual, iter);
    }
    auto y = multiply_adjacency(g, x);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = g.degree_at(i) > 0 ? y[i] / norm : 0.0;
    residual = eigen_residual(g, x);
    ++iter;
  }
  return make_scores(g, MeasureTag::kEC, std::move(x));
}

ScoreVector pagerank(const Graph& g, double damping, double tol, std::size_t max_iter) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("damping must be in (0,1)");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const std::size_t n = g.node_count();
  if (n == 0) return make_scores(g, MeasureTag::kPR, {});

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> x(n, inv_n);
  std::vector<double> next(n);
  double change = std::numeric_limits<double>::infinity();
  std::size_t iter = 0;
  while (change >= tol) {
    if (iter == max_iter) throw ConvergenceError("pagerank did not converge", change, iter);
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.degree_at(i) == 0) dangling += x[i];
    }
    const double base = (1.0 - damping) * inv_n + damping * dangling * inv_n;
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double inflow = 0.0;
      for (std::size_t j : g.adjacent(i)) inflow += x[j] / static_cast<double>(g.degree_at(j));
      next[i] = base + damping * inflow;
      change = std::max(change, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    ++iter;
  }
  double total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
  return make_scores(g, MeasureTag::kPR, std::move(x));
}

ScoreVector compute(const Graph& g, MeasureTag tag, const IterationParams& params) {
  switch (tag) {
    case MeasureTag::kTC: return tr_centrality(g);
    case MeasureTag::kTR: return triangle_count_centrality(g);
    case MeasureTag::kDC: return degree_centrality(g);
    case MeasureTag::kBC: return betweenness_centrality(g);
    case MeasureTag::kCNC: return closeness_centrality(g);
    case MeasureTag::kEC: return eigenvector_centrality(g, params.tol, params.max_iter);
    case MeasureTag::kPR: return pagerank(g, params.damping, params.tol, params.max_iter);
    case MeasureTag::kSDEG: return sdeg_centrality(g);
  }
  throw std::invalid_argument("unknown measure");
}

}  // namespace tricent

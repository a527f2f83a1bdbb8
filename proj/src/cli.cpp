#include "tricent/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tricent/centrality.hpp"
#include "tricent/errors.hpp"
#include "tricent/experiments.hpp"
#include "tricent/io.hpp"

namespace tricent::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { kCsv, kJson, kTsv };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  InputFormat input_format = InputFormat::kAuto;
  OutputFormat output_format = OutputFormat::kCsv;
  std::string measure = "TC";
  std::vector<std::string> measures;
  std::size_t k = 5;
  IterationParams iteration;
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_trials = 0;
  bool plot_series = false;
};

// A value rendered once as text; the JSON form is parsed back from that text
// so both emissions carry identical numbers.
struct Cell {
  std::string text;
  Json json;

  static Cell integer(long long v) { return {std::to_string(v), Json(v)}; }
  static Cell string(std::string s) { return {s, Json(s)}; }
  static Cell number(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return {buf, Json(std::stod(buf))};
  }
  static Cell score(double v) { return number("%.6g", v); }
  static Cell density(double v) { return number("%.4f", v); }
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  Json to_json() const {
    Json rows_json = Json::array();
    for (const auto& row : rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = row[c].json;
      rows_json.push_back(std::move(obj));
    }
    return rows_json;
  }
};

std::string escape_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_delimited(const Table& table, char sep, std::ostream& out) {
  auto field = [&](const std::string& s) { return sep == ',' ? escape_csv(s) : s; };
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << sep;
    out << field(table.header[c]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << sep;
      out << field(row[c].text);
    }
    out << '\n';
  }
}

std::string graph_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string join_nodes(const std::vector<NodeId>& nodes) {
  std::string out;
  for (NodeId id : nodes) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id.value);
  }
  return out;
}

MeasureTag require_measure(const std::string& name) {
  const auto tag = parse_measure(name);
  if (!tag) throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
  return *tag;
}

std::vector<MeasureTag> measure_list(const RunConfig& config) {
  if (config.measures.empty()) {
    return {std::begin(kComparisonMeasures), std::end(kComparisonMeasures)};
  }
  std::vector<MeasureTag> tags;
  for (const auto& name : config.measures) tags.push_back(require_measure(name));
  return tags;
}

Json params_json(const RunConfig& config) {
  Json p = Json::object();
  p["k"] = config.k;
  if (config.command == "rank") p["measure"] = std::string(to_string(require_measure(config.measure)));
  if (config.command == "compare" || config.command == "ablate") {
    Json list = Json::array();
    for (MeasureTag tag : measure_list(config)) list.push_back(std::string(to_string(tag)));
    p["measures"] = list;
  }
  p["damping"] = config.iteration.damping;
  p["tol"] = config.iteration.tol;
  p["max_iter"] = config.iteration.max_iter;
  p["seed"] = config.seed;
  if (config.command == "ablate") {
    p["random_trials"] = config.random_trials;
    p["plot_series"] = config.plot_series;
  }
  return p;
}

Graph load(const RunConfig& config, const std::string& path) {
  return read_graph(path, config.input_format);
}

Table rank_table(const RunConfig& config) {
  const Graph g = load(config, config.inputs.front());
  const auto scores = compute(g, require_measure(config.measure), config.iteration);
  Table table{{"rank", "node", "score"}, {}};
  long long rank = 0;
  for (NodeId id : rank_top_k(scores, config.k)) {
    table.rows.push_back({Cell::integer(++rank), Cell::integer(id.value), Cell::score(scores.at(id))});
  }
  return table;
}

Table compare_table(const RunConfig& config) {
  const Graph g = load(config, config.inputs.front());
  const auto tags = measure_list(config);
  const auto ranking = comparison_table(g, graph_name(config.inputs.front()), config.k,
                                        config.iteration, tags);
  Table table{{"rank"}, {}};
  for (const auto& column : ranking.columns) table.header.emplace_back(to_string(column.measure));
  const std::size_t depth = ranking.columns.empty() ? 0 : ranking.columns.front().nodes.size();
  for (std::size_t r = 0; r < depth; ++r) {
    std::vector<Cell> row{Cell::integer(static_cast<long long>(r + 1))};
    for (const auto& column : ranking.columns) row.push_back(Cell::integer(column.nodes[r].value));
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct AblateResult {
  Table table;
  std::vector<RemovalReport> reports;
};

AblateResult ablate_table(const RunConfig& config) {
  AblateResult result{{{"graph", "measure", "density", "nodes", "edges", "removed"}, {}}, {}};
  const auto tags = measure_list(config);
  for (const auto& path : config.inputs) {
    const Graph g = load(config, path);
    const std::string name = graph_name(path);
    auto report = removal_impact(g, name, config.k, config.iteration, tags);
    for (const auto& row : report.rows) {
      result.table.rows.push_back(
          {Cell::string(name), Cell::string(std::string(to_string(row.measure))),
           Cell::density(row.density), Cell::integer(static_cast<long long>(row.residual_nodes)),
           Cell::integer(static_cast<long long>(row.residual_edges)),
           Cell::string(join_nodes(row.removed))});
    }
    if (config.random_trials > 0) {
      const double mean = random_removal_density(g, config.k, config.random_trials, config.seed);
      result.table.rows.push_back(
          {Cell::string(name), Cell::string("RANDOM"), Cell::density(mean),
           Cell::integer(static_cast<long long>(g.node_count() - config.k)), Cell::string(""),
           Cell::string("")});
    }
    result.reports.push_back(std::move(report));
  }
  return result;
}

Table plot_table(const PlotSeries& plot) {
  Table table{{"measure"}, {}};
  table.header.insert(table.header.end(), plot.networks.begin(), plot.networks.end());
  for (const auto& line : plot.series) {
    std::vector<Cell> row{Cell::string(std::string(to_string(line.measure)))};
    for (double d : line.densities) row.push_back(Cell::density(d));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json plot_json(const PlotSeries& plot) {
  Json x = Json::array();
  for (std::size_t i = 0; i < plot.networks.size(); ++i) {
    x.push_back(Json{{"index", i + 1}, {"name", plot.networks[i]}});
  }
  Json series = Json::object();
  const Table table = plot_table(plot);
  for (const auto& row : table.rows) {
    Json values = Json::array();
    for (std::size_t c = 1; c < row.size(); ++c) values.push_back(row[c].json);
    series[row[0].text] = values;
  }
  return Json{{"x", x}, {"series", series}};
}

Table info_table(const RunConfig& config) {
  const Graph g = load(config, config.inputs.front());
  Cell dens = g.node_count() < 2 ? Cell::string("undefined") : Cell::score(density(g));
  return Table{{"graph", "nodes", "edges", "density", "triangles"},
               {{Cell::string(graph_name(config.inputs.front())),
                 Cell::integer(static_cast<long long>(g.node_count())),
                 Cell::integer(static_cast<long long>(g.edge_count())), dens,
                 Cell::integer(static_cast<long long>(global_triangle_count(g)))}}};
}

std::string render(const RunConfig& config, const Table& table, const PlotSeries* plot) {
  std::ostringstream out;
  if (config.output_format == OutputFormat::kJson) {
    Json doc = Json::object();
    if (config.inputs.size() == 1) {
      doc["graph"] = graph_name(config.inputs.front());
    } else {
      Json names = Json::array();
      for (const auto& path : config.inputs) names.push_back(graph_name(path));
      doc["graph"] = names;
    }
    doc["command"] = config.command;
    doc["params"] = params_json(config);
    doc["rows"] = table.to_json();
    if (plot) doc["plot_series"] = plot_json(*plot);
    out << doc.dump(2) << '\n';
    return out.str();
  }
  const char sep = config.output_format == OutputFormat::kTsv ? '\t' : ',';
  write_delimited(table, sep, out);
  if (plot) {
    out << '\n';
    write_delimited(plot_table(*plot), sep, out);
  }
  return out.str();
}

std::string execute(const RunConfig& config) {
  if (config.command == "rank") return render(config, rank_table(config), nullptr);
  if (config.command == "compare") return render(config, compare_table(config), nullptr);
  if (config.command == "info") return render(config, info_table(config), nullptr);

  auto result = ablate_table(config);
  if (config.plot_series) {
    const PlotSeries plot = tricent::plot_series(result.reports);
    return render(config, result.table, &plot);
  }
  return render(config, result.table, nullptr);
}

void add_common_options(CLI::App& sub, RunConfig& config, bool many_inputs) {
  if (many_inputs) {
    sub.add_option("input", config.inputs, "Graph files (.net = Pajek, else edge list)")
        ->required();
  } else {
    sub.add_option("input", config.inputs, "Graph file (.net = Pajek, else edge list)")
        ->required()
        ->expected(1);
  }
  sub.add_option("--input-format", config.input_format, "Input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"auto", InputFormat::kAuto},
                                             {"pajek", InputFormat::kPajek},
                                             {"edgelist", InputFormat::kEdgeList}},
          CLI::ignore_case)
                      .description("auto|pajek|edgelist"));
  sub.add_option("--format", config.output_format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::kCsv},
                                              {"json", OutputFormat::kJson},
                                              {"tsv", OutputFormat::kTsv}},
          CLI::ignore_case)
                      .description("csv|json|tsv"));
  sub.add_option("--k", config.k, "Number of top nodes")->capture_default_str();
  sub.add_option("--damping", config.iteration.damping, "PageRank damping in (0,1)")
      ->capture_default_str();
  sub.add_option("--tol", config.iteration.tol, "Convergence tolerance for EC and PR")
      ->capture_default_str();
  sub.add_option("--max-iter", config.iteration.max_iter, "Iteration cap for EC and PR")
      ->capture_default_str();
  sub.add_option("--seed", config.seed, "Seed for the random-removal baseline")
      ->capture_default_str();
}

void validate(const RunConfig& config) {
  if (config.k < 1) throw CLI::ValidationError("--k", "must be at least 1");
  if (config.command == "rank") require_measure(config.measure);
  if (!(config.iteration.damping > 0.0 && config.iteration.damping < 1.0)) {
    throw CLI::ValidationError("--damping", "must lie strictly between 0 and 1");
  }
  if (!(config.iteration.tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
  measure_list(config);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Tr-centrality and comparison centralities for undirected graphs", "tricent"};
  app.require_subcommand(1);

  auto* rank = app.add_subcommand("rank", "Top-k nodes of one measure with scores");
  add_common_options(*rank, config, false);
  rank->add_option("--measure", config.measure, "TC, TR, DC, BC, CNC, EC, PR or SDEG")
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Top-k node table, one column per measure");
  add_common_options(*compare, config, false);
  compare->add_option("--measures", config.measures, "Comma-separated measures")
      ->delimiter(',');

  auto* ablate = app.add_subcommand("ablate", "Residual density after removing each top-k set");
  add_common_options(*ablate, config, true);
  ablate->add_option("--measures", config.measures, "Comma-separated measures")
      ->delimiter(',');
  ablate->add_option("--random-trials", config.random_trials,
                     "Add a random-removal baseline averaged over N trials");
  ablate->add_flag("--plot-series", config.plot_series,
                   "Append per-measure density series across the inputs");

  auto* info = app.add_subcommand("info", "Node, edge, density and triangle counts");
  add_common_options(*info, config, false);

  std::vector<std::string> argv_storage{"tricent"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    config.command = app.get_subcommands().front()->get_name();
    validate(config);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    out << execute(config);
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const DomainError& e) {
    err << "invalid parameter for graph: " << e.what() << '\n';
    return kInvalidForGraph;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tricent::cli

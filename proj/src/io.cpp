#include "tricent/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tricent/errors.hpp"

namespace tricent {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    if (line[pos] == '"') {
      // Quoted Pajek label.
      end = line.find('"', pos + 1);
      end = end == std::string_view::npos ? line.size() : end + 1;
    } else {
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    }
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::optional<std::int64_t> parse_int(std::string_view token) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

bool is_number(std::string_view token) {
  if (token.empty()) return false;
  std::string copy(token);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  return end == copy.c_str() + copy.size() && std::isfinite(value);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

enum class Section { kNone, kVertices, kPairs, kList, kMatrix, kIgnored };

}  // namespace

Graph parse_pajek(std::istream& in) {
  std::vector<Edge> edges;
  std::int64_t vertex_count = -1;
  Section section = Section::kNone;
  std::int64_t matrix_row = 0;

  auto vertex = [&](std::string_view token, std::size_t line_no) {
    const auto id = parse_int(token);
    if (!id) throw ParseError(line_no, "non-numeric vertex id '" + std::string(token) + "'");
    if (*id < 1 || *id > vertex_count) {
      throw ParseError(line_no, "vertex id " + std::to_string(*id) + " outside 1.." +
                                    std::to_string(vertex_count));
    }
    return NodeId{*id};
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '%') continue;

    if (tokens.front().front() == '*') {
      const std::string keyword = lower(tokens.front());
      if (keyword == "*vertices") {
        if (vertex_count >= 0) throw ParseError(line_no, "duplicate *Vertices header");
        const auto n = tokens.size() >= 2 ? parse_int(tokens[1]) : std::nullopt;
        if (!n || *n < 0) throw ParseError(line_no, "malformed *Vertices header");
        vertex_count = *n;
        section = Section::kVertices;
        continue;
      }
      const bool known_edges = keyword == "*edges" || keyword == "*arcs";
      const bool known_lists = keyword == "*edgeslist" || keyword == "*arcslist";
      const bool known_matrix = keyword == "*matrix";
      if ((known_edges || known_lists || known_matrix) && vertex_count < 0) {
        throw ParseError(line_no, std::string(tokens.front()) + " before *Vertices header");
      }
      if (known_edges) {
        section = Section::kPairs;
      } else if (known_lists) {
        section = Section::kList;
      } else if (known_matrix) {
        section = Section::kMatrix;
        matrix_row = 0;
      } else if (keyword == "*network" || keyword == "*description" || keyword == "*date" ||
                 keyword == "*comment") {
        // Single-line metadata; keep the current section.
      } else {
        section = Section::kIgnored;
      }
      continue;
    }

    switch (section) {
      case Section::kNone:
        throw ParseError(line_no, "data before *Vertices header");
      case Section::kVertices:
        vertex(tokens[0], line_no);
        break;
      case Section::kPairs: {
        if (tokens.size() < 2) throw ParseError(line_no, "edge line needs two vertex ids");
        const NodeId u = vertex(tokens[0], line_no);
        const NodeId v = vertex(tokens[1], line_no);
        if (tokens.size() >= 3 && !is_number(tokens[2])) {
          throw ParseError(line_no, "non-numeric weight '" + std::string(tokens[2]) + "'");
        }
        edges.emplace_back(u, v);
        break;
      }
      case Section::kList: {
        const NodeId u = vertex(tokens[0], line_no);
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          edges.emplace_back(u, vertex(tokens[t], line_no));
        }
        break;
      }
      case Section::kMatrix: {
        ++matrix_row;
        if (matrix_row > vertex_count) throw ParseError(line_no, "too many matrix rows");
        if (static_cast<std::int64_t>(tokens.size()) != vertex_count) {
          throw ParseError(line_no, "matrix row needs " + std::to_string(vertex_count) +
                                        " entries");
        }
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          if (!is_number(tokens[t])) {
            throw ParseError(line_no, "non-numeric matrix entry '" + std::string(tokens[t]) + "'");
          }
          if (std::strtod(std::string(tokens[t]).c_str(), nullptr) != 0.0) {
            edges.emplace_back(NodeId{matrix_row}, NodeId{static_cast<std::int64_t>(t) + 1});
          }
        }
        break;
      }
      case Section::kIgnored:
        break;
    }
  }
  if (vertex_count < 0) throw ParseError(line_no, "missing *Vertices header");

  std::vector<NodeId> declared;
  declared.reserve(static_cast<std::size_t>(vertex_count));
  for (std::int64_t id = 1; id <= vertex_count; ++id) declared.push_back(NodeId{id});
  return Graph::from_edge_list(edges, declared);
}

Graph parse_pajek(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pajek(in);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<NodeId> isolated;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const auto u = parse_int(tokens[0]);
    if (!u) throw ParseError(line_no, "non-numeric node id '" + std::string(tokens[0]) + "'");
    if (tokens.size() == 1) {
      isolated.push_back(NodeId{*u});
      continue;
    }
    const auto v = parse_int(tokens[1]);
    if (!v) throw ParseError(line_no, "non-numeric node id '" + std::string(tokens[1]) + "'");
    edges.emplace_back(NodeId{*u}, NodeId{*v});
  }
  return Graph::from_edge_list(edges, isolated);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.degree_at(i) == 0) out << g.label(i) << '\n';
  }
}

void write_pajek(const Graph& g, std::ostream& out) {
  const std::int64_t n = g.empty() ? 0 : g.nodes().back().value;
  if (!g.empty() && g.nodes().front().value < 1) {
    throw DomainError("Pajek output needs positive node labels");
  }
  out << "*Vertices " << n << '\n';
  out << "*Edges\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

InputFormat resolve_format(const std::filesystem::path& path, InputFormat requested) {
  if (requested != InputFormat::kAuto) return requested;
  return lower(path.extension().string()) == ".net" ? InputFormat::kPajek
                                                    : InputFormat::kEdgeList;
}

Graph read_graph(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return resolve_format(path, format) == InputFormat::kPajek ? parse_pajek(in)
                                                             : parse_edge_list(in);
}

}  // namespace tricent

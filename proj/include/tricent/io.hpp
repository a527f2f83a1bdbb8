#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "tricent/graph.hpp"

namespace tricent {

enum class InputFormat { kAuto, kPajek, kEdgeList };

// Pajek .net reader. Vertex ids are the file's 1-based integers; every
// declared vertex is kept. *Edges and *Arcs (plus their *list forms and
// *Matrix) all become undirected edges; weights are ignored. Lines starting
// with '%' are comments and section keywords are case-insensitive.
// Throws ParseError naming the offending line.
Graph parse_pajek(std::istream& in);
Graph parse_pajek(std::string_view text);

// One "u v" pair per line; '#' starts a comment. Tokens after the pair are
// ignored. A line holding a single id declares an isolated node.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Writes every edge as "u v" (ascending) followed by isolated nodes as lone ids.
void write_edge_list(const Graph& g, std::ostream& out);

// Requires labels within 1..max label; writes *Vertices max and an *Edges section.
void write_pajek(const Graph& g, std::ostream& out);

// .net resolves to Pajek, anything else to an edge list.
InputFormat resolve_format(const std::filesystem::path& path, InputFormat requested);

// Unreadable files raise ParseError with line 0.
Graph read_graph(const std::filesystem::path& path, InputFormat format = InputFormat::kAuto);

}  // namespace tricent

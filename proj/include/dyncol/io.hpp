#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dyncol/drawing.hpp"
#include "dyncol/graph.hpp"

namespace dyncol {

/// Parse failure with the 1-based line it happened on (0 when not line-bound).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

// Graph text: `v <id>` and `e <id1> <id2>` records, `#` comments.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Drawing text: `v <id>`, `e <eid> <u> <v>`, `x <eid1> <eid2>`,
// `r <vid> <eid>...`, `rx <eid1>x<eid2> <eid>:<vid>...`.
// Rotations of vertices with degree <= 2 may be omitted, as may crossing
// rotations; both are filled in after parsing when the rest is sound.
OnePlaneDrawing parse_drawing(std::istream& in);
OnePlaneDrawing parse_drawing(std::string_view text);
std::string format_drawing(const OnePlaneDrawing& d);

// `l <vid> <color>...`
ListAssignment parse_lists(std::istream& in);
ListAssignment parse_lists(std::string_view text);
std::string format_lists(const ListAssignment& lists);

// `c <vid> <color>`
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// True when the text uses drawing records (`x`, `r`, `rx` or three-field `e`).
bool looks_like_drawing(std::string_view text);
/// Graph from either a graph file or a drawing file.
Graph parse_any_graph(std::string_view text);

}  // namespace dyncol

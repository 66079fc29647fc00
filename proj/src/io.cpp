#include "dyncol/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dyncol {

ParseError::ParseError(int line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Record {
  int line = 0;
  std::vector<std::string> fields;
};

std::vector<Record> tokenize(std::istream& in) {
  std::vector<Record> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream fields(text);
    Record r{line, {}};
    for (std::string f; fields >> f;) r.fields.push_back(f);
    if (!r.fields.empty()) out.push_back(std::move(r));
  }
  return out;
}

int to_int(const Record& r, const std::string& field) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(r.line, "expected an integer, got '" + field + "'");
  }
  return value;
}

void expect_fields(const Record& r, std::size_t n) {
  if (r.fields.size() != n) {
    throw ParseError(r.line, "'" + r.fields[0] + "' record needs " + std::to_string(n - 1) + " fields");
  }
}

template <typename Parse>
auto from_text(std::string_view text, Parse parse) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::vector<Record> records = tokenize(in);
  Graph g;
  for (const Record& r : records) {
    if (r.fields[0] == "v") {
      expect_fields(r, 2);
      g.insert_vertex(VertexId{to_int(r, r.fields[1])});
    }
  }
  for (const Record& r : records) {
    const std::string& tag = r.fields[0];
    if (tag == "v") continue;
    if (tag != "e") throw ParseError(r.line, "unknown record '" + tag + "'");
    expect_fields(r, 3);
    VertexId u{to_int(r, r.fields[1])};
    VertexId v{to_int(r, r.fields[2])};
    if (u == v) throw ParseError(r.line, "loop at vertex " + std::to_string(u.value));
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw ParseError(r.line, "edge names an undeclared vertex");
    if (g.has_edge(u, v)) throw ParseError(r.line, "duplicate edge");
    g.insert_edge(u, v);
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  return from_text(text, [](std::istream& in) { return parse_graph(in); });
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) out << "v " << v << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

OnePlaneDrawing parse_drawing(std::istream& in) {
  std::vector<Record> records = tokenize(in);
  OnePlaneDrawing d;
  auto wrap = [](const Record& r, auto&& action) {
    try {
      action();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(r.line, e.what());
    }
  };
  // Declaration order does not matter: vertices, then edges, then the rest.
  for (const Record& r : records) {
    if (r.fields[0] == "v") {
      expect_fields(r, 2);
      d.insert_vertex(VertexId{to_int(r, r.fields[1])});
    }
  }
  for (const Record& r : records) {
    if (r.fields[0] != "e") continue;
    expect_fields(r, 4);
    EdgeId id{to_int(r, r.fields[1])};
    VertexId u{to_int(r, r.fields[2])};
    VertexId v{to_int(r, r.fields[3])};
    if (!d.graph().has_vertex(u) || !d.graph().has_vertex(v)) {
      throw ParseError(r.line, "edge names an undeclared vertex");
    }
    wrap(r, [&] { d.insert_edge(id, u, v); });
  }
  for (const Record& r : records) {
    if (r.fields[0] != "x") continue;
    expect_fields(r, 3);
    wrap(r, [&] { d.insert_crossing(EdgeId{to_int(r, r.fields[1])}, EdgeId{to_int(r, r.fields[2])}); });
  }
  for (const Record& r : records) {
    const std::string& tag = r.fields[0];
    if (tag == "v" || tag == "e" || tag == "x") continue;
    if (tag == "r") {
      if (r.fields.size() < 2) throw ParseError(r.line, "'r' record needs a vertex");
      VertexId v{to_int(r, r.fields[1])};
      std::vector<EdgeId> rot;
      for (std::size_t i = 2; i < r.fields.size(); ++i) rot.push_back(EdgeId{to_int(r, r.fields[i])});
      wrap(r, [&] { d.set_rotation(v, rot); });
    } else if (tag == "rx") {
      expect_fields(r, 6);
      const std::string& name = r.fields[1];
      auto x = name.find('x');
      if (x == std::string::npos) throw ParseError(r.line, "crossing must be written <eid>x<eid>");
      CrossingPair c = CrossingPair::of(EdgeId{to_int(r, name.substr(0, x))}, EdgeId{to_int(r, name.substr(x + 1))});
      CrossingRotation rot;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::string& half = r.fields[i + 2];
        auto colon = half.find(':');
        if (colon == std::string::npos) throw ParseError(r.line, "half-edge must be written <eid>:<vid>");
        rot[i] = HalfEdge{EdgeId{to_int(r, half.substr(0, colon))}, VertexId{to_int(r, half.substr(colon + 1))}};
      }
      wrap(r, [&] { d.set_crossing_rotation(c, rot); });
    } else {
      throw ParseError(r.line, "unknown record '" + tag + "'");
    }
  }
  for (VertexId v : d.graph().vertices()) {
    if (d.has_rotation(v) || d.graph().degree(v) == 0 || d.graph().degree(v) > 2) continue;
    std::vector<EdgeId> rot;
    for (VertexId w : d.graph().neighbors(v)) rot.push_back(*d.edge_between(v, w));
    d.set_rotation(v, rot);
  }
  try {
    complete_crossing_rotations(d);
  } catch (const DrawingError&) {
    // Left incomplete; validate_drawing reports the missing rotations.
  }
  return d;
}

OnePlaneDrawing parse_drawing(std::string_view text) {
  return from_text(text, [](std::istream& in) { return parse_drawing(in); });
}

std::string format_drawing(const OnePlaneDrawing& d) {
  std::ostringstream out;
  for (VertexId v : d.graph().vertices()) out << "v " << v << '\n';
  for (const auto& [id, ends] : d.edges()) out << "e " << id << ' ' << ends.u << ' ' << ends.v << '\n';
  for (const CrossingPair& c : d.crossings()) out << "x " << c.first << ' ' << c.second << '\n';
  for (const auto& [v, rot] : d.rotations()) {
    out << "r " << v;
    for (EdgeId e : rot) out << ' ' << e;
    out << '\n';
  }
  for (const auto& [c, rot] : d.crossing_rotations()) {
    out << "rx " << c.first << 'x' << c.second;
    for (const HalfEdge& h : rot) out << ' ' << h.edge << ':' << h.end;
    out << '\n';
  }
  return out.str();
}

ListAssignment parse_lists(std::istream& in) {
  ListAssignment lists;
  for (const Record& r : tokenize(in)) {
    if (r.fields[0] != "l") throw ParseError(r.line, "unknown record '" + r.fields[0] + "'");
    if (r.fields.size() < 3) throw ParseError(r.line, "a list needs at least one color");
    VertexId v{to_int(r, r.fields[1])};
    if (lists.contains(v)) throw ParseError(r.line, "second list for vertex " + std::to_string(v.value));
    ColorList colors;
    for (std::size_t i = 2; i < r.fields.size(); ++i) {
      int c = to_int(r, r.fields[i]);
      if (c <= 0) throw ParseError(r.line, "colors are positive integers");
      if (!colors.insert(c).second) throw ParseError(r.line, "repeated color in list");
    }
    lists.emplace(v, std::move(colors));
  }
  return lists;
}

ListAssignment parse_lists(std::string_view text) {
  return from_text(text, [](std::istream& in) { return parse_lists(in); });
}

std::string format_lists(const ListAssignment& lists) {
  std::ostringstream out;
  for (const auto& [v, colors] : lists) {
    out << "l " << v;
    for (Color c : colors) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::istream& in) {
  Coloring coloring;
  for (const Record& r : tokenize(in)) {
    if (r.fields[0] != "c") throw ParseError(r.line, "unknown record '" + r.fields[0] + "'");
    expect_fields(r, 3);
    VertexId v{to_int(r, r.fields[1])};
    int c = to_int(r, r.fields[2]);
    if (c <= 0) throw ParseError(r.line, "colors are positive integers");
    if (!coloring.emplace(v, c).second) throw ParseError(r.line, "vertex colored twice");
  }
  return coloring;
}

Coloring parse_coloring(std::string_view text) {
  return from_text(text, [](std::istream& in) { return parse_coloring(in); });
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  for (const auto& [v, color] : c) out << "c " << v << ' ' << color << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

bool looks_like_drawing(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (const Record& r : tokenize(in)) {
    const std::string& tag = r.fields[0];
    if (tag == "x" || tag == "r" || tag == "rx" || (tag == "e" && r.fields.size() == 4)) return true;
  }
  return false;
}

Graph parse_any_graph(std::string_view text) {
  return looks_like_drawing(text) ? parse_drawing(text).graph() : parse_graph(text);
}

}  // namespace dyncol

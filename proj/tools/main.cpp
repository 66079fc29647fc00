#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyncol/catalog.hpp"
#include "dyncol/coloring.hpp"
#include "dyncol/discharge.hpp"
#include "dyncol/io.hpp"
#include "dyncol/reduce.hpp"
#include "selftest.hpp"

namespace fs = std::filesystem;
using namespace dyncol;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::string format = "text";
  bool trace = false;
  std::uint64_t seed = 0;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const nlohmann::ordered_json& j, const std::string& text) {
  if (json_out(o)) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

void output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

int cmd_check(const Options& o, const std::string& graph_file, const std::string& coloring_file, bool dynamic) {
  Graph g = parse_any_graph(read_file(graph_file));
  Coloring c = parse_coloring(read_file(coloring_file));
  for (VertexId v : g.vertices()) {
    if (!c.contains(v)) throw ColoringError("coloring does not cover vertex " + std::to_string(v.value));
  }
  auto bad = first_violation(g, c, dynamic);
  nlohmann::ordered_json j{{"valid", !bad}, {"dynamic", dynamic}};
  if (bad) j["violation"] = *bad;
  emit(o, j, bad ? "invalid: " + *bad + "\n" : std::string("valid\n"));
  return bad ? kInvalid : kOk;
}

int cmd_solve(const Options& o, const std::string& graph_file, const std::string& param, std::optional<int> ell) {
  Graph g = parse_any_graph(read_file(graph_file));
  SolverConfig config;
  nlohmann::ordered_json j{{"param", param}};
  if (param == "chi" || param == "chid") {
    SolveReport r = param == "chi" ? chi(g, config) : chi_dynamic(g, config);
    fs::path witness = graph_file + "." + param + ".coloring";
    write_file(witness, format_coloring(r.witness));
    j["value"] = r.value;
    j["witness"] = witness.string();
    emit(o, j, param + " = " + std::to_string(r.value) + "\nwitness: " + witness.string() + "\n");
    return kOk;
  }
  bool dynamic = param == "chd";
  if (ell) {
    ChoosabilityReport r = choosable(g, *ell, dynamic, config);
    j["ell"] = *ell;
    j["choosable"] = r.choosable;
    std::string text = param + " <= " + std::to_string(*ell) + ": " + (r.choosable ? "yes" : "no") + "\n";
    if (r.counterexample) {
      fs::path cx = graph_file + "." + param + std::to_string(*ell) + ".lists";
      write_file(cx, format_lists(*r.counterexample));
      j["counterexample"] = cx.string();
      text += "counterexample: " + cx.string() + "\n";
    }
    emit(o, j, text);
    return r.choosable ? kOk : kInvalid;
  }
  for (int k = 1; k <= config.choosability_max_ell; ++k) {
    ChoosabilityReport r = choosable(g, k, dynamic, config);
    if (!r.choosable) {
      fs::path cx = graph_file + "." + param + std::to_string(k) + ".lists";
      write_file(cx, format_lists(*r.counterexample));
      continue;
    }
    j["value"] = k;
    emit(o, j, param + " = " + std::to_string(k) + "\n");
    return kOk;
  }
  throw CapExceeded(param + " exceeds the list-size cap " + std::to_string(config.choosability_max_ell));
}

int cmd_color11(const Options& o, const std::string& drawing_file, const std::string& lists_file, int uniform,
                const std::string& out) {
  OnePlaneDrawing d = parse_drawing(read_file(drawing_file));
  ListAssignment lists = lists_file.empty() ? uniform_lists(d.graph(), uniform) : parse_lists(read_file(lists_file));
  ColorRun run = color_1planar(d, lists);
  if (o.trace) {
    for (const TraceLine& t : run.trace) std::cerr << t.str() << '\n';
  }
  if (json_out(o)) {
    nlohmann::ordered_json j;
    for (const auto& [v, c] : run.coloring) j["coloring"][std::to_string(v.value)] = c;
    j["fallback"] = run.used_fallback;
    if (o.trace) {
      for (const TraceLine& t : run.trace) j["trace"].push_back(t.str());
    }
    output(out, j.dump(2) + "\n");
  } else {
    output(out, format_coloring(run.coloring));
  }
  return kOk;
}

int cmd_discharge(const Options& o, const std::string& drawing_file) {
  OnePlaneDrawing d = parse_drawing(read_file(drawing_file));
  DischargeReport r = discharge(d);
  if (json_out(o)) {
    std::cout << format_report_json(d, r);
  } else {
    std::cout << format_report_text(d, r) << "\n--- json ---\n" << format_report_json(d, r);
  }
  return kOk;
}

int cmd_generate(const Options& o, const std::string& family, int n, const std::string& out) {
  OnePlaneDrawing d;
  if (family == "cycle") {
    d = cycle_drawing(n);
  } else if (family == "path") {
    d = path_drawing(n);
  } else if (family == "complete") {
    if (n >= 7) throw DrawingError("K_" + std::to_string(n) + " is not 1-planar; no drawing produced");
    d = complete_drawing(n);
  } else if (family == "complete-subdiv") {
    d = complete_subdivision_drawing(n);
  } else if (family == "random-planar") {
    d = random_planar_drawing(n, o.seed);
  } else if (family == "random-1plane") {
    d = random_1plane_drawing(n, o.seed);
  } else {
    throw CLI::ValidationError("family", "unknown family " + family);
  }
  output(out, format_drawing(d));
  return kOk;
}

int cmd_fixtures(const std::string& dir) {
  for (const Fixture& f : fixtures()) {
    std::cout << f.name << "  " << f.note << '\n';
    if (!dir.empty()) {
      fs::create_directories(dir);
      write_file(fs::path(dir) / (f.name + ".drawing"), "# " + f.note + "\n" + format_drawing(f.drawing));
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic list coloring of 1-planar graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", o.trace, "Print the reduction trace (color11)");
  app.add_option("--seed", o.seed, "Seed for random families");

  std::string graph_file, coloring_file, drawing_file, lists_file, out, family, param, dir;
  bool dynamic = false;
  std::optional<int> ell;
  int uniform = 11;
  int n = 0;

  auto* check = app.add_subcommand("check", "Check a coloring");
  check->add_option("graph", graph_file)->required();
  check->add_option("coloring", coloring_file)->required();
  check->add_flag("--dynamic", dynamic);

  auto* solve = app.add_subcommand("solve", "Exact chi, chi_d, ch or ch_d");
  solve->add_option("graph", graph_file)->required();
  solve->add_option("--param", param)->required()->check(CLI::IsMember({"chi", "chid", "ch", "chd"}));
  solve->add_option("--ell", ell, "Decide ell-choosability instead");

  auto* color = app.add_subcommand("color11", "Dynamic list coloring of a 1-plane drawing");
  color->add_option("drawing", drawing_file)->required();
  auto* lists_opt = color->add_option("--lists", lists_file);
  color->add_option("--uniform-lists", uniform, "Use lists {1..N}")->excludes(lists_opt);
  color->add_option("--out", out, "Coloring file (default stdout)");

  auto* dis = app.add_subcommand("discharge", "Discharging report");
  dis->add_option("drawing", drawing_file)->required();

  auto* gen = app.add_subcommand("generate", "Write a graph family as a drawing");
  gen->add_option("family", family)->required()->check(
      CLI::IsMember({"cycle", "path", "complete", "complete-subdiv", "random-planar", "random-1plane"}));
  gen->add_option("n", n)->required();
  gen->add_option("--out", out);

  auto* fix = app.add_subcommand("fixtures", "List the fixture drawings");
  fix->add_option("--out-dir", dir, "Also write them here");

  auto* self = app.add_subcommand("selftest", "Run the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o, graph_file, coloring_file, dynamic);
    if (*solve) return cmd_solve(o, graph_file, param, ell);
    if (*color) return cmd_color11(o, drawing_file, lists_file, uniform, out);
    if (*dis) return cmd_discharge(o, drawing_file);
    if (*gen) return cmd_generate(o, family, n, out);
    if (*fix) return cmd_fixtures(dir);
    if (*self) return run_selftest(std::cout) ? kOk : kInvalid;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

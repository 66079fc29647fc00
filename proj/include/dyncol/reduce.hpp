#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyncol/coloring.hpp"
#include "dyncol/drawing.hpp"

namespace dyncol {

class ReductionError : public Error {
 public:
  using Error::Error;
};

/// The configuration no longer matches the drawing it is applied to.
class StaleConfiguration : public ReductionError {
 public:
  using ReductionError::ReductionError;
};

class ExtensionError : public Error {
 public:
  using Error::Error;
};

enum class ConfigKind {
  MinDeg1,
  AdjacentTwos,
  SmallEdge2,
  SmallEdgeGeneral,
  TriangleSmall,
  FalseTriangleTrueSmall,
  BigFaceSmall,
};

std::string_view to_string(ConfigKind kind);

/// Color `vertex` avoiding the current colors of `forbidden`.
struct RecipeStep {
  VertexId vertex;
  std::vector<VertexId> forbidden;
};

struct ExtensionRecipe {
  ConfigKind kind = ConfigKind::MinDeg1;
  Graph parent;
  std::vector<RecipeStep> steps;
  /// When set, `alternate` replaces `steps` if all of these carry one color.
  std::vector<VertexId> branch_on;
  std::vector<RecipeStep> alternate;
};

struct ReducibleConfig {
  ConfigKind kind = ConfigKind::MinDeg1;
  std::vector<std::pair<std::string, VertexId>> roles;
  std::set<VertexId> deleted;
  /// Edge added by the reduction (vw, or u'v in the false-w big-face case).
  std::optional<std::pair<VertexId, VertexId>> added_edge;
  /// Edge the added edge crosses, if any.
  std::optional<EdgeId> crossed_by;
  ExtensionRecipe recipe;
  std::size_t fingerprint = 0;

  [[nodiscard]] std::optional<VertexId> role(std::string_view name) const;
  [[nodiscard]] std::string describe() const;
};

std::size_t drawing_fingerprint(const OnePlaneDrawing& d);

std::optional<ReducibleConfig> find_reducible_configuration(const OnePlaneDrawing& d, int ell = 11);

/// Every configuration of one kind, one per anchor vertex, in scan order.
std::vector<ReducibleConfig> find_configurations(const OnePlaneDrawing& d, ConfigKind kind, int ell = 11);

struct Reduction {
  OnePlaneDrawing drawing;
  ExtensionRecipe recipe;
};

Reduction reduce(const OnePlaneDrawing& d, const ReducibleConfig& cfg);

Coloring extend_coloring(const Coloring& reduced, const ExtensionRecipe& recipe, const ListAssignment& lists);

/// The 6-face redrawing: a 6-face alternating between special 2-vertices and
/// crossings is resolved by moving two of the three 2-vertices.
std::optional<OnePlaneDrawing> improve_drawing_6face(const OnePlaneDrawing& d);

struct TraceLine {
  std::string kind;
  std::string detail;
  int before = 0;
  int after = 0;

  [[nodiscard]] std::string str() const;
};

struct ColorRun {
  Coloring coloring;
  std::vector<TraceLine> trace;
  bool used_fallback = false;
};

struct ColorOptions {
  int ell = 11;
  int base_vertices = 9;
  SolverConfig solver;
};

/// Dynamic L-coloring of a 1-plane drawing by reductions, redrawings and
/// exact search on small (or irreducible) remainders.
ColorRun color_1planar(const OnePlaneDrawing& d, const ListAssignment& lists, const ColorOptions& options = {});

ListAssignment uniform_lists(const Graph& g, int ell);

}  // namespace dyncol

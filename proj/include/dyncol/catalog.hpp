#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyncol/drawing.hpp"

namespace dyncol {

struct Fixture {
  std::string name;
  OnePlaneDrawing drawing;
  std::string note;
};

/// Straight-line K_6: a triangular prism with both diagonals in each quad.
OnePlaneDrawing k6_drawing();
/// The 2-subdivision of K_7, drawn 1-planarly from a straight-line K_7 in
/// which every edge is crossed at most twice. Branch vertices keep ids 0..6
/// and the vertex on the k-th edge (lexicographic) is 7 + k.
OnePlaneDrawing k7_star_drawing();
/// K_n for n <= 6, cut out of the K_6 drawing.
OnePlaneDrawing complete_drawing(int n);
/// 2-subdivision of K_n for n <= 7, cut out of the K_7 layout.
OnePlaneDrawing complete_subdivision_drawing(int n);
/// Three 2-vertices on one 6-face, each the low vertex of a special 4-face.
OnePlaneDrawing six_face_drawing();
/// Triangle of three 11-vertices (the fans point outward).
OnePlaneDrawing big_triangle_drawing();
/// False 3-face whose two true vertices have degree 9.
OnePlaneDrawing false_triangle_drawing();
/// A single special 4-face: an 11-vertex and a 2-vertex joined through two crossings.
OnePlaneDrawing special_4face_drawing();
/// Two crossing edges ac, bd and nothing else.
OnePlaneDrawing crossing_star_drawing();
OnePlaneDrawing cycle_drawing(int n);
OnePlaneDrawing path_drawing(int n);
OnePlaneDrawing wheel_drawing(int rim);
OnePlaneDrawing octahedron_drawing();
/// Plane C_4 plus both diagonals drawn crossing inside.
OnePlaneDrawing crossed_square_drawing();
/// Disjoint union; ids of `b` are shifted past those of `a`.
OnePlaneDrawing disjoint_union(const OnePlaneDrawing& a, const OnePlaneDrawing& b);

std::vector<Fixture> fixtures();
const Fixture& fixture(const std::string& name);

/// Random straight-line plane graph on n points; edges are tried in random
/// order and kept with probability `density` when they cross nothing.
OnePlaneDrawing random_planar_drawing(int n, std::uint64_t seed, double density = 0.7);
/// Like random_planar_drawing, but an edge may cross one edge that is not
/// crossed yet.
OnePlaneDrawing random_1plane_drawing(int n, std::uint64_t seed, double density = 0.7);

/// All graphs on vertices 0..n-1 up to isomorphism.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_planar_graphs(int n);
bool is_planar(const Graph& g);
bool is_connected(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace dyncol

#pragma once

#include <memory>

#include "equihodge/complex.hpp"

namespace samples {

using namespace equihodge;

inline std::shared_ptr<const GroupModel> cyclic_group(int n) {
  return std::make_shared<GroupModel>(GroupModel::cyclic(n));
}

inline std::vector<std::vector<int>> rotations(int vertices, int order, int step) {
  std::vector<std::vector<int>> maps;
  for (int g = 0; g < order; ++g) {
    std::vector<int> m;
    for (int v = 0; v < vertices; ++v) m.push_back((v + g * step) % vertices);
    maps.push_back(m);
  }
  return maps;
}

inline std::vector<std::vector<int>> cycle_edges(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return e;
}

inline std::vector<std::vector<int>> points(int n) {
  std::vector<std::vector<int>> v;
  for (int i = 0; i < n; ++i) v.push_back({i});
  return v;
}

/// Hexagon, Z/3 rotating by two steps.
inline SimplicialGComplex hexagon_rotation() {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 6;
  s.simplices = {points(6), cycle_edges(6)};
  s.vertex_maps = rotations(6, 3, 2);
  return SimplicialGComplex::finite(cyclic_group(3), s);
}

/// Hexagon, Z/2 acting by v -> -v.
inline SimplicialGComplex hexagon_reflection() {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 6;
  s.simplices = {points(6), cycle_edges(6)};
  s.vertex_maps = {{0, 1, 2, 3, 4, 5}, {0, 5, 4, 3, 2, 1}};
  return SimplicialGComplex::finite(cyclic_group(2), s);
}

/// Seven-vertex torus, Z/7 by translation.
inline SimplicialGComplex seven_vertex_torus() {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 7;
  std::vector<std::vector<int>> edges, triangles;
  for (int i = 0; i < 7; ++i)
    for (int d : {1, 2, 3}) edges.push_back({i, (i + d) % 7});
  for (int i = 0; i < 7; ++i) {
    triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
    triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  s.simplices = {points(7), edges, triangles};
  s.vertex_maps = rotations(7, 7, 1);
  return SimplicialGComplex::finite(cyclic_group(7), s);
}

/// Octahedron with the antipodal Z/2 (pairs 0-1, 2-3, 4-5).
inline SimplicialGComplex antipodal_octahedron() {
  SimplicialGComplex::FiniteSpec s;
  s.vertex_count = 6;
  std::vector<std::vector<int>> edges, triangles;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if ((a ^ 1) != b) edges.push_back({a, b});
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) triangles.push_back({a, b, c});
  s.simplices = {points(6), edges, triangles};
  s.vertex_maps = {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}};
  return SimplicialGComplex::finite(cyclic_group(2), s);
}

/// The real line with two vertex orbits, Z acting by translation.
inline SimplicialGComplex periodic_line() {
  SimplicialGComplex::PeriodicSpec s;
  s.vertex_orbits = 2;
  s.simplices = {{{Vertex(0, {0})}, {Vertex(1, {0})}},
                 {{Vertex(0, {0}), Vertex(1, {0})}, {Vertex(1, {0}), Vertex(0, {1})}}};
  return SimplicialGComplex::periodic(std::make_shared<GroupModel>(GroupModel::free_abelian(1)), s);
}

}  // namespace samples

#pragma once

#include <vector>

#include "wofc/complex.hpp"
#include "wofc/graphs.hpp"

namespace wofc::testing {

// The running example: a simplicial tree on x1..x6 with
//   F1 = x3 x4 x5, F2 = x3 x5 x6, F3 = x1 x2 x3, F4 = x1 x3 x4.
inline SimplicialComplex fig_tree() {
  const VertexSet f1 = VertexSet::single(2).with(3).with(4);
  const VertexSet f2 = VertexSet::single(2).with(4).with(5);
  const VertexSet f3 = VertexSet::single(0).with(1).with(2);
  const VertexSet f4 = VertexSet::single(0).with(2).with(3);
  return SimplicialComplex(default_names(6), {f1, f2, f3, f4});
}

// Same tree, facets in the order the generators are usually written:
//   x1x2x3, x1x3x4, x3x4x5, x3x5x6.
inline SimplicialComplex fig_tree_file_order() {
  return normalize_complex({{"x1", "x2", "x3"},
                            {"x1", "x3", "x4"},
                            {"x3", "x4", "x5"},
                            {"x3", "x5", "x6"}})
      .complex;
}

// Triangle edge ideal (xy, yz, xz) on vertices x, y, z.
inline SimplicialComplex triangle() {
  auto names = std::make_shared<NameTable>(NameTable{"x", "y", "z"});
  const VertexSet xy = VertexSet::single(0).with(1);
  const VertexSet yz = VertexSet::single(1).with(2);
  const VertexSet xz = VertexSet::single(0).with(2);
  return SimplicialComplex(names, {xy, yz, xz});
}

// Path a-b-c-d as a one-dimensional complex (ab, bc, cd).
inline SimplicialComplex path4() {
  auto names = std::make_shared<NameTable>(NameTable{"a", "b", "c", "d"});
  const VertexSet ab = VertexSet::single(0).with(1);
  const VertexSet bc = VertexSet::single(1).with(2);
  const VertexSet cd = VertexSet::single(2).with(3);
  return SimplicialComplex(names, {ab, bc, cd});
}

// Two disjoint edges (ab, cd).
inline SimplicialComplex two_edges() {
  auto names = std::make_shared<NameTable>(NameTable{"a", "b", "c", "d"});
  const VertexSet ab = VertexSet::single(0).with(1);
  const VertexSet cd = VertexSet::single(2).with(3);
  return SimplicialComplex(names, {ab, cd});
}

inline Graph path4_graph() {
  return normalize_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}}).graph;
}

// Star with center r and leaves z1, z2, z3.
inline Graph star3_graph() {
  return normalize_graph({{"r", "z1"}, {"r", "z2"}, {"r", "z3"}}).graph;
}

inline VertexSet verts(std::initializer_list<int> zero_based) {
  VertexSet s;
  for (int v : zero_based) s.insert(v);
  return s;
}

inline GenSet gens(std::initializer_list<int> zero_based) {
  GenSet s;
  for (int g : zero_based) s.insert(g);
  return s;
}

}  // namespace wofc::testing

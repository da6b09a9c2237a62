#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wofc/betti_table.hpp"
#include "wofc/complex.hpp"

namespace wofc {

// Multigraded Betti numbers of S/F(forest): one rank-one entry per vertex set
// in the lcm lattice whose induced subcollection has a well ordered facet
// cover, at the cover cardinality. Rejects non-forests.
BettiTable multigraded_betti(const SimplicialComplex& forest, int max_facets = kMaxFacets,
                             int permutation_threshold = kPermutationThreshold);

BettiDiagram graded_betti(const SimplicialComplex& forest, int max_facets = kMaxFacets,
                          int permutation_threshold = kPermutationThreshold);

// (projective dimension, regularity) of S/F(forest).
std::pair<int, int> pd_reg(const SimplicialComplex& forest, int max_facets = kMaxFacets,
                           int permutation_threshold = kPermutationThreshold);

// Top-multidegree Betti number by localization at a leaf, recursively.
// value is 0 or 1; the indices are -1 when the value is 0.
struct TopBetti {
  long value = 0;
  int quotient_index = -1;
  int ideal_index = -1;
  VertexSet degree;
};

enum class LeafPolicy { First, Last };

// Recursion: strip a leaf F, localize away its vertices, shift the index.
// Disconnected forests recurse per component and add the quotient indices.
// top_leaf overrides the leaf picked at the outermost step only.
TopBetti top_betti_recursive(const SimplicialComplex& forest,
                             LeafPolicy policy = LeafPolicy::First,
                             std::optional<int> top_leaf = std::nullopt,
                             int max_facets = kMaxFacets);

// Regularity lower bounds for an arbitrary complex: the cover-based bound
// dominates the induced-matching bound.
struct RegularityBounds {
  long wofc_bound = 0;
  VertexSet wofc_degree;
  std::vector<int> wofc_order;  // parent facet indices of the witness sequence
  long matching_bound = 0;
  GenSet matching;
};

RegularityBounds regularity_lower_bounds(const SimplicialComplex& c,
                                         int max_facets = kMaxFacets,
                                         int permutation_threshold = kPermutationThreshold);

}  // namespace wofc

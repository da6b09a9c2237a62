#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wofc/complex.hpp"

namespace wofc {

// All minimal facet covers (facet sets whose union is the whole vertex set,
// with no covering proper subset), in (size, lex) order.
std::vector<GenSet> minimal_facet_covers(const SimplicialComplex& c,
                                         int max_facets = kMaxFacets);

enum class WofcFailure { None, Coverage, Minimality, Witness };

struct WellOrderedCertificate {
  bool well_ordered = false;
  WofcFailure failure = WofcFailure::None;
  // the uncovered vertex / the redundant facet / the facet without a witness
  int detail = -1;
  std::map<int, int> witnesses;  // outside facet index -> 1-based position
  std::string message;
};

// Checks whether the ordered facet sequence F1..Fk is a well ordered facet
// cover: the set must be a minimal facet cover and every facet H outside it
// must admit i <= k-1 with Fi contained in H united with the suffix after i.
WellOrderedCertificate is_well_ordered(const SimplicialComplex& c,
                                       const std::vector<int>& sequence);

// Smallest valid ordering of a given minimal cover in sequence-lex order, or
// nullopt. Permutations are enumerated exhaustively up to the threshold;
// larger covers use a lex-greedy prefix with a backtracking feasibility check
// that fills the sequence from the last position.
std::optional<std::vector<int>> lex_least_well_ordering(
    const SimplicialComplex& c, GenSet cover,
    int permutation_threshold = kPermutationThreshold);

struct WofcResult {
  int cardinality = 0;
  std::vector<int> order;  // facet indices, lex-least witness
};

// Every cardinality of minimal facet cover admitting a well ordering, with
// one lex-least witness sequence per cardinality.
std::vector<WofcResult> find_well_ordered_covers(
    const SimplicialComplex& c, int max_facets = kMaxFacets,
    int permutation_threshold = kPermutationThreshold);

// All inclusion-minimal vertex sets meeting every facet, in (size, lex) order.
std::vector<VertexSet> minimal_vertex_covers(const SimplicialComplex& c,
                                             int max_vertices = kMaxCoverVertices);

// Pairwise disjoint facets whose induced subcollection on their union adds no
// further facet.
bool is_induced_matching(const SimplicialComplex& c, GenSet facets);

struct MatchingWeight {
  long value = 0;
  GenSet matching;
};

// Maximum of |union of members| - s over induced matchings with s >= 1.
MatchingWeight max_induced_matching_weight(const SimplicialComplex& c,
                                           int max_facets = kMaxFacets);

}  // namespace wofc

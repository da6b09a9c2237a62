#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wofc/caps.hpp"
#include "wofc/errors.hpp"
#include "wofc/small_set.hpp"

namespace wofc {

using NameTable = std::vector<std::string>;
using NameTablePtr = std::shared_ptr<const NameTable>;

// A simplicial complex stored by its facets. Read as a squarefree monomial
// ideal, facet i is the support of generator i. Vertex indices refer to a
// shared ambient name table, so complexes derived from one another (induced
// subcollections, localizations, components) stay directly comparable; the
// vertex universe is always the union of the facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  // Facets must be nonempty and pairwise incomparable (use normalize_complex
  // for raw input).
  SimplicialComplex(NameTablePtr names, std::vector<VertexSet> facets);

  // Convenience constructor: vertices named x1..xn.
  static SimplicialComplex from_masks(int n_vertices,
                                      const std::vector<std::uint64_t>& facets);

  bool empty() const { return facets_.empty(); }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  int vertex_count() const { return universe_.count(); }
  VertexSet universe() const { return universe_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  VertexSet facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }
  const NameTablePtr& names_ptr() const { return names_; }
  const std::string& name(int v) const { return (*names_)[static_cast<std::size_t>(v)]; }

  // "x1x3x4" in ambient index order.
  std::string monomial(VertexSet s) const;
  std::vector<std::string> name_list(VertexSet s) const;
  std::optional<int> find_vertex(std::string_view name) const;
  int find_facet(VertexSet f) const;  // -1 when absent

  VertexSet union_of(GenSet facet_subset) const;

  // Equality as facet-labelled sets (facet order does not matter).
  bool operator==(const SimplicialComplex& other) const;

 private:
  NameTablePtr names_;
  VertexSet universe_;
  std::vector<VertexSet> facets_;
};

// Shared name table "x1".."xn"; cached per n.
NameTablePtr default_names(int n);

struct NormalizeResult {
  SimplicialComplex complex;
  std::vector<int> dropped_inputs;  // positions of duplicated/non-maximal inputs
};

// Builds a complex from raw facets given as variable-name lists: keeps the
// inclusion-maximal ones (first occurrence wins among duplicates), recomputes
// the universe, and reports what was dropped.
NormalizeResult normalize_complex(const std::vector<std::vector<std::string>>& raw_facets);
// Same, for facets already expressed over a name table.
NormalizeResult normalize_masks(NameTablePtr names, const std::vector<VertexSet>& raw_facets);

struct InducedSubcollection {
  SimplicialComplex complex;
  std::vector<int> parent_facets;  // facet index in the parent, per kept facet
};

// All facets of the complex contained in A, as a complex of their own.
InducedSubcollection induced_subcollection(const SimplicialComplex& c, VertexSet a);

struct ComplexPart {
  SimplicialComplex complex;
  std::vector<int> parent_facets;
};

// Maximal classes of facets under the transitive closure of pairwise
// intersection, ordered by smallest facet index.
std::vector<ComplexPart> connected_components(const SimplicialComplex& c);

struct LeafCheck {
  bool leaf = false;
  bool only_facet = false;
  int witness = -1;          // joint facet index, -1 when only_facet
  VertexSet free_vertices;   // vertices of the leaf in no other facet
};

// A facet F is a leaf when it is alone or some other facet G contains every
// intersection of F with the remaining facets.
LeafCheck is_leaf(const SimplicialComplex& c, int facet_index);
std::vector<int> leaves_of(const SimplicialComplex& c);

struct ForestCheck {
  bool forest = false;
  GenSet counterexample;  // first leafless facet subset in (size, lex) order
};

// Checks the definition directly: every nonempty facet subset must have a
// leaf. Exhaustive over 2^q - 1 subsets, hence the cap.
ForestCheck is_forest(const SimplicialComplex& c, int max_facets = kMaxFacets);

struct Localization {
  bool unit_ideal = false;
  SimplicialComplex complex;
  std::vector<int> parent_facets;  // first parent facet producing each generator
};

// Remove facet F and quotient the remaining generators by F (set difference),
// keeping the inclusion-minimal results. Variable names stay ambient.
Localization localize(const SimplicialComplex& c, int facet_index);

// Generalized entry point: localize the ideal at the prime generated by the
// given variables (every generator is intersected with the support).
Localization localize_at_prime(const SimplicialComplex& c, VertexSet prime_support);

// Distinct unions of nonempty facet subsets (the lcm lattice of the ideal,
// minus the bottom), in (size, lex) order. The only multidegrees that can
// carry Betti numbers.
std::vector<VertexSet> lcm_lattice(const SimplicialComplex& c);

}  // namespace wofc

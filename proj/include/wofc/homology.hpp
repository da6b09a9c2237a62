#pragma once

#include <map>
#include <vector>

#include "wofc/betti_table.hpp"
#include "wofc/complex.hpp"
#include "wofc/exact.hpp"

namespace wofc {

// Downward-closed family of generator-index sets, stored by its maximal
// faces; the full face list is enumerated on demand. Distinguishes the void
// complex (no faces) from the complex containing only the empty face.
class AbstractComplex {
 public:
  static AbstractComplex void_complex() { return AbstractComplex(); }
  static AbstractComplex from_maximal(std::vector<GenSet> maximal);

  bool is_void() const { return void_; }
  const std::vector<GenSet>& maximal_faces() const { return maximal_; }

  // result[s] = faces with s members, each sorted by ascending mask;
  // result[0] is the singleton list holding the empty face.
  std::vector<std::vector<GenSet>> faces_by_size(long max_faces = kMaxOracleFaces) const;

 private:
  AbstractComplex() = default;
  bool void_ = true;
  std::vector<GenSet> maximal_;
};

// Subcomplex of the full simplex on the generators spanned by the subsets
// whose lcm strictly divides m.
AbstractComplex taylor_lower(const SimplicialComplex& ideal, VertexSet m);

// Boundary matrices of the augmented chain complex: result[s-1] maps
// s-element faces to (s-1)-element faces (s >= 1), rows/columns in
// faces_by_size order. Verifies that adjacent boundaries compose to zero.
std::vector<ExactMatrix> boundary_matrices(const AbstractComplex& k,
                                           long max_faces = kMaxOracleFaces);

// Reduced homology dimensions over the rationals, keyed by homological
// degree (-1 allowed); zero dimensions are omitted. Exact arithmetic only.
std::map<int, long> reduced_homology_dims(const AbstractComplex& k,
                                          long max_faces = kMaxOracleFaces);

// Ground-truth multigraded Betti numbers of the ideal from reduced homology
// of the strict-lower subcomplexes at every lcm of the generators. Quotient
// convention; use BettiTable::to_convention for the ideal indexing.
BettiTable betti_oracle(const SimplicialComplex& ideal,
                        int max_generators = kMaxOracleGenerators,
                        long max_faces = kMaxOracleFaces);

}  // namespace wofc

#pragma once

#include <vector>

#include "wofc/complex.hpp"

namespace wofc {

// Total order on the generators: ranked[r] is the generator in position r,
// so ranked[0] is the least generator.
struct GeneratorOrder {
  std::vector<int> ranked;
  std::vector<int> rank_of;

  static GeneratorOrder identity(int count);
  static GeneratorOrder from_ranked(std::vector<int> ranked);  // validates bijection
};

// Least generator (under the order) whose support divides m.
int min_generator(const SimplicialComplex& ideal, const GeneratorOrder& order, VertexSet m);

// Rooted faces of the full simplex on the generators: a face is rooted when
// each of its nonempty subsets contains its own least dividing generator.
// The empty face is implicit; `faces` lists the nonempty ones.
class LyubeznikComplex {
 public:
  LyubeznikComplex(SimplicialComplex ideal, GeneratorOrder order,
                   int max_generators = kMaxLyubeznikGenerators);

  const SimplicialComplex& ideal() const { return ideal_; }
  const GeneratorOrder& order() const { return order_; }
  const std::vector<GenSet>& faces() const { return faces_; }    // (size, lex) order
  const std::vector<GenSet>& facets() const { return facets_; }  // maximal rooted faces
  bool is_face(GenSet f) const;
  VertexSet lcm(GenSet face) const;

 private:
  SimplicialComplex ideal_;
  GeneratorOrder order_;
  std::vector<GenSet> faces_;
  std::vector<GenSet> facets_;
};

LyubeznikComplex lyubeznik_complex(const SimplicialComplex& ideal, const GeneratorOrder& order,
                                   int max_generators = kMaxLyubeznikGenerators);

// Facet of the rooted complex each of whose members contributes to the lcm;
// such a face certifies a nonvanishing Betti number of S/I at (index, degree).
struct BarileWitness {
  GenSet face;
  VertexSet degree;
  int index = 0;
};

std::vector<BarileWitness> barile_witnesses(const SimplicialComplex& ideal,
                                            const GeneratorOrder& order,
                                            int max_generators = kMaxLyubeznikGenerators);
std::vector<BarileWitness> barile_witnesses(const LyubeznikComplex& lambda);

// Order placing a verified well ordered facet cover first (remaining facets
// in input order); the cover set is then a facet of the rooted complex, which
// is checked before returning.
struct WofcOrderResult {
  GeneratorOrder order;
  LyubeznikComplex lambda;
};
WofcOrderResult order_from_wofc(const SimplicialComplex& c, const std::vector<int>& sequence,
                                int max_generators = kMaxLyubeznikGenerators);

// Boundary matrices with signed monomial entries lcm(face)/lcm(subface).
struct MonomialEntry {
  int row = 0;
  int sign = 0;
  VertexSet monomial;
};

struct MonomialMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<MonomialEntry>> columns;
};

// One matrix per homological degree: result[s-1] maps the s-element faces to
// the (s-1)-element faces (the empty face spans the degree-zero row).
std::vector<MonomialMatrix> boundary_matrices(const LyubeznikComplex& lambda);

// Symbolic check that the composition of adjacent monomial boundaries
// cancels termwise.
bool composition_is_zero(const MonomialMatrix& outer, const MonomialMatrix& inner);

}  // namespace wofc

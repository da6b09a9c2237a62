#include "wofc/betti_forest.hpp"

#include <algorithm>
#include <stdexcept>

#include "wofc/covers.hpp"

namespace wofc {

namespace {

void require_forest(const SimplicialComplex& c, int max_facets, const char* op) {
  if (c.empty()) throw InputError(std::string(op) + ": empty complex");
  if (!is_forest(c, max_facets).forest)
    throw InputError(std::string(op) +
                     ": not a simplicial forest; use the homology oracle for general ideals");
}

}  // namespace

BettiTable multigraded_betti(const SimplicialComplex& forest, int max_facets,
                             int permutation_threshold) {
  require_forest(forest, max_facets, "multigraded_betti");
  BettiTable table(Convention::Quotient);
  for (VertexSet a : lcm_lattice(forest)) {
    const auto induced = induced_subcollection(forest, a);
    const auto results =
        find_well_ordered_covers(induced.complex, max_facets, permutation_threshold);
    if (results.empty()) continue;
    if (results.size() > 1)
      throw std::logic_error(
          "multigraded_betti: several cover cardinalities on a forest subcollection");
    table.add(a, results.front().cardinality, 1);
  }
  return table;
}

BettiDiagram graded_betti(const SimplicialComplex& forest, int max_facets,
                          int permutation_threshold) {
  return make_diagram(multigraded_betti(forest, max_facets, permutation_threshold));
}

std::pair<int, int> pd_reg(const SimplicialComplex& forest, int max_facets,
                           int permutation_threshold) {
  const BettiTable table = multigraded_betti(forest, max_facets, permutation_threshold);
  return {table.projective_dimension(), table.regularity()};
}

namespace {

TopBetti zero_top(VertexSet degree) {
  TopBetti t;
  t.value = 0;
  t.degree = degree;
  return t;
}

TopBetti top_betti_impl(const SimplicialComplex& c, LeafPolicy policy,
                        std::optional<int> top_leaf) {
  const VertexSet degree = c.universe();
  const auto components = connected_components(c);
  if (components.size() > 1) {
    if (top_leaf) throw InputError("top_betti_recursive: leaf override needs a connected complex");
    int quotient_sum = 0;
    for (const auto& part : components) {
      TopBetti sub = top_betti_impl(part.complex, policy, std::nullopt);
      if (sub.value == 0) return zero_top(degree);
      quotient_sum += sub.quotient_index;
    }
    TopBetti out;
    out.value = 1;
    out.quotient_index = quotient_sum;
    out.ideal_index = quotient_sum - 1;
    out.degree = degree;
    return out;
  }

  if (c.facet_count() == 1) {
    TopBetti out;
    out.value = 1;
    out.ideal_index = 0;
    out.quotient_index = 1;
    out.degree = degree;
    return out;
  }

  int leaf;
  if (top_leaf) {
    if (!is_leaf(c, *top_leaf).leaf)
      throw InputError("top_betti_recursive: chosen facet is not a leaf");
    leaf = *top_leaf;
  } else {
    const auto leaves = leaves_of(c);
    if (leaves.empty()) throw std::logic_error("top_betti_recursive: tree without a leaf");
    leaf = policy == LeafPolicy::First ? leaves.front() : leaves.back();
  }

  const Localization loc = localize(c, leaf);
  if (loc.unit_ideal || loc.complex.empty()) return zero_top(degree);
  // The localized complex must keep every vertex outside the leaf; a smaller
  // vertex set forces the top Betti number to vanish.
  if (loc.complex.vertex_count() != c.vertex_count() - c.facet(leaf).count())
    return zero_top(degree);
  TopBetti sub = top_betti_impl(loc.complex, policy, std::nullopt);
  if (sub.value == 0) return zero_top(degree);
  TopBetti out;
  out.value = 1;
  out.ideal_index = sub.ideal_index + 1;
  out.quotient_index = out.ideal_index + 1;
  out.degree = degree;
  return out;
}

}  // namespace

TopBetti top_betti_recursive(const SimplicialComplex& forest, LeafPolicy policy,
                             std::optional<int> top_leaf, int max_facets) {
  require_forest(forest, max_facets, "top_betti_recursive");
  return top_betti_impl(forest, policy, top_leaf);
}

RegularityBounds regularity_lower_bounds(const SimplicialComplex& c, int max_facets,
                                         int permutation_threshold) {
  if (c.empty()) throw InputError("regularity_lower_bounds: empty complex");
  if (c.facet_count() > max_facets)
    refuse_cap("regularity_lower_bounds", c.facet_count(), max_facets);

  RegularityBounds out;
  bool found = false;
  for (VertexSet a : lcm_lattice(c)) {
    const auto induced = induced_subcollection(c, a);
    for (const auto& result :
         find_well_ordered_covers(induced.complex, max_facets, permutation_threshold)) {
      const long bound = a.count() - result.cardinality;
      if (!found || bound > out.wofc_bound) {
        out.wofc_bound = bound;
        out.wofc_degree = a;
        out.wofc_order.clear();
        for (int local : result.order)
          out.wofc_order.push_back(induced.parent_facets[static_cast<std::size_t>(local)]);
        found = true;
      }
    }
  }
  const MatchingWeight mw = max_induced_matching_weight(c, max_facets);
  out.matching_bound = mw.value;
  out.matching = mw.matching;
  if (!found || out.wofc_bound < out.matching_bound)
    throw std::logic_error("regularity_lower_bounds: cover bound fell below the matching bound");
  return out;
}

}  // namespace wofc

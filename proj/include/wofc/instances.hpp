#pragma once

#include <functional>
#include <random>

#include "wofc/complex.hpp"
#include "wofc/graphs.hpp"

namespace wofc {

// Streams every complex with at most max_facets pairwise-incomparable facets
// whose vertex union is exactly {x1..xk} for some k <= max_vertices, facets
// listed in increasing mask order, and which passes the forest test. The
// visitor returns false to stop early.
void for_each_forest(int max_facets, int max_vertices,
                     const std::function<bool(const SimplicialComplex&)>& visit);

// Reproducible random instances, used by the property suites and by the
// cross-validation mode of the CLI. The generator draws a facet count, draws
// facets of size 1..4 uniformly over a vertex pool, and normalizes.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_facets = 5, int max_vertices = 8);

// Rejection-samples random_complex until the forest test passes.
SimplicialComplex random_forest(std::mt19937_64& rng, int max_facets = 5, int max_vertices = 8);

// Random simple graph on a pool of at most 8 vertices; the vertex set is the
// union of the sampled edges.
Graph random_graph(std::mt19937_64& rng, int max_edges = 8);

}  // namespace wofc

#pragma once

#include <vector>

#include "wofc/complex.hpp"

namespace wofc {

struct Edge {
  int u = 0, v = 0;  // ambient vertex indices, u < v
  friend bool operator==(Edge, Edge) = default;
};

// Finite simple graph over a shared name table. The vertex set is the union
// of the endpoints, so minimal edge covers always exist.
class Graph {
 public:
  Graph() = default;
  Graph(NameTablePtr names, std::vector<Edge> edges);

  int edge_count() const { return static_cast<int>(edges_.size()); }
  Edge edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return vertices_; }
  const NameTablePtr& names_ptr() const { return names_; }
  const std::string& name(int v) const { return (*names_)[static_cast<std::size_t>(v)]; }
  VertexSet edge_set(int i) const {
    return VertexSet::single(edges_[static_cast<std::size_t>(i)].u)
        .with(edges_[static_cast<std::size_t>(i)].v);
  }
  int find_edge(int u, int v) const;  // -1 when absent

  // The graph as a one-dimensional complex (edge i becomes facet i).
  SimplicialComplex as_complex() const;

 private:
  NameTablePtr names_;
  std::vector<Edge> edges_;
  VertexSet vertices_;
};

struct GraphNormalizeResult {
  Graph graph;
  std::vector<int> dropped_inputs;  // duplicated input edges
};

// Builds a simple graph from raw (name, name) pairs; loops are rejected and
// duplicate edges dropped with a report.
GraphNormalizeResult normalize_graph(
    const std::vector<std::pair<std::string, std::string>>& raw_edges);

struct Bouquet {
  int root = -1;
  std::vector<int> leaves;  // vertex indices, sorted by name
  std::vector<int> edges;   // edge indices in input order
};

struct BouquetSet {
  std::vector<Bouquet> bouquets;   // sorted by root name
  std::vector<int> designated;     // one edge index per bouquet (may be empty)
};

// Partitions a verified minimal edge cover into vertex-disjoint stars. The
// root of a one-edge star is its name-lexicographically smaller endpoint.
BouquetSet bouquet_decomposition(const Graph& g, const std::vector<int>& cover_edges);

// True when the designated edges (one per bouquet) form an induced matching.
bool is_strongly_disjoint(const Graph& g, const std::vector<Bouquet>& bouquets,
                          const std::vector<int>& designated);

// Builds the edge sequence (non-designated edges in input order, then the
// designated ones) and verifies it is a well ordered edge cover.
std::vector<int> wofc_from_bouquets(const Graph& g, const BouquetSet& bouquets);

// Decomposes a well ordered edge cover into bouquets and designates the edge
// with the largest sequence position in each; the designated set is checked
// to be an induced matching.
BouquetSet bouquets_from_wofc(const Graph& g, const std::vector<int>& sequence);

}  // namespace wofc

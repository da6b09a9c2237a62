#include "wofc/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wofc/covers.hpp"

namespace wofc {

Graph::Graph(NameTablePtr names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw InputError("graph edges must join distinct vertices");
    if (e.u > e.v) std::swap(e.u, e.v);
    vertices_.insert(e.u).insert(e.v);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i] == edges_[j]) throw InputError("graph has a repeated edge");
}

int Graph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == u && edges_[i].v == v) return static_cast<int>(i);
  return -1;
}

SimplicialComplex Graph::as_complex() const {
  std::vector<VertexSet> facets;
  facets.reserve(edges_.size());
  for (int i = 0; i < edge_count(); ++i) facets.push_back(edge_set(i));
  return SimplicialComplex(names_, std::move(facets));
}

GraphNormalizeResult normalize_graph(
    const std::vector<std::pair<std::string, std::string>>& raw_edges) {
  if (raw_edges.empty()) throw InputError("no edges given");
  auto names = std::make_shared<NameTable>();
  auto intern = [&](const std::string& t) {
    auto it = std::find(names->begin(), names->end(), t);
    if (it != names->end()) return static_cast<int>(it - names->begin());
    if (names->size() >= 64) throw InputError("at most 64 distinct vertices are supported");
    names->push_back(t);
    return static_cast<int>(names->size()) - 1;
  };
  std::vector<Edge> kept;
  std::vector<int> dropped;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const auto& [a, b] = raw_edges[i];
    if (a == b)
      throw InputError("edge " + std::to_string(i + 1) + " is a loop on '" + a + "'");
    Edge e{intern(a), intern(b)};
    if (e.u > e.v) std::swap(e.u, e.v);
    if (std::find(kept.begin(), kept.end(), e) != kept.end())
      dropped.push_back(static_cast<int>(i));
    else
      kept.push_back(e);
  }
  return {Graph(std::move(names), std::move(kept)), std::move(dropped)};
}

namespace {

void require_minimal_edge_cover(const Graph& g, const std::vector<int>& cover_edges) {
  VertexSet covered;
  for (int i : cover_edges) {
    if (i < 0 || i >= g.edge_count()) throw InputError("no such edge in the graph");
    covered |= g.edge_set(i);
  }
  if (!(covered == g.vertices())) {
    VertexSet missing = g.vertices() - covered;
    throw InputError("not an edge cover: vertex " + g.name(missing.lowest()) + " is uncovered");
  }
  for (std::size_t drop = 0; drop < cover_edges.size(); ++drop) {
    VertexSet rest;
    for (std::size_t j = 0; j < cover_edges.size(); ++j)
      if (j != drop) rest |= g.edge_set(cover_edges[j]);
    if (rest == g.vertices())
      throw InputError("edge cover is not minimal: edge " +
                       std::to_string(cover_edges[drop] + 1) + " is redundant");
  }
}

}  // namespace

BouquetSet bouquet_decomposition(const Graph& g, const std::vector<int>& cover_edges) {
  require_minimal_edge_cover(g, cover_edges);

  // connected components of the cover subgraph
  const int k = static_cast<int>(cover_edges.size());
  std::vector<int> root(static_cast<std::size_t>(k));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.edge_set(cover_edges[static_cast<std::size_t>(i)])
              .intersects(g.edge_set(cover_edges[static_cast<std::size_t>(j)]))) {
        int a = find(i), b = find(j);
        if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }

  std::vector<Bouquet> bouquets;
  for (int r = 0; r < k; ++r) {
    if (find(r) != r) continue;
    Bouquet b;
    for (int i = 0; i < k; ++i)
      if (find(i) == r) b.edges.push_back(cover_edges[static_cast<std::size_t>(i)]);
    if (b.edges.size() == 1) {
      const Edge e = g.edge(b.edges.front());
      b.root = g.name(e.u) <= g.name(e.v) ? e.u : e.v;
    } else {
      // minimality forces each component to be a star; find the center
      std::map<int, int> degree;
      for (int i : b.edges) {
        ++degree[g.edge(i).u];
        ++degree[g.edge(i).v];
      }
      b.root = -1;
      for (const auto& [v, d] : degree)
        if (d == static_cast<int>(b.edges.size())) b.root = v;
      if (b.root < 0)
        throw std::logic_error("bouquet_decomposition: cover component is not a star");
    }
    for (int i : b.edges) {
      const Edge e = g.edge(i);
      b.leaves.push_back(e.u == b.root ? e.v : e.u);
    }
    std::sort(b.leaves.begin(), b.leaves.end(),
              [&](int a, int c) { return g.name(a) < g.name(c); });
    bouquets.push_back(std::move(b));
  }
  std::sort(bouquets.begin(), bouquets.end(), [&](const Bouquet& a, const Bouquet& b) {
    return g.name(a.root) < g.name(b.root);
  });
  return {std::move(bouquets), {}};
}

bool is_strongly_disjoint(const Graph& g, const std::vector<Bouquet>& bouquets,
                          const std::vector<int>& designated) {
  if (designated.size() != bouquets.size())
    throw InputError("is_strongly_disjoint: one designated edge per bouquet required");
  for (std::size_t i = 0; i < bouquets.size(); ++i) {
    const auto& edges = bouquets[i].edges;
    if (std::find(edges.begin(), edges.end(), designated[i]) == edges.end())
      throw InputError("is_strongly_disjoint: designated edge lies outside its bouquet");
  }
  // pairwise disjoint, and no graph edge joins two distinct designated edges
  VertexSet all;
  for (int e : designated) {
    if (g.edge_set(e).intersects(all)) return false;
    all |= g.edge_set(e);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (std::find(designated.begin(), designated.end(), e) != designated.end()) continue;
    if (!g.edge_set(e).subset_of(all)) continue;
    int touched = 0;
    for (int s : designated)
      if (g.edge_set(e).intersects(g.edge_set(s))) ++touched;
    if (touched >= 2) return false;
  }
  return true;
}

std::vector<int> wofc_from_bouquets(const Graph& g, const BouquetSet& bouquets) {
  if (bouquets.designated.size() != bouquets.bouquets.size())
    throw InputError("wofc_from_bouquets: designated edges missing");
  if (!is_strongly_disjoint(g, bouquets.bouquets, bouquets.designated))
    throw InputError("wofc_from_bouquets: designated edges are not an induced matching");
  VertexSet covered;
  for (const Bouquet& b : bouquets.bouquets)
    for (int e : b.edges) covered |= g.edge_set(e);
  if (!(covered == g.vertices()))
    throw InputError("wofc_from_bouquets: bouquets do not cover every vertex");

  std::vector<int> sequence;
  std::vector<char> is_designated(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : bouquets.designated) is_designated[static_cast<std::size_t>(e)] = 1;
  std::vector<int> all_edges;
  for (const Bouquet& b : bouquets.bouquets)
    all_edges.insert(all_edges.end(), b.edges.begin(), b.edges.end());
  std::sort(all_edges.begin(), all_edges.end());
  for (int e : all_edges)
    if (!is_designated[static_cast<std::size_t>(e)]) sequence.push_back(e);
  for (int e : bouquets.designated) sequence.push_back(e);

  const auto cert = is_well_ordered(g.as_complex(), sequence);
  if (!cert.well_ordered)
    throw std::logic_error("wofc_from_bouquets: constructed sequence is not well ordered (" +
                           cert.message + ")");
  return sequence;
}

BouquetSet bouquets_from_wofc(const Graph& g, const std::vector<int>& sequence) {
  const auto cert = is_well_ordered(g.as_complex(), sequence);
  if (!cert.well_ordered)
    throw InputError("bouquets_from_wofc: not a well ordered edge cover (" + cert.message + ")");
  BouquetSet out = bouquet_decomposition(g, sequence);
  std::vector<int> position(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t p = 0; p < sequence.size(); ++p)
    position[static_cast<std::size_t>(sequence[p])] = static_cast<int>(p);
  for (const Bouquet& b : out.bouquets) {
    int best = b.edges.front();
    for (int e : b.edges)
      if (position[static_cast<std::size_t>(e)] > position[static_cast<std::size_t>(best)])
        best = e;
    out.designated.push_back(best);
  }
  if (!is_strongly_disjoint(g, out.bouquets, out.designated))
    throw std::logic_error("bouquets_from_wofc: designated edges failed the induced matching check");
  return out;
}

}  // namespace wofc

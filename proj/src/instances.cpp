#include "wofc/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace wofc {

namespace {

bool incomparable_with_all(const std::vector<VertexSet>& chosen, VertexSet cand) {
  for (VertexSet f : chosen)
    if (f.subset_of(cand) || cand.subset_of(f)) return false;
  return true;
}

void enumerate_forests(int max_facets, int max_vertices, std::vector<VertexSet>& chosen,
                       std::uint64_t next_mask, const NameTablePtr& names, bool& keep_going,
                       const std::function<bool(const SimplicialComplex&)>& visit) {
  const std::uint64_t limit = std::uint64_t{1} << max_vertices;
  for (std::uint64_t mask = next_mask; mask < limit && keep_going; ++mask) {
    const VertexSet cand = VertexSet::from_bits(mask);
    if (!incomparable_with_all(chosen, cand)) continue;
    chosen.push_back(cand);
    VertexSet uni;
    for (VertexSet f : chosen) uni |= f;
    // gap-free labelling only; relabelings of smaller instances are skipped
    if (uni == VertexSet::first_n(uni.count())) {
      SimplicialComplex c(names, chosen);
      if (is_forest(c, max_facets).forest) {
        if (!visit(c)) keep_going = false;
      }
    }
    if (keep_going && static_cast<int>(chosen.size()) < max_facets)
      enumerate_forests(max_facets, max_vertices, chosen, mask + 1, names, keep_going, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_forest(int max_facets, int max_vertices,
                     const std::function<bool(const SimplicialComplex&)>& visit) {
  if (max_vertices > 16) throw std::invalid_argument("for_each_forest: vertex bound too large");
  const NameTablePtr names = default_names(max_vertices);
  std::vector<VertexSet> chosen;
  bool keep_going = true;
  enumerate_forests(max_facets, max_vertices, chosen, 1, names, keep_going, visit);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_facets, int max_vertices) {
  const NameTablePtr names = default_names(max_vertices);
  while (true) {
    const int nv = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    const int q = std::uniform_int_distribution<int>(1, max_facets)(rng);
    std::vector<VertexSet> raw;
    for (int i = 0; i < q; ++i) {
      const int size = std::uniform_int_distribution<int>(1, std::min(4, nv))(rng);
      VertexSet f;
      while (f.count() < size) f.insert(std::uniform_int_distribution<int>(0, nv - 1)(rng));
      raw.push_back(f);
    }
    // drop dominated facets; duplicates may shrink the list, never empty it
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < raw.size() && keep; ++j) {
        if (j == i) continue;
        if (raw[i].proper_subset_of(raw[j])) keep = false;
        if (raw[i] == raw[j] && j < i) keep = false;
      }
      if (keep) kept.push_back(raw[i]);
    }
    if (!kept.empty()) return SimplicialComplex(names, std::move(kept));
  }
}

SimplicialComplex random_forest(std::mt19937_64& rng, int max_facets, int max_vertices) {
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    SimplicialComplex c = random_complex(rng, max_facets, max_vertices);
    if (is_forest(c).forest) return c;
  }
  throw std::logic_error("random_forest: rejection sampling failed");
}

Graph random_graph(std::mt19937_64& rng, int max_edges) {
  const NameTablePtr names = default_names(8);
  while (true) {
    const int nv = std::uniform_int_distribution<int>(2, 8)(rng);
    const int ne = std::uniform_int_distribution<int>(1, max_edges)(rng);
    std::vector<Edge> edges;
    for (int i = 0; i < ne; ++i) {
      int u = std::uniform_int_distribution<int>(0, nv - 1)(rng);
      int v = std::uniform_int_distribution<int>(0, nv - 1)(rng);
      if (u == v) continue;
      Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    if (!edges.empty()) return Graph(names, std::move(edges));
  }
}

}  // namespace wofc

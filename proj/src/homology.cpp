#include "wofc/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace wofc {

AbstractComplex AbstractComplex::from_maximal(std::vector<GenSet> maximal) {
  AbstractComplex out;
  out.void_ = false;
  std::vector<GenSet> kept;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < maximal.size() && keep; ++j) {
      if (j == i) continue;
      if (maximal[i].proper_subset_of(maximal[j])) keep = false;
      if (maximal[i] == maximal[j] && j < i) keep = false;
    }
    if (keep) kept.push_back(maximal[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](GenSet a, GenSet b) { return a.bits() < b.bits(); });
  out.maximal_ = std::move(kept);
  return out;
}

std::vector<std::vector<GenSet>> AbstractComplex::faces_by_size(long max_faces) const {
  if (void_) return {};
  std::unordered_set<std::uint64_t> seen;
  long total = 0;
  int top = 0;
  for (GenSet f : maximal_) {
    // enumerate all subsets of the maximal face
    const std::uint64_t bits = f.bits();
    std::uint64_t sub = bits;
    while (true) {
      if (seen.insert(sub).second) {
        if (++total > max_faces) refuse_cap("faces_by_size", total, max_faces);
        top = std::max(top, std::popcount(sub));
      }
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  std::vector<std::vector<GenSet>> out(static_cast<std::size_t>(top) + 1);
  for (std::uint64_t b : seen)
    out[static_cast<std::size_t>(std::popcount(b))].push_back(GenSet::from_bits(b));
  for (auto& level : out)
    std::sort(level.begin(), level.end(),
              [](GenSet a, GenSet b) { return a.bits() < b.bits(); });
  return out;
}

AbstractComplex taylor_lower(const SimplicialComplex& ideal, VertexSet m) {
  if (m.empty()) return AbstractComplex::void_complex();
  std::vector<int> dividing;
  for (int i = 0; i < ideal.facet_count(); ++i)
    if (ideal.facet(i).subset_of(m)) dividing.push_back(i);

  // A subset is a face iff its lcm is a proper subset of m; it is maximal iff
  // adjoining any other dividing generator pushes the lcm up to m.
  std::vector<GenSet> maximal;
  const int d = static_cast<int>(dividing.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << d); ++pick) {
    GenSet face;
    VertexSet lcm;
    for (int b = 0; b < d; ++b)
      if ((pick >> b) & 1u) {
        face.insert(dividing[static_cast<std::size_t>(b)]);
        lcm |= ideal.facet(dividing[static_cast<std::size_t>(b)]);
      }
    if (!(lcm.proper_subset_of(m))) continue;
    bool is_maximal = true;
    for (int b = 0; b < d && is_maximal; ++b) {
      int g = dividing[static_cast<std::size_t>(b)];
      if (face.contains(g)) continue;
      if ((lcm | ideal.facet(g)).proper_subset_of(m)) is_maximal = false;
    }
    if (is_maximal) maximal.push_back(face);
  }
  return AbstractComplex::from_maximal(std::move(maximal));
}

namespace {

int row_index(const std::vector<GenSet>& level, GenSet face) {
  auto it = std::lower_bound(level.begin(), level.end(), face,
                             [](GenSet a, GenSet b) { return a.bits() < b.bits(); });
  if (it == level.end() || !(*it == face))
    throw std::logic_error("boundary_matrices: missing face");
  return static_cast<int>(it - level.begin());
}

std::vector<ExactMatrix> build_boundaries(const std::vector<std::vector<GenSet>>& levels) {
  std::vector<ExactMatrix> out;
  for (std::size_t s = 1; s < levels.size(); ++s) {
    ExactMatrix d(static_cast<int>(levels[s - 1].size()), static_cast<int>(levels[s].size()));
    for (std::size_t c = 0; c < levels[s].size(); ++c) {
      const GenSet face = levels[s][c];
      int j = 0;
      for (int member : face) {
        const GenSet sub = face.without(member);
        d.add_entry(row_index(levels[s - 1], sub), static_cast<int>(c), j % 2 == 0 ? 1 : -1);
        ++j;
      }
    }
    out.push_back(std::move(d));
  }
  for (std::size_t s = 1; s < out.size(); ++s)
    if (!composition_is_zero(out[s - 1], out[s]))
      throw std::logic_error("boundary_matrices: composition of boundaries is nonzero");
  return out;
}

}  // namespace

std::vector<ExactMatrix> boundary_matrices(const AbstractComplex& k, long max_faces) {
  return build_boundaries(k.faces_by_size(max_faces));
}

std::map<int, long> reduced_homology_dims(const AbstractComplex& k, long max_faces) {
  std::map<int, long> out;
  if (k.is_void()) return out;
  const auto levels = k.faces_by_size(max_faces);
  const auto boundaries = build_boundaries(levels);
  std::vector<long> ranks(levels.size() + 1, 0);  // ranks[s] = rank of d_s
  for (std::size_t s = 1; s < levels.size(); ++s)
    ranks[s] = exact_rank(boundaries[s - 1]);

  long euler_faces = 0, euler_hom = 0;
  for (std::size_t s = 0; s < levels.size(); ++s) {
    const int degree = static_cast<int>(s) - 1;
    const long faces = static_cast<long>(levels[s].size());
    const long h = faces - ranks[s] - ranks[s + 1];
    if (h < 0) throw std::logic_error("reduced_homology_dims: negative dimension");
    if (h > 0) out[degree] = h;
    const long sign = degree % 2 == 0 ? 1 : -1;
    euler_faces += sign * faces;
    euler_hom += sign * h;
  }
  if (euler_faces != euler_hom)
    throw std::logic_error("reduced_homology_dims: Euler characteristic mismatch");
  return out;
}

BettiTable betti_oracle(const SimplicialComplex& ideal, int max_generators, long max_faces) {
  const int q = ideal.facet_count();
  if (q == 0) throw InputError("betti_oracle: empty complex");
  if (q > max_generators) refuse_cap("betti_oracle", q, max_generators);

  BettiTable table(Convention::Quotient);
  for (VertexSet m : lcm_lattice(ideal)) {
    const auto dims = reduced_homology_dims(taylor_lower(ideal, m), max_faces);
    // b_{i,m}(I) = dim of reduced homology in degree i-1, so the quotient
    // index is the homology degree plus two.
    for (const auto& [degree, h] : dims) table.add(m, degree + 2, h);
  }
  return table;
}

}  // namespace wofc

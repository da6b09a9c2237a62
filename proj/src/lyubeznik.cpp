#include "wofc/lyubeznik.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "wofc/covers.hpp"

namespace wofc {

GeneratorOrder GeneratorOrder::identity(int count) {
  GeneratorOrder o;
  o.ranked.resize(static_cast<std::size_t>(count));
  o.rank_of.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    o.ranked[static_cast<std::size_t>(i)] = i;
    o.rank_of[static_cast<std::size_t>(i)] = i;
  }
  return o;
}

GeneratorOrder GeneratorOrder::from_ranked(std::vector<int> ranked) {
  const int n = static_cast<int>(ranked.size());
  std::vector<int> rank_of(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    const int g = ranked[static_cast<std::size_t>(r)];
    if (g < 0 || g >= n || rank_of[static_cast<std::size_t>(g)] >= 0)
      throw InputError("generator order must be a permutation of the generators");
    rank_of[static_cast<std::size_t>(g)] = r;
  }
  GeneratorOrder o;
  o.ranked = std::move(ranked);
  o.rank_of = std::move(rank_of);
  return o;
}

int min_generator(const SimplicialComplex& ideal, const GeneratorOrder& order, VertexSet m) {
  for (int g : order.ranked)
    if (ideal.facet(g).subset_of(m)) return g;
  throw InputError("min_generator: no generator divides the multidegree");
}

LyubeznikComplex::LyubeznikComplex(SimplicialComplex ideal, GeneratorOrder order,
                                   int max_generators)
    : ideal_(std::move(ideal)), order_(std::move(order)) {
  const int q = ideal_.facet_count();
  if (q > max_generators) refuse_cap("lyubeznik_complex", q, max_generators);
  if (static_cast<int>(order_.ranked.size()) != q)
    throw InputError("lyubeznik_complex: order size does not match generator count");

  // Grow level by level: a candidate face qualifies when all its maximal
  // proper subsets are rooted and it contains its own least dividing
  // generator. Downward closure makes the check complete.
  std::unordered_set<std::uint64_t> rooted;
  std::vector<GenSet> level;
  for (int g = 0; g < q; ++g) {
    GenSet f = GenSet::single(g);
    if (min_generator(ideal_, order_, ideal_.facet(g)) == g) {
      rooted.insert(f.bits());
      level.push_back(f);
      faces_.push_back(f);
    }
  }
  while (!level.empty()) {
    std::unordered_set<std::uint64_t> candidate_bits;
    for (GenSet f : level)
      for (int g = 0; g < q; ++g)
        if (!f.contains(g)) candidate_bits.insert(f.with(g).bits());
    std::vector<GenSet> next;
    for (std::uint64_t bits : candidate_bits) {
      const GenSet cand = GenSet::from_bits(bits);
      bool all_rooted = true;
      for (int g : cand)
        if (!rooted.count(cand.without(g).bits())) {
          all_rooted = false;
          break;
        }
      if (!all_rooted) continue;
      if (!cand.contains(min_generator(ideal_, order_, lcm(cand)))) continue;
      rooted.insert(bits);
      next.push_back(cand);
    }
    faces_.insert(faces_.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(faces_.begin(), faces_.end(), SizeLexLess{});
  for (GenSet f : faces_) {
    bool maximal = true;
    for (int g = 0; g < q && maximal; ++g)
      if (!f.contains(g) && rooted.count(f.with(g).bits())) maximal = false;
    if (maximal) facets_.push_back(f);
  }
}

bool LyubeznikComplex::is_face(GenSet f) const {
  return std::find(faces_.begin(), faces_.end(), f) != faces_.end();
}

VertexSet LyubeznikComplex::lcm(GenSet face) const { return ideal_.union_of(face); }

LyubeznikComplex lyubeznik_complex(const SimplicialComplex& ideal, const GeneratorOrder& order,
                                   int max_generators) {
  return LyubeznikComplex(ideal, order, max_generators);
}

std::vector<BarileWitness> barile_witnesses(const LyubeznikComplex& lambda) {
  std::vector<BarileWitness> out;
  for (GenSet f : lambda.facets()) {
    const VertexSet full = lambda.lcm(f);
    bool witness = true;
    for (int g : f)
      if (lambda.lcm(f.without(g)) == full) {
        witness = false;
        break;
      }
    if (witness) out.push_back({f, full, f.count()});
  }
  return out;
}

std::vector<BarileWitness> barile_witnesses(const SimplicialComplex& ideal,
                                            const GeneratorOrder& order, int max_generators) {
  return barile_witnesses(lyubeznik_complex(ideal, order, max_generators));
}

WofcOrderResult order_from_wofc(const SimplicialComplex& c, const std::vector<int>& sequence,
                                int max_generators) {
  const auto cert = is_well_ordered(c, sequence);
  if (!cert.well_ordered)
    throw InputError("order_from_wofc: not a well ordered facet cover (" + cert.message + ")");
  std::vector<int> ranked = sequence;
  GenSet used;
  for (int i : sequence) used.insert(i);
  for (int i = 0; i < c.facet_count(); ++i)
    if (!used.contains(i)) ranked.push_back(i);
  GeneratorOrder order = GeneratorOrder::from_ranked(std::move(ranked));
  LyubeznikComplex lambda = lyubeznik_complex(c, order, max_generators);
  GenSet cover;
  for (int i : sequence) cover.insert(i);
  if (std::find(lambda.facets().begin(), lambda.facets().end(), cover) == lambda.facets().end())
    throw std::logic_error("order_from_wofc: cover failed to appear as a maximal rooted face");
  return {std::move(order), std::move(lambda)};
}

std::vector<MonomialMatrix> boundary_matrices(const LyubeznikComplex& lambda) {
  // group the nonempty faces by size; level 0 is the empty face
  std::vector<std::vector<GenSet>> levels(1, {GenSet{}});
  for (GenSet f : lambda.faces()) {
    if (static_cast<std::size_t>(f.count()) >= levels.size())
      levels.resize(static_cast<std::size_t>(f.count()) + 1);
    levels[static_cast<std::size_t>(f.count())].push_back(f);
  }
  auto row_of = [&](std::size_t s, GenSet f) {
    const auto& level = levels[s];
    auto it = std::find(level.begin(), level.end(), f);
    if (it == level.end()) throw std::logic_error("boundary_matrices: missing rooted face");
    return static_cast<int>(it - level.begin());
  };

  std::vector<MonomialMatrix> out;
  const auto& order = lambda.order();
  for (std::size_t s = 1; s < levels.size(); ++s) {
    MonomialMatrix d;
    d.rows = static_cast<int>(levels[s - 1].size());
    d.cols = static_cast<int>(levels[s].size());
    d.columns.resize(static_cast<std::size_t>(d.cols));
    for (std::size_t c = 0; c < levels[s].size(); ++c) {
      const GenSet face = levels[s][c];
      // members in increasing order rank, alternating signs from +
      std::vector<int> members = face.indices();
      std::sort(members.begin(), members.end(), [&](int a, int b) {
        return order.rank_of[static_cast<std::size_t>(a)] <
               order.rank_of[static_cast<std::size_t>(b)];
      });
      const VertexSet full = lambda.lcm(face);
      for (std::size_t j = 0; j < members.size(); ++j) {
        const GenSet sub = face.without(members[j]);
        MonomialEntry e;
        e.row = row_of(s - 1, sub);
        e.sign = j % 2 == 0 ? 1 : -1;
        e.monomial = full - lambda.lcm(sub);
        d.columns[c].push_back(e);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool composition_is_zero(const MonomialMatrix& outer, const MonomialMatrix& inner) {
  if (outer.cols != inner.rows) throw std::logic_error("composition_is_zero: shape mismatch");
  for (int c = 0; c < inner.cols; ++c) {
    // collect signed monomial terms per target row and cancel like terms
    std::map<std::pair<int, std::uint64_t>, long> acc;
    for (const MonomialEntry& e1 : inner.columns[static_cast<std::size_t>(c)])
      for (const MonomialEntry& e2 : outer.columns[static_cast<std::size_t>(e1.row)]) {
        if (e1.monomial.intersects(e2.monomial))
          throw std::logic_error("composition_is_zero: quotient monomials overlap");
        const VertexSet prod = e1.monomial | e2.monomial;
        acc[{e2.row, prod.bits()}] += static_cast<long>(e1.sign) * e2.sign;
      }
    for (const auto& [key, coeff] : acc) {
      (void)key;
      if (coeff != 0) return false;
    }
  }
  return true;
}

}  // namespace wofc

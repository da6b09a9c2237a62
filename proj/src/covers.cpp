#include "wofc/covers.hpp"

#include <algorithm>
#include <unordered_map>

namespace wofc {

namespace {

bool covers_universe(const SimplicialComplex& c, GenSet members) {
  return c.union_of(members) == c.universe();
}

bool is_minimal_cover(const SimplicialComplex& c, GenSet members) {
  if (!covers_universe(c, members)) return false;
  for (int i : members)
    if (covers_universe(c, members.without(i))) return false;
  return true;
}

// Core condition on a fixed sequence: every outside facet H needs a position
// p <= k-2 (0-based) with seq[p] inside H union the suffix after p.
bool sequence_well_ordered(const SimplicialComplex& c, const std::vector<int>& outside,
                           const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  std::vector<VertexSet> suffix(static_cast<std::size_t>(k) + 1);
  for (int p = k - 1; p >= 0; --p)
    suffix[static_cast<std::size_t>(p)] =
        suffix[static_cast<std::size_t>(p) + 1] | c.facet(seq[static_cast<std::size_t>(p)]);
  for (int h : outside) {
    bool witnessed = false;
    for (int p = 0; p <= k - 2 && !witnessed; ++p) {
      if (c.facet(seq[static_cast<std::size_t>(p)])
              .subset_of(c.facet(h) | suffix[static_cast<std::size_t>(p) + 1]))
        witnessed = true;
    }
    if (!witnessed) return false;
  }
  return true;
}

std::vector<int> outside_facets(const SimplicialComplex& c, GenSet cover) {
  std::vector<int> out;
  for (int i = 0; i < c.facet_count(); ++i)
    if (!cover.contains(i)) out.push_back(i);
  return out;
}

// Backtracking feasibility for a suffix: can the members of `initial` be
// ordered in the trailing positions of the sequence so that every
// still-unwitnessed outside facet acquires a witness at a non-final position?
// Positions fill from the back, so the member placed while `remaining` still
// equals `initial` sits at the overall last position and cannot witness;
// suffix unions only ever involve members of `initial`.
class CompletionSearch {
 public:
  CompletionSearch(const SimplicialComplex& c, GenSet initial,
                   const std::vector<int>& outside)
      : c_(c), initial_(initial), outside_(outside) {}

  bool feasible(GenSet remaining, std::uint64_t unmatched) {
    if (unmatched == 0) return true;
    if (remaining.empty()) return false;
    const std::uint64_t key_r = remaining.bits();
    auto it = memo_.find({key_r, unmatched});
    if (it != memo_.end()) return it->second;

    VertexSet placed_union = placed_union_of(remaining);
    bool ok = false;
    if (!prune(remaining, placed_union, unmatched)) {
      const bool can_witness = remaining != initial_;
      for (int l : remaining) {
        std::uint64_t next_unmatched = unmatched;
        if (can_witness) {
          for (int idx = 0; idx < static_cast<int>(outside_.size()); ++idx) {
            if (!((unmatched >> idx) & 1u)) continue;
            if (c_.facet(l).subset_of(c_.facet(outside_[static_cast<std::size_t>(idx)]) | placed_union))
              next_unmatched &= ~(std::uint64_t{1} << idx);
          }
        }
        if (feasible(remaining.without(l), next_unmatched)) {
          ok = true;
          break;
        }
      }
    }
    memo_[{key_r, unmatched}] = ok;
    return ok;
  }

 private:
  VertexSet placed_union_of(GenSet remaining) const { return c_.union_of(initial_ - remaining); }

  // A facet that cannot be witnessed even with the most generous suffix makes
  // the branch hopeless.
  bool prune(GenSet remaining, VertexSet placed_union, std::uint64_t unmatched) const {
    for (int idx = 0; idx < static_cast<int>(outside_.size()); ++idx) {
      if (!((unmatched >> idx) & 1u)) continue;
      const VertexSet h = c_.facet(outside_[static_cast<std::size_t>(idx)]);
      bool possible = false;
      for (int g : remaining) {
        VertexSet best_suffix = placed_union | c_.union_of(remaining.without(g));
        if (c_.facet(g).subset_of(h | best_suffix)) {
          possible = true;
          break;
        }
      }
      if (!possible) return true;
    }
    return false;
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };

  const SimplicialComplex& c_;
  GenSet initial_;
  std::vector<int> outside_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, KeyHash> memo_;
};

// Outside facets already witnessed by a fixed prefix, given that the rest of
// the cover will occupy the later positions in some order.
std::uint64_t unmatched_after_prefix(const SimplicialComplex& c,
                                     const std::vector<int>& outside,
                                     const std::vector<int>& prefix, GenSet remaining) {
  const VertexSet rest_union = c.union_of(remaining);
  std::uint64_t unmatched = 0;
  for (int idx = 0; idx < static_cast<int>(outside.size()); ++idx) {
    const VertexSet h = c.facet(outside[static_cast<std::size_t>(idx)]);
    VertexSet suffix = rest_union;
    bool witnessed = false;
    for (int p = static_cast<int>(prefix.size()) - 1; p >= 0 && !witnessed; --p) {
      if (c.facet(prefix[static_cast<std::size_t>(p)]).subset_of(h | suffix)) witnessed = true;
      suffix |= c.facet(prefix[static_cast<std::size_t>(p)]);
    }
    if (!witnessed) unmatched |= std::uint64_t{1} << idx;
  }
  return unmatched;
}

}  // namespace

std::vector<GenSet> minimal_facet_covers(const SimplicialComplex& c, int max_facets) {
  const int q = c.facet_count();
  if (q > max_facets) refuse_cap("minimal_facet_covers", q, max_facets);
  std::vector<GenSet> out;
  for_each_subset_size_lex(q, [&](std::uint64_t bits) {
    GenSet s = GenSet::from_bits(bits);
    if (is_minimal_cover(c, s)) out.push_back(s);
    return true;
  });
  return out;
}

WellOrderedCertificate is_well_ordered(const SimplicialComplex& c,
                                       const std::vector<int>& sequence) {
  if (sequence.empty()) throw InputError("is_well_ordered: empty sequence");
  GenSet cover;
  for (int i : sequence) {
    if (i < 0 || i >= c.facet_count()) throw InputError("is_well_ordered: no such facet");
    if (cover.contains(i)) throw InputError("is_well_ordered: repeated facet in sequence");
    cover.insert(i);
  }
  WellOrderedCertificate out;
  if (!covers_universe(c, cover)) {
    VertexSet uncovered = c.universe() - c.union_of(cover);
    out.failure = WofcFailure::Coverage;
    out.detail = uncovered.lowest();
    out.message = "not a facet cover: vertex " + c.name(out.detail) + " is uncovered";
    return out;
  }
  for (int i : cover) {
    if (covers_universe(c, cover.without(i))) {
      out.failure = WofcFailure::Minimality;
      out.detail = i;
      out.message = "cover is not minimal: facet " + std::to_string(i + 1) + " is redundant";
      return out;
    }
  }
  const int k = static_cast<int>(sequence.size());
  std::vector<VertexSet> suffix(static_cast<std::size_t>(k) + 1);
  for (int p = k - 1; p >= 0; --p)
    suffix[static_cast<std::size_t>(p)] =
        suffix[static_cast<std::size_t>(p) + 1] | c.facet(sequence[static_cast<std::size_t>(p)]);
  for (int h = 0; h < c.facet_count(); ++h) {
    if (cover.contains(h)) continue;
    int witness = -1;
    for (int p = 0; p <= k - 2 && witness < 0; ++p) {
      if (c.facet(sequence[static_cast<std::size_t>(p)])
              .subset_of(c.facet(h) | suffix[static_cast<std::size_t>(p) + 1]))
        witness = p + 1;
    }
    if (witness < 0) {
      out.failure = WofcFailure::Witness;
      out.detail = h;
      out.witnesses.clear();
      out.message = "facet " + std::to_string(h + 1) + " has no witness index";
      return out;
    }
    out.witnesses[h] = witness;
  }
  out.well_ordered = true;
  out.message = "well ordered facet cover";
  return out;
}

std::optional<std::vector<int>> lex_least_well_ordering(const SimplicialComplex& c,
                                                        GenSet cover,
                                                        int permutation_threshold) {
  const std::vector<int> outside = outside_facets(c, cover);
  std::vector<int> members = cover.indices();
  const int k = static_cast<int>(members.size());
  if (outside.empty()) return members;  // any order is vacuously valid

  if (k <= permutation_threshold) {
    std::vector<int> perm = members;
    do {
      if (sequence_well_ordered(c, outside, perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  // Lex-greedy: extend the prefix with the smallest facet index that still
  // admits a feasible completion of the remaining members.
  std::vector<int> prefix;
  GenSet remaining = cover;
  for (int pos = 0; pos < k; ++pos) {
    bool extended = false;
    for (int cand : remaining) {
      prefix.push_back(cand);
      GenSet rest = remaining.without(cand);
      bool ok;
      if (rest.empty()) {
        ok = sequence_well_ordered(c, outside, prefix);
      } else {
        std::uint64_t unmatched = unmatched_after_prefix(c, outside, prefix, rest);
        CompletionSearch search(c, rest, outside);
        ok = search.feasible(rest, unmatched);
      }
      if (ok) {
        remaining = rest;
        extended = true;
        break;
      }
      prefix.pop_back();
    }
    if (!extended) return std::nullopt;
  }
  return prefix;
}

std::vector<WofcResult> find_well_ordered_covers(const SimplicialComplex& c,
                                                 int max_facets,
                                                 int permutation_threshold) {
  std::vector<WofcResult> out;
  std::map<int, std::vector<int>> best;
  for (GenSet cover : minimal_facet_covers(c, max_facets)) {
    auto order = lex_least_well_ordering(c, cover, permutation_threshold);
    if (!order) continue;
    auto it = best.find(cover.count());
    if (it == best.end() || *order < it->second) best[cover.count()] = *order;
  }
  for (auto& [card, order] : best) out.push_back({card, std::move(order)});
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const SimplicialComplex& c, int max_vertices) {
  const int n = c.vertex_count();
  if (n > max_vertices) refuse_cap("minimal_vertex_covers", n, max_vertices);
  const std::vector<int> verts = c.universe().indices();
  std::vector<VertexSet> out;
  for_each_subset_size_lex(n, [&](std::uint64_t bits) {
    VertexSet cand;
    for (int b = 0; b < n; ++b)
      if ((bits >> b) & 1u) cand.insert(verts[static_cast<std::size_t>(b)]);
    bool covers = true;
    for (VertexSet f : c.facets())
      if (!f.intersects(cand)) {
        covers = false;
        break;
      }
    if (!covers) return true;
    // minimal iff every member meets some facet privately
    for (int v : cand) {
      bool has_private = false;
      for (VertexSet f : c.facets())
        if ((f & cand) == VertexSet::single(v)) {
          has_private = true;
          break;
        }
      if (!has_private) return true;
    }
    out.push_back(cand);
    return true;
  });
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

bool is_induced_matching(const SimplicialComplex& c, GenSet facets) {
  if (facets.empty()) return false;
  VertexSet seen;
  for (int i : facets) {
    if (c.facet(i).intersects(seen)) return false;
    seen |= c.facet(i);
  }
  for (int h = 0; h < c.facet_count(); ++h)
    if (!facets.contains(h) && c.facet(h).subset_of(seen)) return false;
  return true;
}

MatchingWeight max_induced_matching_weight(const SimplicialComplex& c, int max_facets) {
  const int q = c.facet_count();
  if (q > max_facets) refuse_cap("max_induced_matching_weight", q, max_facets);
  MatchingWeight best;
  bool found = false;
  for_each_subset_size_lex(q, [&](std::uint64_t bits) {
    GenSet s = GenSet::from_bits(bits);
    if (!is_induced_matching(c, s)) return true;
    long value = c.union_of(s).count() - s.count();
    if (!found || value > best.value) {
      best.value = value;
      best.matching = s;
      found = true;
    }
    return true;
  });
  if (!found) throw InputError("max_induced_matching_weight: empty complex");
  return best;
}

}  // namespace wofc

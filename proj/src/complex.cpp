#include "wofc/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace wofc {

namespace {

VertexSet union_of_all(const std::vector<VertexSet>& facets) {
  VertexSet u;
  for (VertexSet f : facets) u |= f;
  return u;
}

}  // namespace

SimplicialComplex::SimplicialComplex(NameTablePtr names, std::vector<VertexSet> facets)
    : names_(std::move(names)), facets_(std::move(facets)) {
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].empty()) throw InputError("facet " + std::to_string(i + 1) + " is empty");
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && facets_[i].subset_of(facets_[j]))
        throw InputError("facets are not pairwise incomparable");
    }
  }
  universe_ = union_of_all(facets_);
  if (!facets_.empty()) {
    int top = 63 - std::countl_zero(universe_.bits());
    if (static_cast<std::size_t>(top) >= names_->size())
      throw InputError("facet refers to a vertex outside the name table");
  }
}

NameTablePtr default_names(int n) {
  static std::mutex mu;
  static std::map<int, NameTablePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<NameTable>();
  table->reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) table->push_back("x" + std::to_string(i));
  cache[n] = table;
  return table;
}

SimplicialComplex SimplicialComplex::from_masks(int n_vertices,
                                                const std::vector<std::uint64_t>& facets) {
  std::vector<VertexSet> fs;
  fs.reserve(facets.size());
  for (std::uint64_t m : facets) fs.push_back(VertexSet::from_bits(m));
  return SimplicialComplex(default_names(n_vertices), std::move(fs));
}

std::string SimplicialComplex::monomial(VertexSet s) const {
  std::string out;
  for (int v : s) out += name(v);
  if (out.empty()) out = "1";
  return out;
}

std::vector<std::string> SimplicialComplex::name_list(VertexSet s) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(s.count()));
  for (int v : s) out.push_back(name(v));
  return out;
}

std::optional<int> SimplicialComplex::find_vertex(std::string_view n) const {
  if (!names_) return std::nullopt;
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == n && universe_.contains(static_cast<int>(i)))
      return static_cast<int>(i);
  return std::nullopt;
}

int SimplicialComplex::find_facet(VertexSet f) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i] == f) return static_cast<int>(i);
  return -1;
}

VertexSet SimplicialComplex::union_of(GenSet facet_subset) const {
  VertexSet u;
  for (int i : facet_subset) u |= facet(i);
  return u;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (facets_.size() != other.facets_.size()) return false;
  if (names_ == other.names_) {
    for (VertexSet f : facets_)
      if (other.find_facet(f) < 0) return false;
    return true;
  }
  auto canon = [](const SimplicialComplex& c) {
    std::vector<std::vector<std::string>> fs;
    for (VertexSet f : c.facets_) {
      auto names = c.name_list(f);
      std::sort(names.begin(), names.end());
      fs.push_back(std::move(names));
    }
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  return canon(*this) == canon(other);
}

namespace {

NormalizeResult normalize_impl(NameTablePtr names, const std::vector<VertexSet>& raw) {
  if (raw.empty()) throw InputError("no facets given");
  const std::size_t n = raw.size();
  if (n > 64) throw InputError("at most 64 facets are supported");
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].empty()) throw InputError("facet " + std::to_string(i + 1) + " is empty");

  std::vector<VertexSet> kept;
  std::vector<int> dropped;
  for (std::size_t i = 0; i < n; ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < n && keep; ++j) {
      if (j == i) continue;
      if (raw[i].proper_subset_of(raw[j])) keep = false;
      if (raw[i] == raw[j] && j < i) keep = false;
    }
    if (keep)
      kept.push_back(raw[i]);
    else
      dropped.push_back(static_cast<int>(i));
  }
  return {SimplicialComplex(std::move(names), std::move(kept)), std::move(dropped)};
}

}  // namespace

NormalizeResult normalize_complex(const std::vector<std::vector<std::string>>& raw_facets) {
  if (raw_facets.empty()) throw InputError("no facets given");
  auto names = std::make_shared<NameTable>();
  std::vector<VertexSet> masks;
  masks.reserve(raw_facets.size());
  for (std::size_t i = 0; i < raw_facets.size(); ++i) {
    const auto& tokens = raw_facets[i];
    if (tokens.empty()) throw InputError("facet " + std::to_string(i + 1) + " is empty");
    VertexSet f;
    for (const std::string& t : tokens) {
      auto it = std::find(names->begin(), names->end(), t);
      int idx;
      if (it == names->end()) {
        if (names->size() >= 64) throw InputError("at most 64 distinct variables are supported");
        idx = static_cast<int>(names->size());
        names->push_back(t);
      } else {
        idx = static_cast<int>(it - names->begin());
      }
      if (f.contains(idx))
        throw InputError("facet " + std::to_string(i + 1) + " repeats variable '" + t + "'");
      f.insert(idx);
    }
    masks.push_back(f);
  }
  return normalize_impl(std::move(names), masks);
}

NormalizeResult normalize_masks(NameTablePtr names, const std::vector<VertexSet>& raw_facets) {
  return normalize_impl(std::move(names), raw_facets);
}

InducedSubcollection induced_subcollection(const SimplicialComplex& c, VertexSet a) {
  if (!a.subset_of(c.universe()))
    throw InputError("induced subcollection: vertex set contains unknown vertices");
  std::vector<VertexSet> kept;
  std::vector<int> parents;
  for (int i = 0; i < c.facet_count(); ++i) {
    if (c.facet(i).subset_of(a)) {
      kept.push_back(c.facet(i));
      parents.push_back(i);
    }
  }
  return {SimplicialComplex(c.names_ptr(), std::move(kept)), std::move(parents)};
}

std::vector<ComplexPart> connected_components(const SimplicialComplex& c) {
  if (c.empty()) throw InputError("connected_components: empty complex");
  const int q = c.facet_count();
  std::vector<int> root(static_cast<std::size_t>(q));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (c.facet(i).intersects(c.facet(j))) {
        int a = find(i), b = find(j);
        if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
  std::vector<ComplexPart> parts;
  for (int r = 0; r < q; ++r) {
    if (find(r) != r) continue;
    std::vector<VertexSet> fs;
    std::vector<int> parents;
    for (int i = 0; i < q; ++i)
      if (find(i) == r) {
        fs.push_back(c.facet(i));
        parents.push_back(i);
      }
    parts.push_back({SimplicialComplex(c.names_ptr(), std::move(fs)), std::move(parents)});
  }
  return parts;
}

namespace {

// Leaf test on an explicit facet subset, used by the forest scan.
bool subset_facet_is_leaf(const std::vector<VertexSet>& facets, GenSet sub, int f) {
  if (sub.count() == 1) return true;
  for (int g : sub) {
    if (g == f) continue;
    bool joint = true;
    for (int h : sub) {
      if (h == f || h == g) continue;
      VertexSet inter = facets[static_cast<std::size_t>(f)] & facets[static_cast<std::size_t>(h)];
      if (!inter.subset_of(facets[static_cast<std::size_t>(g)])) {
        joint = false;
        break;
      }
    }
    if (joint) return true;
  }
  return false;
}

bool subset_has_leaf(const std::vector<VertexSet>& facets, GenSet sub) {
  for (int f : sub)
    if (subset_facet_is_leaf(facets, sub, f)) return true;
  return false;
}

}  // namespace

LeafCheck is_leaf(const SimplicialComplex& c, int facet_index) {
  if (facet_index < 0 || facet_index >= c.facet_count())
    throw InputError("is_leaf: no such facet");
  LeafCheck out;
  if (c.facet_count() == 1) {
    out.leaf = true;
    out.only_facet = true;
    out.free_vertices = c.facet(0);
    return out;
  }
  const VertexSet f = c.facet(facet_index);
  for (int g = 0; g < c.facet_count(); ++g) {
    if (g == facet_index) continue;
    bool joint = true;
    for (int h = 0; h < c.facet_count() && joint; ++h) {
      if (h == facet_index || h == g) continue;
      if (!(f & c.facet(h)).subset_of(c.facet(g))) joint = false;
    }
    if (joint) {
      out.leaf = true;
      out.witness = g;
      VertexSet others;
      for (int h = 0; h < c.facet_count(); ++h)
        if (h != facet_index) others |= c.facet(h);
      out.free_vertices = f - others;
      return out;
    }
  }
  return out;
}

std::vector<int> leaves_of(const SimplicialComplex& c) {
  std::vector<int> out;
  for (int i = 0; i < c.facet_count(); ++i)
    if (is_leaf(c, i).leaf) out.push_back(i);
  return out;
}

ForestCheck is_forest(const SimplicialComplex& c, int max_facets) {
  const int q = c.facet_count();
  if (q > max_facets) refuse_cap("is_forest", q, max_facets);
  ForestCheck out;
  out.forest = true;
  for_each_subset_size_lex(q, [&](std::uint64_t bits) {
    GenSet sub = GenSet::from_bits(bits);
    if (!subset_has_leaf(c.facets(), sub)) {
      out.forest = false;
      out.counterexample = sub;
      return false;
    }
    return true;
  });
  return out;
}

namespace {

Localization localize_from_raw(const NameTablePtr& names,
                               const std::vector<std::pair<VertexSet, int>>& raw) {
  Localization out;
  for (const auto& [s, parent] : raw) {
    (void)parent;
    if (s.empty()) {
      out.unit_ideal = true;
      return out;
    }
  }
  std::vector<VertexSet> kept;
  std::vector<int> parents;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < raw.size() && keep; ++j) {
      if (j == i) continue;
      if (raw[j].first.proper_subset_of(raw[i].first)) keep = false;
      if (raw[j].first == raw[i].first && j < i) keep = false;
    }
    if (keep) {
      kept.push_back(raw[i].first);
      parents.push_back(raw[i].second);
    }
  }
  out.complex = SimplicialComplex(names, std::move(kept));
  out.parent_facets = std::move(parents);
  return out;
}

}  // namespace

Localization localize(const SimplicialComplex& c, int facet_index) {
  if (facet_index < 0 || facet_index >= c.facet_count())
    throw InputError("localize: no such facet");
  if (c.facet_count() < 2) throw InputError("localize: complex must have at least two facets");
  const VertexSet f = c.facet(facet_index);
  std::vector<std::pair<VertexSet, int>> raw;
  for (int j = 0; j < c.facet_count(); ++j) {
    if (j == facet_index) continue;
    raw.emplace_back(c.facet(j) - f, j);
  }
  return localize_from_raw(c.names_ptr(), raw);
}

Localization localize_at_prime(const SimplicialComplex& c, VertexSet prime_support) {
  if (!prime_support.subset_of(c.universe()))
    throw InputError("localize_at_prime: support contains unknown vertices");
  std::vector<std::pair<VertexSet, int>> raw;
  for (int j = 0; j < c.facet_count(); ++j) raw.emplace_back(c.facet(j) & prime_support, j);
  return localize_from_raw(c.names_ptr(), raw);
}

std::vector<VertexSet> lcm_lattice(const SimplicialComplex& c) {
  std::set<std::uint64_t> seen;
  const int q = c.facet_count();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << q); ++pick)
    seen.insert(c.union_of(GenSet::from_bits(pick)).bits());
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (std::uint64_t bits : seen) out.push_back(VertexSet::from_bits(bits));
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

}  // namespace wofc

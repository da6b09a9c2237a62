#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wofc/complex.hpp"
#include "wofc/instances.hpp"

using namespace wofc;
using namespace wofc::testing;

TEST_CASE("normalize keeps maximal facets and reports drops") {
  SUBCASE("running tree stays intact") {
    auto result = normalize_complex(
        {{"x1", "x2", "x3"}, {"x1", "x3", "x4"}, {"x3", "x4", "x5"}, {"x3", "x5", "x6"}});
    CHECK(result.complex.facet_count() == 4);
    CHECK(result.complex.vertex_count() == 6);
    CHECK(result.dropped_inputs.empty());
  }
  SUBCASE("duplicates collapse") {
    auto result = normalize_complex({{"x", "y"}, {"x", "y"}});
    CHECK(result.complex.facet_count() == 1);
    CHECK(result.dropped_inputs == std::vector<int>{1});
  }
  SUBCASE("subsets are dropped") {
    auto result = normalize_complex({{"x", "y"}, {"x", "y", "z"}});
    CHECK(result.complex.facet_count() == 1);
    CHECK(result.complex.facet(0).count() == 3);
    CHECK(result.dropped_inputs == std::vector<int>{0});
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(normalize_complex({}), InputError);
    CHECK_THROWS_AS(normalize_complex({{"x"}, {}}), InputError);
  }
  SUBCASE("representation limits") {
    std::vector<std::vector<std::string>> edges;
    for (int a = 1; a <= 12 && edges.size() < 65; ++a)
      for (int b = a + 1; b <= 12 && edges.size() < 65; ++b)
        edges.push_back({"v" + std::to_string(a), "v" + std::to_string(b)});
    CHECK_THROWS_AS(normalize_complex(edges), InputError);
    std::vector<std::vector<std::string>> wide(1);
    for (int i = 1; i <= 65; ++i) wide[0].push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(normalize_complex(wide), InputError);
  }
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex c = random_complex(rng);
    auto again = normalize_masks(c.names_ptr(), c.facets());
    CHECK(again.dropped_inputs.empty());
    CHECK(again.complex == c);
  }
}

TEST_CASE("induced subcollection") {
  const SimplicialComplex tree = fig_tree();
  SUBCASE("four-vertex window keeps F1 and F2") {
    auto ind = induced_subcollection(tree, verts({2, 3, 4, 5}));
    CHECK(ind.complex.facet_count() == 2);
    CHECK(ind.parent_facets == std::vector<int>{0, 1});
    CHECK(ind.complex == SimplicialComplex(tree.names_ptr(), {tree.facet(0), tree.facet(1)}));
  }
  SUBCASE("the whole vertex set is the identity") {
    CHECK(induced_subcollection(tree, tree.universe()).complex == tree);
  }
  SUBCASE("window too small gives the empty complex") {
    auto ind = induced_subcollection(tree, verts({0, 1}));
    CHECK(ind.complex.empty());
  }
  SUBCASE("unknown vertices are rejected") {
    CHECK_THROWS_AS(induced_subcollection(tree, VertexSet::single(7)), InputError);
  }
}

TEST_CASE("induced subcollection is monotone") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex c = random_complex(rng);
    const auto verts_list = c.universe().indices();
    std::uniform_int_distribution<int> coin(0, 1);
    VertexSet a, b;
    for (int v : verts_list)
      if (coin(rng)) b.insert(v);
    for (int v : b)
      if (coin(rng)) a.insert(v);
    const auto fa = induced_subcollection(c, a);
    const auto fb = induced_subcollection(c, b);
    for (int parent : fa.parent_facets)
      CHECK(std::find(fb.parent_facets.begin(), fb.parent_facets.end(), parent) !=
            fb.parent_facets.end());
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(fig_tree()).size() == 1);
  CHECK(connected_components(two_edges()).size() == 2);
  auto mixed = normalize_complex({{"a", "b"}, {"b", "c"}, {"d"}});
  auto parts = connected_components(mixed.complex);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].parent_facets == std::vector<int>{0, 1});
  CHECK(parts[1].parent_facets == std::vector<int>{2});
}

TEST_CASE("leaf detection") {
  const SimplicialComplex tree = fig_tree();
  SUBCASE("F3 is a leaf joined to F4 with free vertex x2") {
    auto check = is_leaf(tree, 2);
    CHECK(check.leaf);
    CHECK_FALSE(check.only_facet);
    CHECK(check.witness == 3);
    CHECK(check.free_vertices == VertexSet::single(1));
  }
  SUBCASE("F1 is not a leaf") { CHECK_FALSE(is_leaf(tree, 0).leaf); }
  SUBCASE("a lone facet is a leaf") {
    auto single = normalize_complex({{"a", "b"}}).complex;
    auto check = is_leaf(single, 0);
    CHECK(check.leaf);
    CHECK(check.only_facet);
    CHECK(check.free_vertices == single.facet(0));
  }
  SUBCASE("unknown facet rejected") { CHECK_THROWS_AS(is_leaf(tree, 4), InputError); }
  SUBCASE("leaves of the tree are F2 and F3") {
    CHECK(leaves_of(tree) == std::vector<int>{1, 2});
  }
}

TEST_CASE("every leaf has a free vertex") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex c = random_complex(rng);
    for (int i = 0; i < c.facet_count(); ++i) {
      auto check = is_leaf(c, i);
      if (check.leaf) CHECK_FALSE(check.free_vertices.empty());
    }
  }
}

TEST_CASE("forest recognition") {
  CHECK(is_forest(fig_tree()).forest);
  SUBCASE("triangle is leafless as a whole") {
    auto check = is_forest(triangle());
    CHECK_FALSE(check.forest);
    CHECK(check.counterexample == gens({0, 1, 2}));
  }
  CHECK(is_forest(normalize_complex({{"a"}}).complex).forest);
  SUBCASE("cap refusal names the cap") {
    std::vector<std::vector<std::string>> raw;
    for (int i = 1; i <= 21; ++i) raw.push_back({"v" + std::to_string(i)});
    auto big = normalize_complex(raw).complex;
    CHECK_THROWS_AS(is_forest(big, 20), CapExceeded);
    CHECK(is_forest(big, 21).forest);
  }
}

TEST_CASE("forests are closed under subcollections") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    SimplicialComplex c = random_forest(rng, 5, 7);
    const int q = c.facet_count();
    for_each_subset_size_lex(q, [&](std::uint64_t bits) {
      std::vector<VertexSet> sub;
      for (int i : GenSet::from_bits(bits)) sub.push_back(c.facet(i));
      CHECK(is_forest(SimplicialComplex(c.names_ptr(), sub)).forest);
      return true;
    });
  }
}

TEST_CASE("localization") {
  const SimplicialComplex tree = fig_tree();
  SUBCASE("localizing away the leaf F2") {
    auto loc = localize(tree, 1);
    REQUIRE_FALSE(loc.unit_ideal);
    REQUIRE(loc.complex.facet_count() == 2);
    CHECK(loc.complex.find_facet(VertexSet::single(3)) >= 0);  // x4
    CHECK(loc.complex.find_facet(verts({0, 1})) >= 0);         // x1x2
    CHECK(loc.parent_facets == std::vector<int>{0, 2});        // from F1 and F3
  }
  SUBCASE("localizing at the prime (x1, x3, x5)") {
    auto loc = localize_at_prime(tree, verts({0, 2, 4}));
    REQUIRE_FALSE(loc.unit_ideal);
    REQUIRE(loc.complex.facet_count() == 2);
    CHECK(loc.complex.find_facet(verts({0, 2})) >= 0);  // x1x3
    CHECK(loc.complex.find_facet(verts({2, 4})) >= 0);  // x3x5
  }
  SUBCASE("localizing at the prime (x2, x4, x6)") {
    auto loc = localize_at_prime(tree, verts({1, 3, 5}));
    REQUIRE_FALSE(loc.unit_ideal);
    REQUIRE(loc.complex.facet_count() == 3);
    CHECK(loc.complex.find_facet(VertexSet::single(1)) >= 0);
    CHECK(loc.complex.find_facet(VertexSet::single(3)) >= 0);
    CHECK(loc.complex.find_facet(VertexSet::single(5)) >= 0);
  }
  SUBCASE("disjoint facets are unaffected") {
    auto loc = localize(two_edges(), 0);
    REQUIRE_FALSE(loc.unit_ideal);
    REQUIRE(loc.complex.facet_count() == 1);
    CHECK(loc.complex.facet(0) == verts({2, 3}));
  }
  SUBCASE("a prime missing a generator localizes to the unit ideal") {
    auto loc = localize_at_prime(two_edges(), VertexSet::single(0));
    CHECK(loc.unit_ideal);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(localize(normalize_complex({{"a", "b"}}).complex, 0), InputError);
    CHECK_THROWS_AS(localize(tree, 9), InputError);
  }
}

TEST_CASE("localizing a forest at a leaf stays a forest") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex c = random_forest(rng, 5, 8);
    if (c.facet_count() < 2) continue;
    for (int leaf : leaves_of(c)) {
      auto loc = localize(c, leaf);
      REQUIRE_FALSE(loc.unit_ideal);
      CHECK(is_forest(loc.complex).forest);
    }
  }
}

TEST_CASE("lcm lattice of the tree") {
  auto lattice = lcm_lattice(fig_tree());
  CHECK(lattice.size() == 11);
  CHECK(std::find(lattice.begin(), lattice.end(), verts({2, 3, 4, 5})) != lattice.end());
  CHECK(lattice.back() == VertexSet::first_n(6));
}

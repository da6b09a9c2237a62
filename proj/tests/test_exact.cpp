#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "wofc/exact.hpp"

using namespace wofc;

namespace {

using int128 = __int128;

BigInt from128(int128 v) {
  // build via two halves to exercise BigInt arithmetic itself
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out(static_cast<long long>(mag >> 64));
  out = out * BigInt(1LL << 32) * BigInt(1LL << 32) +
        BigInt(static_cast<long long>(mag & 0x7FFFFFFFFFFFFFFFULL)) +
        ((mag >> 63) & 1 ? BigInt(1LL << 62) + BigInt(1LL << 62) : BigInt(0));
  return neg ? -out : out;
}

std::string to_string128(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (mag) {
    s.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

// Largest k with a nonzero k x k minor, by direct minor expansion. Tiny
// matrices only; completely independent of the elimination code.
long rank_by_minors(const std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  auto det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
    const int k = static_cast<int>(rs.size());
    std::vector<int> perm(cs.begin(), cs.end());
    std::sort(perm.begin(), perm.end());
    int128 sum = 0;
    do {
      int sign = 1;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
      int128 prod = sign;
      for (int i = 0; i < k; ++i)
        prod *= m[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
  };
  for (int k = std::min(rows, cols); k >= 1; --k) {
    std::vector<int> rs(static_cast<std::size_t>(k)), cs(static_cast<std::size_t>(k));
    std::function<bool(int, int)> pick_rows = [&](int start, int depth) {
      if (depth == k) {
        std::function<bool(int, int)> pick_cols = [&](int cstart, int cdepth) {
          if (cdepth == k) return det(rs, cs) != 0;
          for (int c = cstart; c < cols; ++c) {
            cs[static_cast<std::size_t>(cdepth)] = c;
            if (pick_cols(c + 1, cdepth + 1)) return true;
          }
          return false;
        };
        return pick_cols(0, 0);
      }
      for (int r = start; r < rows; ++r) {
        rs[static_cast<std::size_t>(depth)] = r;
        if (pick_rows(r + 1, depth + 1)) return true;
      }
      return false;
    };
    if (pick_rows(0, 0)) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("BigInt arithmetic agrees with 128-bit integers") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int trial = 0; trial < 3000; ++trial) {
    const long long a = dist(rng), b = dist(rng), c = dist(rng);
    const int128 prod = static_cast<int128>(a) * b;
    CHECK((BigInt(a) * BigInt(b)).to_string() == to_string128(prod));
    CHECK((BigInt(a) + BigInt(b)).to_string() == to_string128(static_cast<int128>(a) + b));
    CHECK((BigInt(a) - BigInt(b)).to_string() == to_string128(static_cast<int128>(a) - b));
    if (b != 0) {
      // exact division of a*b*c by b recovers a*c
      const BigInt n = BigInt(a) * BigInt(b) * BigInt(c);
      CHECK(n.divide_exact(BigInt(b)).to_string() ==
            to_string128(static_cast<int128>(a) * c));
    }
    CHECK((BigInt::compare(BigInt(a), BigInt(b)) < 0) == (a < b));
  }
}

namespace {

BigInt from_limbs(std::initializer_list<std::uint32_t> little_endian) {
  const BigInt base = BigInt(1LL << 32);
  BigInt out(0), scale(1);
  for (std::uint32_t limb : little_endian) {
    out = out + scale * BigInt(static_cast<long long>(limb));
    scale = scale * base;
  }
  return out;
}

}  // namespace

TEST_CASE("long division survives the add-back digit correction") {
  // exact quotients whose schoolbook division overestimates a digit and must
  // correct it; found by instrumented search
  struct Vector {
    BigInt q, v, u;
  };
  const Vector vectors[] = {
      {from_limbs({0x41219753u, 0xFFFFFFFFu, 0x6D9E7354u}),
       from_limbs({0xF6DA0F01u, 0xCE9D45FAu, 0x435E895Cu}),
       from_limbs({0xD7AD7453u, 0x8871D8E2u, 0xAC3E005Au, 0x1A6C7AB6u, 0x2158C87Eu,
                   0x1CD8F32Fu})},
      {from_limbs({0xFFFFFFFFu, 0xFFFFFFFFu, 0x00000002u}),
       from_limbs({0x93FC2FF5u, 0x79AF3726u, 0x00000002u}),
       from_limbs({0x6C03D00Bu, 0x8650C8D9u, 0xBBF48FDCu, 0x6D0DA573u, 0x00000007u})},
      {from_limbs({0x323D8803u, 0xFFFFFFFFu, 0x7FFFFFFFu}),
       from_limbs({0xFFFFFFFFu, 0xE896C1B1u, 0x851DB29Bu}),
       from_limbs({0xCDC277FDu, 0xBC14D516u, 0xF0390772u, 0x95021912u, 0xF44B60D8u,
                   0x428ED94Du})},
      {from_limbs({0xFFFFFFFFu, 0xBC5E1E4Au, 0xA8349A49u}),
       from_limbs({0xFFFFFFFFu, 0x65E4DE03u, 0x80000000u}),
       from_limbs({0x00000001u, 0xDDBD03B1u, 0xF954E8E1u, 0x3F9B4045u, 0x212230BEu,
                   0x541A4D25u})},
      {from_limbs({0xFFFFFFFFu, 0xFFFFFFFFu, 0x64C29872u}),
       from_limbs({0xFFFFFFFFu, 0xDDE57A15u, 0xBE9CA106u}),
       from_limbs({0x00000001u, 0x221A85EAu, 0xDCA0C686u, 0x0B3EE7E0u, 0x55DA356Du,
                   0x4B06131Bu})},
      {from_limbs({0xFFFFFFFFu, 0xFFFFFFFFu, 0xB7E5D66Du}),
       from_limbs({0x4028E26Eu, 0x7FFFFFFFu, 0x92441546u}),
       from_limbs({0xBFD71D92u, 0x80000000u, 0x5AFB29FDu, 0x7630FDBEu, 0x309A934Au,
                   0x6911FCA0u})},
  };
  for (const auto& vec : vectors) {
    CHECK(vec.q * vec.v == vec.u);  // the vector itself is consistent
    CHECK(vec.u.divide_exact(vec.v) == vec.q);
    CHECK(vec.u.divide_exact(vec.q) == vec.v);
    CHECK((-vec.u).divide_exact(vec.v) == -vec.q);
  }
}

TEST_CASE("BigInt boundary-limb fuzz round trips") {
  std::mt19937_64 rng(137);
  const std::uint32_t pool[] = {0u,          1u,          2u,          0x7FFFFFFFu,
                                0x80000000u, 0x80000001u, 0xFFFFFFFEu, 0xFFFFFFFFu};
  auto draw = [&](int limbs) {
    BigInt out(0), scale(1);
    const BigInt base = BigInt(1LL << 32);
    for (int i = 0; i < limbs; ++i) {
      const std::uint32_t limb =
          (rng() & 1) ? pool[rng() % 8] : static_cast<std::uint32_t>(rng());
      out = out + scale * BigInt(static_cast<long long>(limb));
      scale = scale * base;
    }
    return out;
  };
  for (int trial = 0; trial < 20000; ++trial) {
    const BigInt q = draw(1 + static_cast<int>(rng() % 3));
    const BigInt v = draw(2 + static_cast<int>(rng() % 2));
    if (q.is_zero() || v.is_zero()) continue;
    CHECK((q * v).divide_exact(v) == q);
  }
}

TEST_CASE("BigInt multi-limb round trips") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long long> dist(-(1LL << 62), 1LL << 62);
  for (int trial = 0; trial < 2000; ++trial) {
    const int128 a = static_cast<int128>(dist(rng)) * dist(rng) + dist(rng);
    const long long d = dist(rng) | 1;  // nonzero
    const BigInt big_a = from128(a);
    CHECK(big_a.to_string() == to_string128(a));
    // (a*d) / d == a exactly
    CHECK((big_a * BigInt(d)).divide_exact(BigInt(d)) == big_a);
  }
  CHECK_THROWS_AS(BigInt(7).divide_exact(BigInt(2)), std::logic_error);
  CHECK_THROWS_AS(BigInt(7).divide_exact(BigInt(0)), std::logic_error);
  CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("exact_rank on pinned matrices") {
  SUBCASE("zero matrix") {
    ExactMatrix m(3, 4);
    CHECK(exact_rank(m) == 0);
  }
  SUBCASE("identity") {
    ExactMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m.add_entry(i, i, 1);
    CHECK(exact_rank(m) == 3);
  }
  SUBCASE("signed vertex-edge incidence of the hollow triangle") {
    // edges xy, yz, xz over vertices x, y, z with alternating boundary signs
    ExactMatrix m(3, 3);
    m.add_entry(0, 0, 1);
    m.add_entry(1, 0, -1);
    m.add_entry(1, 1, 1);
    m.add_entry(2, 1, -1);
    m.add_entry(0, 2, 1);
    m.add_entry(2, 2, -1);
    CHECK(exact_rank(m) == 2);
  }
}

TEST_CASE("exact_rank matches minor expansion on random matrices") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<long long>> dense(
        static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols)));
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        int v = entry(rng);
        if (v > 1) v = 1;
        if (v < -1) v = -1;
        dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        if (v != 0) m.add_entry(r, c, v);
      }
    CHECK(exact_rank(m) == rank_by_minors(dense));
  }
}

TEST_CASE("composition check sees nonzero products") {
  ExactMatrix a(1, 1), b(1, 1);
  a.add_entry(0, 0, 1);
  b.add_entry(0, 0, 1);
  CHECK_FALSE(composition_is_zero(a, b));
  ExactMatrix z(1, 1);
  CHECK(composition_is_zero(z, b));
}

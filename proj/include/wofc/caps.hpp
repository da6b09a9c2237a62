#pragma once

namespace wofc {

// Default size caps for the exhaustive searches. Exceeding a cap raises
// CapExceeded; callers may pass larger values explicitly.
inline constexpr int kMaxFacets = 20;          // 2^q facet-subset scans
inline constexpr int kMaxCoverVertices = 24;   // 2^n vertex-subset scan
inline constexpr int kMaxLyubeznikGenerators = 16;
inline constexpr int kMaxOracleGenerators = 12;
inline constexpr long kMaxOracleFaces = 1L << 16;
// Cover orderings are searched by full permutation enumeration up to this
// size and by backtracking above it.
inline constexpr int kPermutationThreshold = 8;

}  // namespace wofc

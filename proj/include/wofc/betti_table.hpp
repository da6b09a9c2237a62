#pragma once

#include <map>
#include <utility>

#include "wofc/small_set.hpp"

namespace wofc {

// Homological indexing convention: quotient tables record b_{i,m}(S/I),
// ideal tables record b_{i,m}(I); the two differ by an index shift of one.
enum class Convention { Quotient, Ideal };

class BettiTable {
 public:
  explicit BettiTable(Convention c = Convention::Quotient) : convention_(c) {}

  Convention convention() const { return convention_; }
  void add(VertexSet degree, int index, long rank);
  long rank_at(VertexSet degree, int index) const;  // 0 when absent

  using DegreeMap = std::map<int, long>;  // homological index -> rank
  const std::map<VertexSet, DegreeMap, SizeLexLess>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  long entry_count() const;

  BettiTable to_convention(Convention c) const;

  // pd / reg of S/I; the implicit rank-one entry in homological degree 0 is
  // taken into account, so both are at least 0.
  int projective_dimension() const;
  int regularity() const;

  // graded aggregation b_{i,j} (quotient convention, without the implicit
  // degree-zero entry): (i, j) -> rank sum
  std::map<std::pair<int, int>, long> graded() const;

  bool operator==(const BettiTable& other) const;

 private:
  Convention convention_;
  std::map<VertexSet, DegreeMap, SizeLexLess> entries_;
};

// Rectangular Betti diagram of S/I: cell (i, j) holds b_{i, i+j}, the Total
// row holds the column sums, and the unit in position (0, 0) is included.
struct BettiDiagram {
  int pd = 0;
  int reg = 0;
  std::vector<long> totals;                  // per column 0..pd
  std::map<std::pair<int, int>, long> cells; // (i, j) -> b_{i, i+j}, zeros absent
};

BettiDiagram make_diagram(const BettiTable& table);

}  // namespace wofc

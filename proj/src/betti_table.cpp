#include "wofc/betti_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace wofc {

void BettiTable::add(VertexSet degree, int index, long rank) {
  if (rank <= 0) throw std::logic_error("BettiTable: ranks must be positive");
  if (convention_ == Convention::Quotient && index < 1)
    throw std::logic_error("BettiTable: quotient entries start at index 1");
  if (convention_ == Convention::Ideal && index < 0)
    throw std::logic_error("BettiTable: ideal entries start at index 0");
  entries_[degree][index] += rank;
}

long BettiTable::rank_at(VertexSet degree, int index) const {
  auto it = entries_.find(degree);
  if (it == entries_.end()) return 0;
  auto jt = it->second.find(index);
  return jt == it->second.end() ? 0 : jt->second;
}

long BettiTable::entry_count() const {
  long n = 0;
  for (const auto& [deg, by_index] : entries_) {
    (void)deg;
    n += static_cast<long>(by_index.size());
  }
  return n;
}

BettiTable BettiTable::to_convention(Convention c) const {
  if (c == convention_) return *this;
  const int shift = c == Convention::Quotient ? 1 : -1;
  BettiTable out(c);
  for (const auto& [deg, by_index] : entries_)
    for (const auto& [i, r] : by_index) out.add(deg, i + shift, r);
  return out;
}

int BettiTable::projective_dimension() const {
  const BettiTable q = to_convention(Convention::Quotient);
  int pd = 0;
  for (const auto& [deg, by_index] : q.entries_) {
    (void)deg;
    for (const auto& [i, r] : by_index) {
      (void)r;
      pd = std::max(pd, i);
    }
  }
  return pd;
}

int BettiTable::regularity() const {
  const BettiTable q = to_convention(Convention::Quotient);
  int reg = 0;
  for (const auto& [deg, by_index] : q.entries_)
    for (const auto& [i, r] : by_index) {
      (void)r;
      reg = std::max(reg, deg.count() - i);
    }
  return reg;
}

std::map<std::pair<int, int>, long> BettiTable::graded() const {
  const BettiTable q = to_convention(Convention::Quotient);
  std::map<std::pair<int, int>, long> out;
  for (const auto& [deg, by_index] : q.entries_)
    for (const auto& [i, r] : by_index) out[{i, deg.count()}] += r;
  return out;
}

bool BettiTable::operator==(const BettiTable& other) const {
  return to_convention(Convention::Quotient).entries_ ==
         other.to_convention(Convention::Quotient).entries_;
}

BettiDiagram make_diagram(const BettiTable& table) {
  BettiDiagram d;
  d.cells[{0, 0}] = 1;
  for (const auto& [ij, r] : table.graded()) {
    const auto [i, j] = ij;
    d.cells[{i, j - i}] += r;
    d.pd = std::max(d.pd, i);
    d.reg = std::max(d.reg, j - i);
  }
  d.totals.assign(static_cast<std::size_t>(d.pd) + 1, 0);
  for (const auto& [ij, r] : d.cells) d.totals[static_cast<std::size_t>(ij.first)] += r;
  return d;
}

}  // namespace wofc

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wofc/betti_forest.hpp"
#include "wofc/betti_table.hpp"
#include "wofc/complex.hpp"
#include "wofc/covers.hpp"
#include "wofc/graphs.hpp"
#include "wofc/lyubeznik.hpp"

namespace wofc {

// Complex text format: UTF-8 lines, '#' starts a comment, each non-blank line
// is one facet as whitespace-separated variable tokens. Line order is the
// default generator order.
struct ParsedComplex {
  SimplicialComplex complex;
  std::vector<int> dropped_lines;  // 1-based line numbers dropped by maximality
};
ParsedComplex parse_complex_text(std::istream& in);

// Graph text format: one edge per line, two vertex tokens.
struct ParsedGraph {
  Graph graph;
  std::vector<int> dropped_lines;
};
ParsedGraph parse_graph_text(std::istream& in);

// Fixed-width diagram with a Total row and "--" for zero entries.
std::string render_betti_diagram(const BettiDiagram& d);

// One line per entry: "b_{i, monomial} = rank", sorted by index then degree.
std::string render_table_entries(const SimplicialComplex& c, const BettiTable& table);

// JSON serializers (deterministic member order).
std::string betti_table_json(const SimplicialComplex& c, const BettiTable& table);
std::string wofc_certificate_json(const SimplicialComplex& c, const std::vector<int>& order,
                                  const WellOrderedCertificate& cert);
std::string wofc_results_json(const SimplicialComplex& c, const std::vector<WofcResult>& results);
std::string lyubeznik_json(const LyubeznikComplex& lambda,
                           const std::vector<BarileWitness>& witnesses);
std::string bouquets_json(const Graph& g, const BouquetSet& bouquets);

}  // namespace wofc

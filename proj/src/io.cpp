#include "wofc/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace wofc {

namespace {

// (line number, tokens) for each non-blank line after comment stripping
std::vector<std::pair<int, std::vector<std::string>>> read_token_lines(std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
  }
  return out;
}

}  // namespace

ParsedComplex parse_complex_text(std::istream& in) {
  const auto lines = read_token_lines(in);
  if (lines.empty()) throw InputError("no facets found in input");
  std::vector<std::vector<std::string>> raw;
  raw.reserve(lines.size());
  for (const auto& [line_no, tokens] : lines) {
    for (std::size_t i = 0; i < tokens.size(); ++i)
      for (std::size_t j = i + 1; j < tokens.size(); ++j)
        if (tokens[i] == tokens[j])
          throw InputError("line " + std::to_string(line_no) + ": repeated variable '" +
                           tokens[i] + "'");
    raw.push_back(tokens);
  }
  NormalizeResult result = normalize_complex(raw);
  ParsedComplex out;
  out.complex = std::move(result.complex);
  for (int idx : result.dropped_inputs)
    out.dropped_lines.push_back(lines[static_cast<std::size_t>(idx)].first);
  return out;
}

ParsedGraph parse_graph_text(std::istream& in) {
  const auto lines = read_token_lines(in);
  if (lines.empty()) throw InputError("no edges found in input");
  std::vector<std::pair<std::string, std::string>> raw;
  for (const auto& [line_no, tokens] : lines) {
    if (tokens.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected two vertex tokens");
    if (tokens[0] == tokens[1])
      throw InputError("line " + std::to_string(line_no) + ": loop on '" + tokens[0] + "'");
    raw.emplace_back(tokens[0], tokens[1]);
  }
  GraphNormalizeResult result = normalize_graph(raw);
  ParsedGraph out;
  out.graph = std::move(result.graph);
  for (int idx : result.dropped_inputs)
    out.dropped_lines.push_back(lines[static_cast<std::size_t>(idx)].first);
  return out;
}

std::string render_betti_diagram(const BettiDiagram& d) {
  auto cell_text = [&](int i, int j) -> std::string {
    auto it = d.cells.find({i, j});
    return it == d.cells.end() ? "--" : std::to_string(it->second);
  };
  std::size_t label_w = std::max<std::size_t>(5, std::to_string(d.reg).size());
  std::size_t cell_w = 2;
  for (int i = 0; i <= d.pd; ++i) {
    cell_w = std::max(cell_w, std::to_string(i).size());
    cell_w = std::max(cell_w, std::to_string(d.totals[static_cast<std::size_t>(i)]).size());
    for (int j = 0; j <= d.reg; ++j) cell_w = std::max(cell_w, cell_text(i, j).size());
  }
  auto rjust = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::string sep(label_w + 1, '-');
  sep += '+';
  sep += std::string(static_cast<std::size_t>(d.pd + 1) * (cell_w + 1), '-');

  std::ostringstream os;
  os << std::string(label_w, ' ') << " |";
  for (int i = 0; i <= d.pd; ++i) os << ' ' << rjust(std::to_string(i), cell_w);
  os << '\n' << sep << '\n';
  os << rjust("Total", label_w) << " |";
  for (int i = 0; i <= d.pd; ++i)
    os << ' ' << rjust(std::to_string(d.totals[static_cast<std::size_t>(i)]), cell_w);
  os << '\n' << sep << '\n';
  for (int j = 0; j <= d.reg; ++j) {
    os << rjust(std::to_string(j), label_w) << " |";
    for (int i = 0; i <= d.pd; ++i) os << ' ' << rjust(cell_text(i, j), cell_w);
    os << '\n';
  }
  return os.str();
}

std::string render_table_entries(const SimplicialComplex& c, const BettiTable& table) {
  std::vector<std::pair<int, VertexSet>> keys;
  for (const auto& [deg, by_index] : table.entries())
    for (const auto& [i, r] : by_index) {
      (void)r;
      keys.emplace_back(i, deg);
    }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return size_lex_less(a.second, b.second);
  });
  std::ostringstream os;
  for (const auto& [i, deg] : keys)
    os << "b_{" << i << ", " << c.monomial(deg) << "} = " << table.rank_at(deg, i) << '\n';
  return os.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json degree_json(const SimplicialComplex& c, VertexSet deg) {
  ordered_json out = ordered_json::array();
  for (const std::string& n : c.name_list(deg)) out.push_back(n);
  return out;
}

}  // namespace

std::string betti_table_json(const SimplicialComplex& c, const BettiTable& table) {
  ordered_json out;
  out["convention"] = table.convention() == Convention::Quotient ? "quotient" : "ideal";
  ordered_json entries = ordered_json::array();
  for (const auto& [deg, by_index] : table.entries())
    for (const auto& [i, r] : by_index) {
      ordered_json e;
      e["degree"] = degree_json(c, deg);
      e["i"] = i;
      e["rank"] = r;
      entries.push_back(std::move(e));
    }
  out["entries"] = std::move(entries);
  return out.dump();
}

std::string wofc_certificate_json(const SimplicialComplex& c, const std::vector<int>& order,
                                  const WellOrderedCertificate& cert) {
  (void)c;
  ordered_json out;
  std::vector<int> cover = order;
  std::sort(cover.begin(), cover.end());
  ordered_json cover_json = ordered_json::array();
  for (int i : cover) cover_json.push_back(i + 1);
  out["cover"] = std::move(cover_json);
  ordered_json order_json = ordered_json::array();
  for (int i : order) order_json.push_back(i + 1);
  out["order"] = std::move(order_json);
  ordered_json witnesses = ordered_json::object();
  for (const auto& [h, i] : cert.witnesses) witnesses[std::to_string(h + 1)] = i;
  out["witnesses"] = std::move(witnesses);
  return out.dump();
}

std::string wofc_results_json(const SimplicialComplex& c, const std::vector<WofcResult>& results) {
  ordered_json out = ordered_json::array();
  for (const auto& r : results) {
    const auto cert = is_well_ordered(c, r.order);
    out.push_back(ordered_json::parse(wofc_certificate_json(c, r.order, cert)));
  }
  return out.dump();
}

std::string lyubeznik_json(const LyubeznikComplex& lambda,
                           const std::vector<BarileWitness>& witnesses) {
  ordered_json out;
  ordered_json order = ordered_json::array();
  for (int g : lambda.order().ranked) order.push_back(g + 1);
  out["order"] = std::move(order);
  auto faces_json = [](const std::vector<GenSet>& faces) {
    ordered_json arr = ordered_json::array();
    for (GenSet f : faces) {
      ordered_json one = ordered_json::array();
      for (int g : f) one.push_back(g + 1);
      arr.push_back(std::move(one));
    }
    return arr;
  };
  out["faces"] = faces_json(lambda.faces());
  out["facets"] = faces_json(lambda.facets());
  ordered_json ws = ordered_json::array();
  for (const auto& w : witnesses) {
    ordered_json one;
    ordered_json face = ordered_json::array();
    for (int g : w.face) face.push_back(g + 1);
    one["face"] = std::move(face);
    one["degree"] = degree_json(lambda.ideal(), w.degree);
    one["i"] = w.index;
    ws.push_back(std::move(one));
  }
  out["witnesses"] = std::move(ws);
  return out.dump();
}

std::string bouquets_json(const Graph& g, const BouquetSet& bouquets) {
  ordered_json out;
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < bouquets.bouquets.size(); ++i) {
    const Bouquet& b = bouquets.bouquets[i];
    ordered_json one;
    one["root"] = g.name(b.root);
    ordered_json leaves = ordered_json::array();
    for (int v : b.leaves) leaves.push_back(g.name(v));
    one["leaves"] = std::move(leaves);
    ordered_json edges = ordered_json::array();
    for (int e : b.edges) edges.push_back(e + 1);
    one["edges"] = std::move(edges);
    if (i < bouquets.designated.size()) one["designated"] = bouquets.designated[i] + 1;
    arr.push_back(std::move(one));
  }
  out["bouquets"] = std::move(arr);
  return out.dump();
}

}  // namespace wofc

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wofc/wofc.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string format = "text";
  std::string convention = "quotient";
  std::string order;       // comma-separated 1-based generator positions
  int facet = 0;           // 1-based, for localize
  bool vertex_covers = false;
  long random_count = 0;
  unsigned long long seed = 12345;
  int max_facets = wofc::kMaxFacets;
  int max_vertices = wofc::kMaxCoverVertices;
  int max_generators = -1;  // verb-dependent default when unset
  long max_faces = wofc::kMaxOracleFaces;
  int perm_threshold = wofc::kPermutationThreshold;

  int oracle_generator_cap() const {
    return max_generators < 0 ? wofc::kMaxOracleGenerators : max_generators;
  }
  int rooted_generator_cap() const {
    return max_generators < 0 ? wofc::kMaxLyubeznikGenerators : max_generators;
  }
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

wofc::ParsedComplex load_complex(const Options& opt) {
  wofc::ParsedComplex parsed;
  if (opt.input == "-") {
    parsed = wofc::parse_complex_text(std::cin);
  } else {
    std::ifstream f(opt.input);
    if (!f) throw wofc::InputError("cannot open input file: " + opt.input);
    parsed = wofc::parse_complex_text(f);
  }
  for (int line : parsed.dropped_lines)
    std::cerr << "warning: line " << line << " dropped (duplicate or not maximal)\n";
  return parsed;
}

wofc::ParsedGraph load_graph(const Options& opt) {
  wofc::ParsedGraph parsed;
  if (opt.input == "-") {
    parsed = wofc::parse_graph_text(std::cin);
  } else {
    std::ifstream f(opt.input);
    if (!f) throw wofc::InputError("cannot open input file: " + opt.input);
    parsed = wofc::parse_graph_text(f);
  }
  for (int line : parsed.dropped_lines)
    std::cerr << "warning: line " << line << " dropped (duplicate edge)\n";
  return parsed;
}

std::string facet_labels(const std::vector<int>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ' ';
    out += 'F' + std::to_string(indices[i] + 1);
  }
  return out;
}

wofc::Convention parse_convention(const Options& opt) {
  if (opt.convention == "quotient") return wofc::Convention::Quotient;
  if (opt.convention == "ideal") return wofc::Convention::Ideal;
  throw wofc::InputError("unknown convention: " + opt.convention);
}

void print_table_report(const wofc::SimplicialComplex& c, const wofc::BettiTable& quotient_table,
                        const Options& opt) {
  const wofc::BettiTable shown = quotient_table.to_convention(parse_convention(opt));
  const wofc::BettiDiagram diagram = wofc::make_diagram(quotient_table);
  if (json_mode(opt)) {
    std::cout << wofc::betti_table_json(c, shown) << '\n';
    return;
  }
  std::cout << "multigraded Betti numbers ("
            << (shown.convention() == wofc::Convention::Quotient ? "S/I" : "I")
            << " convention):\n";
  std::cout << wofc::render_table_entries(c, shown);
  std::cout << "Betti diagram:\n" << wofc::render_betti_diagram(diagram);
  std::cout << "pd = " << diagram.pd << "\n" << "reg = " << diagram.reg << "\n";
}

int run_betti(const Options& opt) {
  const auto parsed = load_complex(opt);
  const auto table = wofc::multigraded_betti(parsed.complex, opt.max_facets, opt.perm_threshold);
  print_table_report(parsed.complex, table, opt);
  return 0;
}

int run_oracle(const Options& opt) {
  const auto parsed = load_complex(opt);
  const auto table = wofc::betti_oracle(parsed.complex, opt.oracle_generator_cap(), opt.max_faces);
  print_table_report(parsed.complex, table, opt);
  return 0;
}

// Forests: exact table equality against the homology oracle. Other ideals:
// every cover certificate must be confirmed by the oracle; oracle entries
// without certificates are reported but are not a failure.
int compare_one(const wofc::SimplicialComplex& c, const Options& opt, bool quiet) {
  const bool json = !quiet && json_mode(opt);
  const auto oracle = wofc::betti_oracle(c, opt.oracle_generator_cap(), opt.max_faces);
  if (wofc::is_forest(c, opt.max_facets).forest) {
    const auto table = wofc::multigraded_betti(c, opt.max_facets, opt.perm_threshold);
    const bool match = table == oracle;
    if (json) {
      ordered_json out;
      out["mode"] = "forest";
      out["match"] = match;
      out["multidegrees"] = table.entries().size();
      std::cout << out.dump() << '\n';
      return match ? 0 : 3;
    }
    if (match) {
      if (!quiet)
        std::cout << "MATCH (" << table.entries().size() << " multidegrees)\n";
      return 0;
    }
    std::cout << "MISMATCH\n";
    std::cout << "cover characterization:\n" << wofc::render_table_entries(c, table);
    std::cout << "homology oracle:\n" << wofc::render_table_entries(c, oracle);
    return 3;
  }

  int exit_code = 0;
  long confirmed = 0, violations = 0, oracle_only = 0;
  std::map<std::pair<std::uint64_t, int>, bool> certified;
  for (wofc::VertexSet a : wofc::lcm_lattice(c)) {
    const auto induced = wofc::induced_subcollection(c, a);
    for (const auto& result :
         wofc::find_well_ordered_covers(induced.complex, opt.max_facets, opt.perm_threshold)) {
      certified[{a.bits(), result.cardinality}] = true;
      const long rank = oracle.rank_at(a, result.cardinality);
      if (rank >= 1) {
        ++confirmed;
        if (!quiet && !json)
          std::cout << "certificate b_{" << result.cardinality << ", " << c.monomial(a)
                    << "} confirmed (oracle rank " << rank << ")\n";
      } else {
        ++violations;
        if (!json)
          std::cout << "VIOLATION: certificate b_{" << result.cardinality << ", "
                    << c.monomial(a) << "} not confirmed by the oracle\n";
        exit_code = 3;
      }
    }
  }
  bool any = false;
  for (const auto& [deg, by_index] : oracle.entries())
    for (const auto& [i, r] : by_index) {
      if (certified.count({deg.bits(), i})) continue;
      ++oracle_only;
      if (!quiet && !json) {
        if (!any) {
          std::cout << "oracle-only entries (expected for non-forests):\n";
          any = true;
        }
        std::cout << "  b_{" << i << ", " << c.monomial(deg) << "} = " << r << "\n";
      }
    }
  if (json) {
    ordered_json out;
    out["mode"] = "certificates";
    out["confirmed"] = confirmed;
    out["violations"] = violations;
    out["oracle_only"] = oracle_only;
    std::cout << out.dump() << '\n';
  }
  return exit_code;
}

int run_compare(const Options& opt) {
  if (opt.random_count > 0) {
    std::mt19937_64 rng(opt.seed);
    for (long i = 0; i < opt.random_count; ++i) {
      const auto c = wofc::random_complex(rng, 5, 8);
      const int code = compare_one(c, opt, /*quiet=*/true);
      if (code != 0) {
        std::cout << "instance " << i << " (seed " << opt.seed << ") failed; facets:\n";
        for (int f = 0; f < c.facet_count(); ++f)
          std::cout << "  " << c.monomial(c.facet(f)) << "\n";
        return code;
      }
    }
    std::cout << "OK (" << opt.random_count << " random instances, seed " << opt.seed << ")\n";
    return 0;
  }
  const auto parsed = load_complex(opt);
  return compare_one(parsed.complex, opt, /*quiet=*/false);
}

int run_is_forest(const Options& opt) {
  const auto parsed = load_complex(opt);
  const auto check = wofc::is_forest(parsed.complex, opt.max_facets);
  if (json_mode(opt)) {
    ordered_json out;
    out["forest"] = check.forest;
    if (!check.forest) {
      ordered_json cex = ordered_json::array();
      for (int i : check.counterexample) cex.push_back(i + 1);
      out["counterexample"] = std::move(cex);
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  if (check.forest) {
    std::cout << "forest: yes\n";
  } else {
    std::cout << "forest: no\n";
    std::cout << "leafless subcollection: " << facet_labels(check.counterexample.indices())
              << "\n";
  }
  return 0;
}

int run_covers(const Options& opt) {
  const auto parsed = load_complex(opt);
  if (opt.vertex_covers) {
    const auto covers = wofc::minimal_vertex_covers(parsed.complex, opt.max_vertices);
    if (json_mode(opt)) {
      ordered_json out = ordered_json::array();
      for (const auto& cover : covers) {
        ordered_json one = ordered_json::array();
        for (int v : cover) one.push_back(parsed.complex.name(v));
        out.push_back(std::move(one));
      }
      std::cout << out.dump() << '\n';
      return 0;
    }
    for (const auto& cover : covers) {
      bool first = true;
      for (int v : cover) {
        if (!first) std::cout << ' ';
        std::cout << parsed.complex.name(v);
        first = false;
      }
      std::cout << '\n';
    }
    return 0;
  }
  const auto covers = wofc::minimal_facet_covers(parsed.complex, opt.max_facets);
  if (json_mode(opt)) {
    ordered_json out = ordered_json::array();
    for (const auto& cover : covers) {
      ordered_json one = ordered_json::array();
      for (int f : cover) one.push_back(f + 1);
      out.push_back(std::move(one));
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  for (const auto& cover : covers) std::cout << facet_labels(cover.indices()) << '\n';
  return 0;
}

int run_wofc(const Options& opt) {
  const auto parsed = load_complex(opt);
  const auto results =
      wofc::find_well_ordered_covers(parsed.complex, opt.max_facets, opt.perm_threshold);
  if (json_mode(opt)) {
    std::cout << wofc::wofc_results_json(parsed.complex, results) << '\n';
    return 0;
  }
  if (results.empty()) {
    std::cout << "no well ordered facet cover\n";
    return 0;
  }
  for (const auto& r : results) {
    std::cout << "cardinality " << r.cardinality << ": " << facet_labels(r.order);
    const auto cert = wofc::is_well_ordered(parsed.complex, r.order);
    if (!cert.witnesses.empty()) {
      std::cout << "  (witnesses:";
      for (const auto& [h, i] : cert.witnesses)
        std::cout << " F" << h + 1 << "<-" << i;
      std::cout << ")";
    }
    std::cout << '\n';
  }
  return 0;
}

std::vector<int> parse_order_option(const std::string& text, int count) {
  std::vector<int> ranked;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      ranked.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw wofc::InputError("bad --order entry: " + item);
    }
  }
  if (static_cast<int>(ranked.size()) != count)
    throw wofc::InputError("--order must list every generator exactly once");
  return ranked;
}

int run_lyubeznik(const Options& opt) {
  const auto parsed = load_complex(opt);
  wofc::GeneratorOrder order =
      opt.order.empty()
          ? wofc::GeneratorOrder::identity(parsed.complex.facet_count())
          : wofc::GeneratorOrder::from_ranked(
                parse_order_option(opt.order, parsed.complex.facet_count()));
  const auto lambda = wofc::lyubeznik_complex(parsed.complex, order, opt.rooted_generator_cap());
  const auto witnesses = wofc::barile_witnesses(lambda);
  if (json_mode(opt)) {
    std::cout << wofc::lyubeznik_json(lambda, witnesses) << '\n';
    return 0;
  }
  std::cout << "faces (" << lambda.faces().size() << "):\n";
  for (wofc::GenSet f : lambda.faces())
    std::cout << "  " << facet_labels(f.indices()) << "  lcm "
              << parsed.complex.monomial(lambda.lcm(f)) << '\n';
  std::cout << "facets:\n";
  for (wofc::GenSet f : lambda.facets()) std::cout << "  " << facet_labels(f.indices()) << '\n';
  std::cout << "nonvanishing certificates:\n";
  for (const auto& w : witnesses)
    std::cout << "  b_{" << w.index << ", " << parsed.complex.monomial(w.degree)
              << "} != 0  (face " << facet_labels(w.face.indices()) << ")\n";
  return 0;
}

int run_localize(const Options& opt) {
  const auto parsed = load_complex(opt);
  if (opt.facet < 1 || opt.facet > parsed.complex.facet_count())
    throw wofc::InputError("--facet must name a facet (1-based)");
  const auto loc = wofc::localize(parsed.complex, opt.facet - 1);
  if (json_mode(opt)) {
    ordered_json out;
    out["result"] = loc.unit_ideal ? "unit_ideal" : "complex";
    if (!loc.unit_ideal) {
      ordered_json facets = ordered_json::array();
      for (int i = 0; i < loc.complex.facet_count(); ++i) {
        ordered_json one = ordered_json::array();
        for (int v : loc.complex.facet(i)) one.push_back(loc.complex.name(v));
        facets.push_back(std::move(one));
      }
      out["facets"] = std::move(facets);
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  if (loc.unit_ideal) {
    std::cout << "unit ideal\n";
    return 0;
  }
  for (int i = 0; i < loc.complex.facet_count(); ++i)
    std::cout << loc.complex.monomial(loc.complex.facet(i)) << '\n';
  return 0;
}

int run_bounds(const Options& opt) {
  const auto parsed = load_complex(opt);
  const auto bounds =
      wofc::regularity_lower_bounds(parsed.complex, opt.max_facets, opt.perm_threshold);
  if (json_mode(opt)) {
    ordered_json out;
    out["wofc_bound"] = bounds.wofc_bound;
    out["induced_matching_bound"] = bounds.matching_bound;
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "cover bound: " << bounds.wofc_bound << "  (degree "
            << parsed.complex.monomial(bounds.wofc_degree) << ", sequence "
            << facet_labels(bounds.wofc_order) << ")\n";
  std::cout << "induced matching bound: " << bounds.matching_bound << "  (matching "
            << facet_labels(bounds.matching.indices()) << ")\n";
  return 0;
}

int run_graph_bouquets(const Options& opt) {
  const auto parsed = load_graph(opt);
  const wofc::Graph& g = parsed.graph;
  const auto complex = g.as_complex();
  const auto covers = wofc::minimal_facet_covers(complex, opt.max_facets);
  bool any = false;
  for (wofc::GenSet cover : covers) {
    const auto order = wofc::lex_least_well_ordering(complex, cover, opt.perm_threshold);
    std::cout << "cover {";
    bool first = true;
    for (int e : cover) {
      if (!first) std::cout << ", ";
      std::cout << g.name(g.edge(e).u) << g.name(g.edge(e).v);
      first = false;
    }
    std::cout << "}: ";
    if (!order) {
      std::cout << "no well ordered edge cover\n";
      continue;
    }
    any = true;
    const auto bouquets = wofc::bouquets_from_wofc(g, *order);
    std::cout << "well ordered; strongly disjoint bouquets: "
              << wofc::bouquets_json(g, bouquets) << '\n';
  }
  if (!any) std::cout << "graph admits no well ordered edge cover\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of squarefree monomial ideals via facet covers"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "input file ('-' for stdin)")->required();
    sub->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-facets", opt.max_facets, "facet cap for exhaustive scans")
        ->envname("WOFC_MAX_FACETS");
    sub->add_option("--max-vertices", opt.max_vertices, "vertex cap for vertex cover scans")
        ->envname("WOFC_MAX_VERTICES");
    sub->add_option("--max-generators", opt.max_generators, "generator cap (oracle default 12, rooted complexes 16)")
        ->envname("WOFC_MAX_GENERATORS");
    sub->add_option("--max-faces", opt.max_faces, "face cap for homology computations")
        ->envname("WOFC_MAX_FACES");
    sub->add_option("--perm-threshold", opt.perm_threshold,
                    "cover size up to which orderings are enumerated exhaustively")
        ->envname("WOFC_PERM_THRESHOLD");
  };

  auto* betti = app.add_subcommand("betti", "Betti table of a forest via facet covers");
  add_common(betti);
  betti->add_option("--convention", opt.convention, "quotient|ideal")
      ->check(CLI::IsMember({"quotient", "ideal"}));

  auto* oracle = app.add_subcommand("oracle", "Betti table from exact simplicial homology");
  add_common(oracle);
  oracle->add_option("--convention", opt.convention, "quotient|ideal")
      ->check(CLI::IsMember({"quotient", "ideal"}));

  auto* compare = app.add_subcommand("compare", "cross-validate covers against the oracle");
  compare->add_option("input", opt.input, "input file ('-' for stdin)");
  add_common(compare, /*with_input=*/false);
  compare->add_option("--random", opt.random_count, "check N random instances instead");
  compare->add_option("--seed", opt.seed, "seed for --random");

  auto* isforest = app.add_subcommand("is-forest", "test the forest property");
  add_common(isforest);

  auto* covers = app.add_subcommand("covers", "minimal facet covers");
  add_common(covers);
  covers->add_flag("--vertex", opt.vertex_covers, "list minimal vertex covers instead");

  auto* wofc_cmd = app.add_subcommand("wofc", "well ordered facet covers");
  add_common(wofc_cmd);

  auto* lyub = app.add_subcommand("lyubeznik", "rooted faces under a generator order");
  add_common(lyub);
  lyub->add_option("--order", opt.order, "comma-separated 1-based generator order");

  auto* localize = app.add_subcommand("localize", "localize away a facet");
  add_common(localize);
  localize->add_option("--facet", opt.facet, "facet to localize at (1-based)")->required();

  auto* bounds = app.add_subcommand("bounds", "regularity lower bounds");
  add_common(bounds);

  auto* gb = app.add_subcommand("graph-bouquets", "bouquet decompositions of edge covers");
  add_common(gb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (betti->parsed()) return run_betti(opt);
    if (oracle->parsed()) return run_oracle(opt);
    if (compare->parsed()) {
      if (opt.random_count == 0 && opt.input.empty())
        throw wofc::InputError("compare: provide an input file or --random N");
      return run_compare(opt);
    }
    if (isforest->parsed()) return run_is_forest(opt);
    if (covers->parsed()) return run_covers(opt);
    if (wofc_cmd->parsed()) return run_wofc(opt);
    if (lyub->parsed()) return run_lyubeznik(opt);
    if (localize->parsed()) return run_localize(opt);
    if (bounds->parsed()) return run_bounds(opt);
    if (gb->parsed()) return run_graph_bouquets(opt);
  } catch (const wofc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wofc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

// kaleido: construct, verify, search and export kaleidoscopic edge-colorings.
//
// Exit codes: 0 success, 1 negative-but-correct result (invalid coloring,
// certified nonexistence), 2 usage or input error, 3 internal invariant
// breach, 4 search budget exceeded.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kaleido/complete.hpp"
#include "kaleido/document.hpp"
#include "kaleido/regular3.hpp"
#include "kaleido/search.hpp"

namespace {

using namespace kaleido;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3, kBudget = 4 };

void print_report(std::ostream& os, const VerificationReport& report) {
  os << "valid: " << (report.valid ? "yes" : "no") << "\n";
  os << "regular degree: "
     << (report.regular_degree ? std::to_string(*report.regular_degree) : "none") << "\n";
  for (const auto& f : report.coverage_failures) {
    os << "coverage failure: vertex " << f.vertex << " misses color " << f.missing << "\n";
  }
  for (auto [u, v] : report.duplicate_pairs) {
    os << "duplicate multiset-color: vertices " << u << " and " << v << "\n";
  }
  for (const auto& s : report.structural_errors) os << "structural error: " << s << "\n";
}

void print_table(std::ostream& os, const ColoredGraph& g) {
  const auto tuples = multiset_colors(g);
  for (int v = 1; v <= g.order(); ++v) {
    os << v << ": (";
    for (int c = 0; c < g.palette(); ++c) os << (c ? "," : "") << tuples[v - 1].counts[c];
    os << ")\n";
  }
}

/// Verifies a freshly constructed graph and writes it; exit 3 on failure.
int finish_construction(const ColoredGraph& g, const ColoringDocument& doc,
                        const std::string& out_path) {
  const auto report = verify_kaleidoscope(g);
  if (!report.valid) {
    std::cerr << "internal error: construction failed verification\n";
    print_report(std::cerr, report);
    return kInternal;
  }
  std::cout << "vertices: " << g.order() << ", edges: " << g.size() << ", colors: " << g.palette()
            << "\n";
  print_report(std::cout, report);
  if (!out_path.empty()) {
    write_text_atomic(out_path, serialize(doc));
    std::cout << "wrote " << out_path << "\n";
  }
  return kOk;
}

int cmd_construct_complete(int n, int k, const std::string& out) {
  try {
    classify(n, k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto result = construct_complete(n, k);
  std::cout << "case: " << result.trace.summary_line() << "\n";
  return finish_construction(result.graph,
                             make_document(result.graph, result.trace.labels, result.trace), out);
}

int cmd_construct_regular3(int r, const std::string& out) {
  try {
    check_regular3_degree(r);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto g = construct_regular3(r);
  const auto coords = regular3_vertices(r);
  const auto tuples = multiset_colors(g);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& t = tuples[i].counts;
    if (t[0] != coords[i].s1 || t[1] != coords[i].s2 || t[2] != coords[i].s3) {
      std::cerr << "internal error: vertex " << i + 1 << " does not match its coordinate\n";
      return kInternal;
    }
  }
  return finish_construction(g, make_document(g, regular3_labels(r)), out);
}

int cmd_verify(const std::string& in) {
  std::optional<ColoredGraph> g;
  try {
    g = to_graph(read_document(in));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  print_table(std::cout, *g);
  const auto report = verify_kaleidoscope(*g);
  print_report(std::cout, report);
  return report.valid ? kOk : kNegative;
}

int cmd_export(const std::string& in, const std::string& format, const std::string& out) {
  if (format != "dot" && format != "csv") {
    std::cerr << "error: unknown format '" << format << "' (expected dot or csv)\n";
    return kUsage;
  }
  ColoringDocument doc;
  std::optional<ColoredGraph> g;
  try {
    doc = read_document(in);
    g = to_graph(doc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string text = format == "csv" ? export_csv(*g) : export_dot(*g, doc.labels);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_atomic(out, text);
  }
  return kOk;
}

int cmd_search(int n, int k, const SearchBudget& budget, bool exhaustive, const std::string& out) {
  if (n < 2 || k < 1) {
    std::cerr << "error: need n >= 2 and k >= 1\n";
    return kUsage;
  }
  const auto outcome = search_kaleidoscope(PlainGraph::complete(n), k, budget,
                                           exhaustive ? SearchMode::Exhaustive
                                                      : SearchMode::Pruned);
  std::cout << "status: " << to_string(outcome.status) << "\n";
  std::cout << "nodes explored: " << outcome.nodes_explored << "\n";
  if (exhaustive) std::cout << "colorings checked: " << outcome.assignments_checked << "\n";
  switch (outcome.status) {
    case SearchStatus::Found:
      print_table(std::cout, *outcome.witness);
      if (!out.empty()) {
        write_text_atomic(out, serialize(make_document(*outcome.witness)));
        std::cout << "wrote " << out << "\n";
      }
      return kOk;
    case SearchStatus::ExhaustedNoSolution: return kNegative;
    case SearchStatus::BudgetExceeded: return kBudget;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify, search and export kaleidoscopic edge-colorings"};
  app.require_subcommand(1);

  int n = 0, k = 0, r = 0;
  std::string out, in, format;

  auto* complete = app.add_subcommand("construct-complete", "k-kaleidoscopic coloring of K_n");
  complete->add_option("--n", n, "order of the complete graph")->required();
  complete->add_option("--k", k, "number of colors")->required();
  complete->add_option("--out", out, "write the coloring document here");

  auto* regular = app.add_subcommand("construct-regular3",
                                     "r-regular 3-kaleidoscope of order binom(r-1,2)-1");
  regular->add_option("--r", r, "degree, r ≡ 3 (mod 4), r >= 7")->required();
  regular->add_option("--out", out, "write the coloring document here");

  auto* verify = app.add_subcommand("verify", "check a coloring document");
  verify->add_option("input", in, "coloring document")->required();

  auto* exporter = app.add_subcommand("export", "export a coloring document");
  exporter->add_option("input", in, "coloring document")->required();
  exporter->add_option("--format", format, "dot or csv")->required();
  exporter->add_option("--out", out, "output file (default: standard output)");

  SearchBudget budget;
  double time_limit_s = std::chrono::duration<double>(budget.time_limit).count();
  bool exhaustive = false;
  auto* search = app.add_subcommand("search", "search for a k-kaleidoscopic coloring of K_n");
  search->add_option("--n", n, "order of the complete graph")->required();
  search->add_option("--k", k, "number of colors")->required();
  search->add_option("--seed", budget.seed, "determinism seed (0 = canonical order)");
  search->add_option("--nodes", budget.node_limit, "search node limit");
  search->add_option("--time-limit", time_limit_s, "wall-clock limit in seconds");
  search->add_flag("--exhaustive", exhaustive, "enumerate all k^|E| colorings");
  search->add_option("--out", out, "write the witness document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*complete) return cmd_construct_complete(n, k, out);
    if (*regular) return cmd_construct_regular3(r, out);
    if (*verify) return cmd_verify(in);
    if (*exporter) return cmd_export(in, format, out);
    if (*search) {
      budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_s * 1000));
      return cmd_search(n, k, budget, exhaustive, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? kUsage : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

// Command-line front end: formula verification campaigns, formula tables,
// Pell-graph export and per-edge classification dumps. Data goes to stdout
// in a deterministic order; progress and timing go to stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pell/verify.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

nlohmann::ordered_json json_integer(const std::string& decimal) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(decimal, &pos);
    if (pos == decimal.size()) return v;
  } catch (const std::exception&) {
  }
  return decimal;  // beyond 64 bits; keep exact as a string
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_verify(const pell::verify::Options& options) {
  const auto report = pell::verify::run(options);
  for (const auto& e : report.entries) {
    nlohmann::ordered_json j;
    j["check"] = e.check;
    if (e.n >= 0) j["n"] = e.n;
    if (e.i >= 0) j["i"] = e.i;
    j["expected"] = json_integer(e.expected);
    j["actual"] = json_integer(e.actual);
    j["pass"] = e.pass;
    if (!e.note.empty()) j["note"] = e.note;
    std::cout << j.dump() << "\n";
  }
  for (const auto& [check, seconds] : report.check_seconds)
    std::cerr << check << ": " << seconds << " s\n";
  std::cerr << report.entries.size() << " entries, " << report.passed()
            << " passed, " << report.failed() << " failed\n";
  return report.all_pass() ? 0 : 1;
}

int run_table(const std::string& stat, int max_n, const std::string& format) {
  const bool csv = format == "csv";
  auto emit = [&](int n, int i, pell::int128 value) {
    if (csv) {
      std::cout << n;
      if (i >= 0) std::cout << "," << i;
      std::cout << "," << pell::to_string(value) << "\n";
    } else {
      std::cout << "{\"n\":" << n;
      if (i >= 0) std::cout << ",\"i\":" << i;
      std::cout << ",\"value\":" << pell::to_string(value) << "}\n";
    }
  };
  if (stat == "e") {
    if (csv) std::cout << "n,i,value\n";
    for (int n = 1; n <= max_n; ++n) {
      const auto row = pell::imbalance_class_recurrence_row(n);
      for (int i = 0; i <= 4; ++i) emit(n, i, row[static_cast<std::size_t>(i)]);
    }
    return 0;
  }
  if (csv) std::cout << "n,value\n";
  if (stat == "irr") {
    for (int n = 1; n <= max_n; ++n) emit(n, -1, pell::pell_irregularity_closed(n));
  } else if (stat == "sigma") {
    for (int n = 2; n <= max_n; ++n) emit(n, -1, pell::pell_sigma_closed(n));
  } else {  // edges
    for (int n = 1; n <= max_n; ++n)
      emit(n, -1, pell::exact_div(pell::int128{n} * pell::pell_number(n), 2));
  }
  return 0;
}

int run_graph(int n, const std::string& emit, bool use_indices, int build_limit) {
  const pell::Graph g = pell::build_pell_graph(n, build_limit);
  auto name = [&](int v) {
    return use_indices ? std::to_string(v) : g.label(v);
  };
  if (emit == "edges") {
    g.for_each_edge([&](int u, int v) {
      std::cout << name(u) << " " << name(v) << "\n";
    });
  } else {
    for (int u = 0; u < g.vertex_count(); ++u) {
      std::cout << name(u) << ":";
      for (int v : g.neighbors(u)) std::cout << " " << name(v);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_classify(int n, int build_limit) {
  const pell::Graph g = pell::build_pell_graph(n, build_limit);
  std::int64_t violations = 0;
  g.for_each_edge([&](int u, int v) {
    const pell::EdgeClass ec = pell::classify_pell_edge(g.label(u), g.label(v));
    const int measured = pell::imbalance(g, u, v);
    std::cout << g.label(u) << " " << g.label(v) << " "
              << (ec.kind == pell::EdgeKind::flip ? "flip" : "swap") << " "
              << ec.predicted_imbalance << " " << measured << "\n";
    if (ec.predicted_imbalance != measured) {
      std::cerr << "classification mismatch on " << g.label(u) << "-" << g.label(v)
                << ": predicted " << ec.predicted_imbalance << ", measured "
                << measured << "\n";
      ++violations;
    }
  });
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell graphs, partial cubes and irregularity measures"};
  app.require_subcommand(1);

  int build_limit = pell::kDefaultPellBuildLimit;

  auto* verify = app.add_subcommand("verify", "run enumeration-vs-formula checks");
  pell::verify::Options vo;
  vo.threads = default_threads();
  std::string checks_csv;
  verify->add_option("--max-n", vo.max_n, "largest graph order to check")
      ->default_val(10);
  verify->add_option("--checks", checks_csv, "comma-separated check names");
  verify->add_option("--threads", vo.threads, "worker threads for edge folds")
      ->envname("PELLGRAPH_THREADS");
  verify->add_option("--seed", vo.seed, "seed for sampled expansion specs")
      ->default_val(1);
  verify->add_option("--build-limit", build_limit, "graph construction ceiling")
      ->envname("PELLGRAPH_BUILD_LIMIT");

  auto* table = app.add_subcommand("table", "emit formula tables");
  std::string stat, format = "csv";
  int table_max_n = 10;
  table->add_option("--stat", stat, "one of: e, irr, sigma, edges")
      ->required()
      ->check(CLI::IsMember({"e", "irr", "sigma", "edges"}));
  table->add_option("--max-n", table_max_n, "largest order (pure arithmetic, up to 60)")
      ->check(CLI::Range(1, 60));
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* graph = app.add_subcommand("graph", "export a Pell graph");
  int graph_n = 0;
  std::string emit = "edges";
  bool labels_flag = false, indices_flag = false;
  graph->add_option("--n", graph_n, "graph order")->required();
  graph->add_option("--emit", emit, "edges or adjacency")
      ->check(CLI::IsMember({"edges", "adjacency"}));
  graph->add_flag("--labels", labels_flag, "print word labels (default)");
  graph->add_flag("--indices", indices_flag, "print vertex indices instead of labels");
  graph->add_option("--build-limit", build_limit, "graph construction ceiling")
      ->envname("PELLGRAPH_BUILD_LIMIT");

  auto* classify = app.add_subcommand("classify", "per-edge kind, predicted and measured imbalance");
  int classify_n = 0;
  classify->add_option("--n", classify_n, "graph order")->required();
  classify->add_option("--build-limit", build_limit, "graph construction ceiling")
      ->envname("PELLGRAPH_BUILD_LIMIT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      vo.checks = split_csv(checks_csv);
      vo.build_limit = build_limit;
      return run_verify(vo);
    }
    if (table->parsed()) return run_table(stat, table_max_n, format);
    if (graph->parsed()) {
      if (labels_flag && indices_flag)
        throw std::invalid_argument("--labels and --indices are mutually exclusive");
      return run_graph(graph_n, emit, indices_flag, build_limit);
    }
    return run_classify(classify_n, build_limit);
  } catch (const std::domain_error& e) {
    std::cerr << "formula violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Command-line front end: verify | verify-all | graph | eigs | dump-dataset.
#include "propo/datasets.hpp"
#include "propo/graph.hpp"
#include "propo/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using propo::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const std::string& source, const propo::VerifyOptions& options, bool as_json) {
  const auto outcome = propo::run_verification(source, options);
  if (as_json)
    std::cout << nlohmann::json(outcome.report).dump(2) << '\n';
  else if (outcome.report.dimension > 0 || !outcome.report.error)
    std::cout << propo::format_text(outcome.report);
  if (!as_json && outcome.report.error) std::cerr << "error: " << *outcome.report.error << '\n';
  return code(outcome.exit_code);
}

int cmd_verify_all(const propo::VerifyOptions& options, bool as_json) {
  std::vector<std::future<propo::VerificationOutcome>> jobs;
  for (const auto& d : propo::bundled_datasets())
    jobs.push_back(std::async(std::launch::async, [name = std::string(d.name), options] {
      return propo::run_verification("bundled:" + name, options);
    }));

  int worst = 0;
  nlohmann::json all = nlohmann::json::array();
  for (auto& job : jobs) {
    const auto outcome = job.get();
    worst = std::max(worst, code(outcome.exit_code));
    const auto& r = outcome.report;
    if (as_json) {
      all.push_back(r);
      continue;
    }
    std::cout << std::left << std::setw(20) << r.dataset << " n=" << std::setw(3) << r.dimension
              << " r=" << std::setw(2) << r.fano_index << " delta0=" << std::setw(14)
              << std::setprecision(10) << r.delta0 << ' '
              << (r.holds ? "HOLDS" : "NOT ESTABLISHED");
    if (r.error) std::cout << "  (" << *r.error << ")";
    std::cout << '\n';
  }
  if (as_json) std::cout << all.dump(2) << '\n';
  return worst;
}

int cmd_graph(const std::string& source, bool dot, const std::string& highlight) {
  try {
    const auto table = propo::load_input(source);
    const auto graph = propo::build_graph(table);
    propo::DotOptions options;
    if (!highlight.empty()) {
      auto cycle = propo::cycle_from_names(graph, split_names(highlight));
      if (!propo::validate_cycle(graph, cycle)) {
        std::cerr << "error: highlighted walk is not a closed walk of the graph\n";
        return code(ExitCode::invalid_input);
      }
      options.highlight = std::move(cycle);
    }
    if (dot) {
      std::cout << propo::export_dot(graph, options);
      return 0;
    }
    for (const auto& e : graph.edges()) {
      std::cout << graph.vertices()[e.source].name << " -> " << graph.vertices()[e.target].name
                << "  weight " << e.weight;
      if (e.q_power) std::cout << "  q^" << e.q_power;
      std::cout << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitCode::invalid_input);
  }
}

int cmd_eigs(const std::string& source, const propo::VerifyOptions& options, bool as_json) {
  const auto outcome = propo::run_verification(source, options);
  const auto& r = outcome.report;
  if (r.eigenvalues.empty()) {
    std::cerr << "error: " << r.error.value_or("no spectrum computed") << '\n';
    return code(outcome.exit_code);
  }
  if (as_json) {
    std::cout << nlohmann::json(r)["spectral_route"]["eigenvalues"].dump(2) << '\n';
    return outcome.exit_code == ExitCode::fails ? 0 : code(outcome.exit_code);
  }
  std::cout << std::setprecision(12) << "# delta0 = " << r.delta0 << ", r = " << r.fano_index
            << "\n# re im |lambda| k dist on_circle\n";
  for (const auto& e : r.eigenvalues)
    std::cout << std::setw(20) << e.re << ' ' << std::setw(20) << e.im << ' ' << std::setw(18)
              << e.modulus << ' ' << std::setw(2) << e.nearest_k << ' ' << std::setw(12)
              << std::setprecision(3) << e.circle_distance << std::setprecision(12) << ' '
              << (e.on_circle ? "*" : "") << '\n';
  return outcome.exit_code == ExitCode::fails ? 0 : code(outcome.exit_code);
}

int cmd_dump(const std::string& name, const std::string& out_path, bool list) {
  if (list) {
    for (const auto& d : propo::bundled_datasets()) std::cout << d.name << '\n';
    return 0;
  }
  const auto text = propo::find_dataset(name);
  if (!text) {
    std::cerr << "error: no bundled dataset named '" << name << "'\n";
    return code(ExitCode::invalid_input);
  }
  if (out_path.empty()) {
    std::cout << *text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out || !(out << *text)) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return code(ExitCode::invalid_input);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Property O for graded quantum Chevalley tables"};
  app.set_version_flag("--version", propo::tool_version);
  app.require_subcommand(1);

  propo::VerifyOptions options;
  bool as_json = false;
  std::string source;
  int override_index = 0;

  auto* verify = app.add_subcommand("verify", "run the lemma and spectral routes on one table");
  verify->add_option("source", source, "table file or bundled:NAME")->required();
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--tol", options.tolerance, "relative tolerance")->capture_default_str();
  verify->add_option("--fano-index-override", override_index, "testing only")
      ->check(CLI::PositiveNumber);

  auto* verify_all = app.add_subcommand("verify-all", "verify every bundled dataset");
  verify_all->add_flag("--json", as_json, "machine-readable reports");
  verify_all->add_option("--tol", options.tolerance, "relative tolerance")->capture_default_str();

  bool dot = false;
  std::string highlight;
  auto* graph = app.add_subcommand("graph", "print the quantum Bruhat graph");
  graph->add_option("source", source, "table file or bundled:NAME")->required();
  graph->add_flag("--dot", dot, "emit Graphviz DOT");
  graph->add_option("--highlight", highlight, "closed walk to draw bold, e.g. a10,a6,a7,a9,a10");

  auto* eigs = app.add_subcommand("eigs", "print the eigenvalues of c1^");
  eigs->add_option("source", source, "table file or bundled:NAME")->required();
  eigs->add_flag("--json", as_json, "machine-readable table");
  eigs->add_option("--tol", options.tolerance, "relative tolerance")->capture_default_str();

  std::string dataset, out_path;
  bool list = false;
  auto* dump = app.add_subcommand("dump-dataset", "write a bundled table to disk");
  dump->add_option("name", dataset, "dataset name");
  dump->add_option("-o,--output", out_path, "output file (default stdout)");
  dump->add_flag("--list", list, "list bundled dataset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::invalid_input);
  }
  if (override_index > 0) options.fano_index_override = override_index;

  if (*verify) return cmd_verify(source, options, as_json);
  if (*verify_all) return cmd_verify_all(options, as_json);
  if (*graph) return cmd_graph(source, dot, highlight);
  if (*eigs) return cmd_eigs(source, options, as_json);
  if (*dump) return cmd_dump(dataset, out_path, list);
  return code(ExitCode::invalid_input);
}

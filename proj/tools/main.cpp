// Command-line front end: builds a symbolic pyramid from a table document
// with CAPS (order discovered) or CAPSO (order given), optionally validating
// the result and rendering it as DOT.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympyr/engine.hpp"
#include "sympyr/error.hpp"
#include "sympyr/io.hpp"
#include "sympyr/validate.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitAlgorithmFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sympyr::DataError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sympyr::DataError("cannot open output file '" + path + "'");
  out << text;
}

std::vector<int> parse_order(const std::string& csv) {
  std::vector<int> order;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      order.push_back(v);
    } catch (const std::exception&) {
      throw sympyr::UsageError("--order expects a comma-separated id list, got '" + item + "'");
    }
  }
  if (order.empty()) throw sympyr::UsageError("--order must list at least one id");
  return order;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic pyramid construction (CAPS / CAPSO)"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "build a pyramid from a table document");
  std::string input_path;
  std::string output_path;
  std::string dot_path;
  std::string order_csv;
  int max_iter = 0;
  double alpha = -1.0;
  bool validate = false;

  build->add_option("--input", input_path, "table document ('-' reads standard input)")
      ->required();
  build->add_option("--output", output_path, "pyramid document destination")->required();
  build->add_option("--order", order_csv,
                    "a-priori total order as comma-separated row ids; selects CAPSO");
  build->add_option("--max-iter", max_iter, "iteration budget (default: N(N-1)/2 + N)");
  build->add_option("--alpha", alpha, "also report modal extents at this level")
      ->check(CLI::Range(0.0, 1.0));
  build->add_option("--dot", dot_path, "write a DOT rendering here");
  build->add_flag("--validate", validate, "run the pyramid axiom checks on the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    const sympyr::SymbolicDataTable table = sympyr::parse_table(read_input(input_path));

    const int budget =
        max_iter > 0 ? max_iter : sympyr::default_max_iterations(table.row_count());
    sympyr::PyramidResult result;
    sympyr::PyramidMeta meta;
    if (!order_csv.empty()) {
      result = sympyr::run_capso(table, parse_order(order_csv), budget);
      meta.algorithm = "capso";
    } else {
      result = sympyr::run_caps(table, budget);
      meta.algorithm = "caps";
    }
    meta.iterations = result.iterations;
    if (alpha >= 0.0) meta.alpha = alpha;

    if (!result.ok()) {
      std::cerr << "error: " << result.error << "\n";
      return kExitAlgorithmFailure;
    }

    write_output(output_path, sympyr::emit_pyramid(*result.pyramid, table, meta));
    if (!dot_path.empty()) {
      write_output(dot_path, sympyr::emit_dot(*result.pyramid));
    }

    std::cerr << meta.algorithm << ": " << result.pyramid->node_count() << " nodes over "
              << table.row_count() << " rows in " << result.iterations << " iterations\n";

    if (validate) {
      const sympyr::ValidationReport report =
          sympyr::check_pyramid(*result.pyramid, table);
      std::cerr << sympyr::to_text(report);
      std::cerr << sympyr::emit_validation_json(report);
      if (!report.pass()) return kExitAlgorithmFailure;
    }
    return kExitSuccess;
  } catch (const sympyr::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const sympyr::DataError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "equihodge/errors.hpp"
#include "equihodge/io.hpp"

namespace {

std::vector<long> parse_k_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw equihodge::ValidationError("--k-list", "expected comma-separated integers, got \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw equihodge::ValidationError("--k-list", "empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Hodge and cyclic cohomology checks on small G-complexes", "equihodge"};
  std::string command, file, k_list, output = "json";
  std::size_t max_degree = 0;
  bool strict = false, timing = false;
  app.add_option("command", command, "check-axioms | cyclic | betti | hodge | euler | duality | all")
      ->required()
      ->check(CLI::IsMember(equihodge::command_names()));
  app.add_option("file", file, "input document (JSON)")->required();
  auto* degree_opt = app.add_option("--max-degree", max_degree, "highest total degree for cyclic (default 4)")
                         ->check(CLI::Range(0, 8));
  app.add_option("--k-list", k_list, "twist exponents for euler, e.g. -2,-1,0,1,2,3");
  app.add_flag("--strict-cutoff", strict, "require f = 1 somewhere on every orbit");
  app.add_option("--output", output, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--timing", timing, "append wall-clock time (output is then not reproducible)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    equihodge::RunOptions options;
    if (degree_opt->count() > 0) options.max_degree = max_degree;
    if (!k_list.empty()) options.k_list = parse_k_list(k_list);
    options.strict_cutoff = strict;
    const equihodge::Problem problem = equihodge::load_problem(file);
    const auto reports = equihodge::run_command(command, problem, options);
    std::optional<double> elapsed;
    if (timing)
      elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << equihodge::render(command, problem, reports,
                                   output == "tsv" ? equihodge::OutputFormat::tsv : equihodge::OutputFormat::json,
                                   elapsed);
    return equihodge::exit_code(reports);
  } catch (const equihodge::ValidationError& e) {
    std::cerr << "equihodge: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const equihodge::Error& e) {
    std::cerr << "equihodge: " << e.what() << "\n";
    return 2;
  }
}

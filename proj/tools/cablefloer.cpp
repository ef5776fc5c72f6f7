// cablefloer: HFK-hat and tau of (p, pn+1)-cables of thin knots.
//
//   cablefloer --delta "2,-6,9,-6,2" --tau 0 --p 5 --n 3 --format poly
//   cablefloer --delta "1,-1,1" --tau 1 --p 3 --q 2 --mode tau
//   cablefloer --mode selfcheck --count 200
//
// Exit status: 0 ok, 1 bad input, 2 internal consistency failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "cablefloer.hpp"
#include "cablefloer/cli.hpp"

namespace cli = cablefloer::cli;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw cablefloer::InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology and tau of (p, pn+1)-cables of thin knots"};
  cli::RunConfig cfg;
  std::string input;
  app.add_option("--delta", cfg.delta, "Symmetrized Alexander polynomial, coefficients from t^-g to t^g");
  app.add_option("--tau", cfg.tau, "tau of the companion knot");
  app.add_option("--p", cfg.p, "Cable parameter p > 1");
  app.add_option("--n", cfg.n, "Cable parameter n, so q = pn + 1");
  app.add_option("--q", cfg.q, "Cable parameter q (tau mode only)");
  app.add_option("--input", input, "JSON file with {\"delta\": [...], \"tau\": k}; - reads stdin");
  app.add_option("--mode", cfg.mode, "What to compute")->check(CLI::IsMember({"hfk", "tau", "selfcheck"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "poly", "svg", "ascii"}));
  app.add_option("--filter", cfg.filter, "Grading filter (default repair, or $CABLEFLOER_FILTER_MODE)")
      ->check(CLI::IsMember({"strict", "repair"}));
  app.add_option("--dump", cfg.dump, "Print an intermediate object instead of ranks")
      ->check(CLI::IsMember({"typeD", "typeA", "complex"}));
  app.add_option("--seed", cfg.seed, "Selfcheck seed");
  app.add_option("--count", cfg.count, "Selfcheck case count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kBadInput;
  }

  if (!input.empty()) {
    try {
      cli::apply_input_json(cfg, read_all(input));
    } catch (const cablefloer::InputError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kBadInput;
    }
  }
  return cli::run(cfg, std::cout, std::cerr);
}

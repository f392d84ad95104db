#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using forestbetti::InputKind;
using forestbetti::cli::OutputFormat;
using forestbetti::cli::RunConfig;

void add_input_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("input", config.input,
                  "Input file (complex or ideal text format), '-' for stdin");
  sub->add_option("-e,--text", config.inline_text,
                  "Inline input, lines separated by ';'");
  sub->add_option("--as", config.as, "Input format: ideal | complex")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputKind>{{"ideal", InputKind::kIdeal},
                                           {"complex", InputKind::kComplex},
                                           {"auto", InputKind::kAuto}},
          CLI::ignore_case));
}

void add_format_option(CLI::App* sub, RunConfig& config) {
  sub->add_option("--format", config.format, "Output format: table | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"table", OutputFormat::kTable},
                                              {"json", OutputFormat::kJson}},
          CLI::ignore_case));
}

void add_field_option(CLI::App* sub, RunConfig& config) {
  sub->add_option("--field", config.fields,
                  "Prime characteristic(s), comma separated (default 2)")
      ->delimiter(',');
}

void add_caps(CLI::App* sub, RunConfig& config) {
  sub->add_option("--max-vertices", config.max_vertices,
                  "Vertex cap for random forests");
  sub->add_option("--max-facets", config.max_facets,
                  "Facet cap for random forests");
  sub->add_option("--seed", config.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of monomial ideals and simplicial forests"};
  app.require_subcommand(1);
  RunConfig config;

  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  auto* multigraded =
      app.add_subcommand("multigraded", "Nonzero multigraded Betti numbers");
  for (auto* sub : {betti, multigraded}) {
    add_input_options(sub, config);
    add_format_option(sub, config);
    add_field_option(sub, config);
    auto* oracle =
        sub->add_flag("--oracle", config.oracle, "Force the Taylor oracle");
    sub->add_flag("--fast", config.fast,
                  "Require the forest recursion (fails on non-forests)")
        ->excludes(oracle);
    sub->add_option("--max-generators", config.max_generators,
                    "Generator cap for the Taylor oracle");
  }

  auto* forest_check =
      app.add_subcommand("forest-check", "Decide whether a complex is a forest");
  auto* leaf = app.add_subcommand("leaf-order", "Print a leaf order");
  for (auto* sub : {forest_check, leaf}) {
    add_input_options(sub, config);
    add_format_option(sub, config);
  }

  auto* verify = app.add_subcommand(
      "verify", "Check that forest multigraded Betti numbers are 0 or 1");
  add_input_options(verify, config);
  add_format_option(verify, config);
  add_field_option(verify, config);
  add_caps(verify, config);
  verify->add_flag("--oracle", config.oracle,
                   "Cross-check every value against the Taylor oracle");
  verify->add_flag("--oracle-only", config.oracle_only,
                   "Use only the Taylor oracle (accepts non-forests)");
  verify->add_flag("--random", config.random_input,
                   "Check --count seeded random forests instead of input");
  verify->add_option("--count", config.count, "Number of random forests");
  verify->add_flag("--all-subsets", config.all_subsets,
                   "Check every vertex subset, not just the lcm lattice");
  verify->add_option("--max-generators", config.max_generators,
                     "Generator cap for the Taylor oracle");

  auto* random = app.add_subcommand("random-forest", "Emit a random forest");
  add_caps(random, config);

  CLI11_PARSE(app, argc, argv);
  config.subcommand = app.get_subcommands().front()->get_name();
  return forestbetti::cli::run(config, std::cin, std::cout, std::cerr);
}

#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using groupeq::cli::Format;
  groupeq::cli::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Classify and reduce systems of equations over groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-closure", cfg.max_closure, "Cap on enumerated group elements");
  app.add_option("--max-unknowns", cfg.max_unknowns, "Cap on unknowns for brute-force search");
  app.add_option("--minor-budget", cfg.minor_budget, "Column subsets tried for a witness minor");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  auto* classify = app.add_subcommand("classify", "Singular / nonsingular / unimodular verdict");
  classify->add_option("FILE", cfg.inputs)->required();
  auto* reduce = app.add_subcommand("reduce", "Reduce a system over A x| B and certify nonsingularity");
  reduce->add_option("FILE", cfg.inputs)->required();
  auto* solve = app.add_subcommand("solve", "Brute-force solutions inside a finite triangular group");
  solve->add_option("FILE", cfg.inputs)->required();
  solve->add_option("--group", cfg.group, "f7-42 or custom")->check(CLI::IsMember({"f7-42", "custom"}));
  solve->add_option("--prime", cfg.prime, "Field size for --group custom");
  solve->add_option("--gen", cfg.generators, "Generator u,v of ((1,u),(0,v)) for --group custom");
  solve->add_option("--assign", cfg.assignments, "Coefficient value NAME=u,v");
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
  snf->add_option("FILE", cfg.inputs)->required();
  auto* verify = app.add_subcommand("verify", "Reproduce the metabelian counterexamples");
  verify->add_option("TARGET", cfg.target, "prop1a, prop1b or lemma1")
      ->required()
      ->check(CLI::IsMember({"prop1a", "prop1b", "lemma1"}));
  verify->add_option("--group", cfg.group, "Finite group for lemma1")
      ->check(CLI::IsMember(groupeq::named_group_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : groupeq::cli::kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::text;

  auto result = groupeq::cli::dispatch(cfg);
  bool is_error = result.output.rfind("error:", 0) == 0;
  (is_error ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}

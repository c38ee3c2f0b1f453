#include <iostream>

#include <CLI11.hpp>

#include "cli/cli.hpp"

int main(int argc, char** argv) {
  using mediator::cli::Format;
  CLI::App app{"Decide whether a joint belief can be implemented by a mediator's public signal"};
  app.require_subcommand(1);

  mediator::cli::RunConfig config;
  std::string format = "json";
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub, const std::string& input_help) {
    sub->add_option("inputs", config.inputs, input_help)->required();
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };

  common(app.add_subcommand("validate", "Validate an instance (and its joint belief)"), "instance file");
  auto* ckc = common(app.add_subcommand("ckc", "Common-knowledge components and component graph"), "instance file");
  ckc->add_option("--players", config.players, "restrict to these players")->delimiter(',');
  auto* check = common(app.add_subcommand("check", "Check a phi table for internal/external consistency"),
                       "instance file");
  check->add_option("--phi", config.phi_path, "phi table JSON")->required();
  auto* decide = common(app.add_subcommand("decide", "Decide implementability and synthesize a kernel"),
                        "instance file with joint_belief");
  decide->add_option("--players", config.players, "decide for this player subgroup only")->delimiter(',');
  auto* verify = common(app.add_subcommand("verify", "Compare a kernel's joint posterior with the joint belief"),
                        "instance file with joint_belief");
  verify->add_option("--kernel", config.kernel_path, "kernel JSON")->required();
  verify->add_option("--signal", config.signal, "signal to condition on");
  auto* simulate = common(app.add_subcommand("simulate", "Monte Carlo check of a kernel against the joint belief"),
                          "instance file with joint_belief");
  simulate->add_option("--kernel", config.kernel_path, "kernel JSON")->required();
  simulate->add_option("--signal", config.signal, "signal to condition on");
  simulate->add_option("--samples", config.samples, "number of draws")->required();
  auto* seed_opt = simulate->add_option("--seed", seed, "random seed")->required();
  auto* multi = common(app.add_subcommand("multi", "One kernel generating several joint beliefs"),
                       "instance file, then joint belief files");
  multi->add_option("--semantics", config.semantics, "pp or spp")->check(CLI::IsMember({"pp", "spp"}));
  multi->add_flag("--degraded", config.degraded, "emit positive-weight signals when only PP holds");
  common(app.add_subcommand("potential", "Recover an exact potential or a violating cycle"), "game file");
  common(app.add_subcommand("demo", "Run a built-in worked example: negotiation or example1"), "demo name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : mediator::cli::kInputError;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "text" ? Format::Text : Format::Json;
  if (*seed_opt) config.seed = seed;
  return mediator::cli::run(config, std::cout, std::cerr);
}

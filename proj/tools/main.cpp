#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"optimal planar convex bodies for elastic energy plus "
               "penalized area, and their Blaschke-Santalo diagram"};
  app.require_subcommand(1);

  elastica::tools::RunConfig cfg;

  auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "periodicity index (1 or 2)")
        ->check(CLI::Range(1, 2));
    cmd->add_option("--tol", cfg.tolerance, "residual tolerance override");
    cmd->add_option("--grid", cfg.grid, "boundary grid size")
        ->check(CLI::Range(64, 1 << 22));
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one penalization value");
  solve->add_option("--mu", cfg.mu, "penalization parameter")->required();
  solve->add_option("--mode", cfg.mode, "auto|strict|segments|disk");
  solve->add_option("--out", cfg.out, "shape CSV path (default shape.csv)");
  solve->add_option("--svg", cfg.svg, "also render the boundary to SVG");
  add_common(solve);

  CLI::App* sweep = app.add_subcommand("sweep", "trace the diagram boundary");
  sweep->add_option("--mu-min", cfg.mu_min, "lower end of the mu range")
      ->required();
  sweep->add_option("--mu-max", cfg.mu_max, "upper end of the mu range")
      ->required();
  sweep->add_option("--steps", cfg.steps, "number of rows")->required();
  sweep->add_option("--out", cfg.out, "table CSV path (default diagram.csv)");
  sweep->add_option("--svg", cfg.svg, "also render the diagram to SVG");
  add_common(sweep);

  CLI::App* onset = app.add_subcommand("onset", "bisect the segment onset mu*");
  onset->add_option("--tol", cfg.onset_width, "bisection width (default 1e-3)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--only", cfg.only,
                     "restrict to one suite: special-functions, geometry, "
                     "elastica, shooting, diagram");
  verify->add_flag("--onset", cfg.onset,
                   "run only the segment-onset bisection check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return elastica::tools::cmd_solve(cfg);
    if (sweep->parsed()) return elastica::tools::cmd_sweep(cfg);
    if (onset->parsed()) return elastica::tools::cmd_onset(cfg);
    if (verify->parsed()) return elastica::tools::cmd_verify(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

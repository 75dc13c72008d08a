#ifndef ELASTICA_TOOLS_COMMANDS_HPP
#define ELASTICA_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>

namespace elastica::tools {

struct RunConfig {
  double mu = 1.0;
  double mu_min = 1.0;
  double mu_max = 10.0;
  int steps = 20;
  int q = 1;
  std::string mode = "auto";  // auto | strict | segments | disk
  std::optional<double> tolerance;
  int grid = 32768;
  std::string out;
  std::string svg;
  std::string only;   // verify: restrict to one suite
  bool onset = false; // verify: run the onset check alone
  double onset_width = 1e-3;
};

int cmd_solve(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_onset(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace elastica::tools

#endif  // ELASTICA_TOOLS_COMMANDS_HPP

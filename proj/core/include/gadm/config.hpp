#ifndef GADM_CONFIG_HPP_
#define GADM_CONFIG_HPP_

#include <array>
#include <string>

#include "gadm/grid.hpp"

namespace gadm {

// Run description, parsed from an INI-style file:
//
//   # comment
//   [grid]
//   n        = [32, 32, 32]
//   h        = [0.03125, 0.03125, 0.03125]
//   origin   = [0, 0, 0]
//   topology = [periodic, periodic, boundary]
//
//   [scenario]
//   name      = kasner | minkowski | perturbed-kasner | mms
//   p         = [0.6666666666666666, 0.6666666666666666, -0.3333333333333333]
//   t0        = 1.0
//   amplitude = 0.001          # perturbed-kasner
//   recipe    = trig01         # mms
//
//   [time]
//   cfl             = 0.25
//   t_end           = 2.0
//   output_interval = 0.25
//
//   [fd]
//   order       = 4
//   dissipation = 0.0
//
//   [boundary]
//   mode = geodesic | none     # default follows the grid topology
//
//   [output]
//   dir            = out
//   snapshot_every = 1         # in output intervals; 0 = final only
//
// Parsing and validation collect every problem, each tagged with its line,
// and report them in one ConfigError.
struct RunConfig {
  Grid grid;

  std::string scenario;
  std::array<double, 3> p{2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};
  double t0 = 1.0;
  double amplitude = 0.0;
  std::string recipe;

  double cfl = 0.25;
  double t_end = 0.0;
  double output_interval = 0.0;  // 0: one interval spanning the whole run

  int fd_order = 4;
  double dissipation = 0.0;

  bool geodesic_wall = false;

  std::string out_dir = "out";
  int snapshot_every = 1;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical echo of a resolved configuration; parsing it back reproduces
// the same RunConfig.
std::string render_config(const RunConfig& c);

}  // namespace gadm

#endif

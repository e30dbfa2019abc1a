// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_DIAGRAM_HPP
#define ORBITKIT_DIAGRAM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "orbitkit/map_family.hpp"

namespace orbitkit {

struct EmptyDataset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DiagramSettings {
  int n_params = 1000;
  int transient = 1000;
  int keep = 200;
  // Seed policy: fixed value when set, else the map's critical points
  // (both of them for the cubic, samples merged).
  std::optional<double> x0;
  double escape_bound = 1e6;
};

struct DiagramDataset {
  std::string family;
  DiagramSettings settings;
  std::vector<double> params;                 // ascending
  std::vector<std::vector<double>> samples;   // per param, kept iterates
  std::vector<bool> escaped;                  // per param: any seed escaped
  int escaped_params = 0;                     // sidecar statistic
};

DiagramDataset orbit_diagram(const MapFamily& f, double t_lo, double t_hi,
                             const DiagramSettings& settings = {});

// "param,x" rows, full double precision, parameters ascending.
void write_csv(const DiagramDataset& d, std::ostream& os);

// Self-contained scatter plot; throws EmptyDataset when nothing survived.
std::string render_svg(const DiagramDataset& d, int width = 800, int height = 600);

}  // namespace orbitkit

#endif

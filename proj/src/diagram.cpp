// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/diagram.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "orbitkit/continuation.hpp"

namespace orbitkit {

namespace {

// Real critical points of the specialized map (derivative degree <= 2 for the
// built-in families).
std::vector<double> critical_points(const SpecializedMap& m) {
  std::vector<double> d(m.c.size() > 1 ? m.c.size() - 1 : 0);
  for (size_t j = 1; j < m.c.size(); ++j) d[j - 1] = j * m.c[j];
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) return {0.0};
  if (d.size() == 1) return {};  // constant nonzero derivative: no critical point
  if (d.size() == 2) return {-d[0] / d[1]};
  double a = d[2], b = d[1], c = d[0];
  double disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  double s = std::sqrt(disc);
  return {(-b - s) / (2 * a), (-b + s) / (2 * a)};
}

}  // namespace

DiagramDataset orbit_diagram(const MapFamily& f, double t_lo, double t_hi,
                             const DiagramSettings& settings) {
  if (settings.n_params < 2) throw std::invalid_argument("n_params must be >= 2");
  if (settings.transient < 0 || settings.keep < 1)
    throw std::invalid_argument("transient must be >= 0 and keep >= 1");
  DiagramDataset d;
  d.family = f.name;
  d.settings = settings;
  d.params.resize(settings.n_params);
  d.samples.resize(settings.n_params);
  d.escaped.assign(settings.n_params, false);
  for (int i = 0; i < settings.n_params; ++i) {
    double t = t_lo + (t_hi - t_lo) * i / (settings.n_params - 1);
    d.params[i] = t;
    SpecializedMap m(f, t);
    std::vector<double> seeds =
        settings.x0 ? std::vector<double>{*settings.x0} : critical_points(m);
    if (seeds.empty()) seeds.push_back(0.0);
    for (double x : seeds) {
      bool escaped = false;
      for (int k = 0; k < settings.transient; ++k) {
        x = m.eval(x);
        if (!std::isfinite(x) || std::abs(x) > settings.escape_bound) {
          escaped = true;
          break;
        }
      }
      if (!escaped) {
        for (int k = 0; k < settings.keep; ++k) {
          d.samples[i].push_back(x);
          x = m.eval(x);
          if (!std::isfinite(x) || std::abs(x) > settings.escape_bound) {
            escaped = true;
            d.samples[i].resize(d.samples[i].size());
            break;
          }
        }
      }
      if (escaped) d.escaped[i] = true;
    }
    if (d.escaped[i]) ++d.escaped_params;
  }
  return d;
}

void write_csv(const DiagramDataset& d, std::ostream& os) {
  os << "param,x\n";
  os << std::setprecision(17);
  for (size_t i = 0; i < d.params.size(); ++i)
    for (double x : d.samples[i]) os << d.params[i] << "," << x << "\n";
}

std::string render_svg(const DiagramDataset& d, int width, int height) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (size_t i = 0; i < d.params.size(); ++i) {
    for (double y : d.samples[i]) {
      if (!any) {
        xmin = xmax = d.params[i];
        ymin = ymax = y;
        any = true;
      } else {
        xmin = std::min(xmin, d.params[i]);
        xmax = std::max(xmax, d.params[i]);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (!any) throw EmptyDataset("no samples to plot (all orbits escaped?)");
  double xpad = (xmax - xmin) * 0.02, ypad = (ymax - ymin) * 0.02;
  if (xpad == 0) xpad = 0.5;
  if (ypad == 0) ypad = 0.5;
  xmin -= xpad;
  xmax += xpad;
  ymin -= ypad;
  ymax += ypad;
  const int ml = 56, mb = 40, mt = 12, mr = 12;
  double pw = width - ml - mr, ph = height - mt - mb;
  auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << std::setprecision(8);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    double tx = xmin + (xmax - xmin) * k / 4;
    double ty = ymin + (ymax - ymin) * k / 4;
    svg << "<text x=\"" << X(tx) << "\" y=\"" << height - mb + 16
        << "\" font-size=\"11\" text-anchor=\"middle\">" << tx << "</text>\n";
    svg << "<text x=\"" << ml - 6 << "\" y=\"" << Y(ty) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << ty << "</text>\n";
  }
  svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 6
      << "\" font-size=\"12\" text-anchor=\"middle\">" << d.family << " parameter</text>\n";
  svg << "<text x=\"14\" y=\"" << mt + ph / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << mt + ph / 2 << ")\">x</text>\n";
  svg << "<g fill=\"#1f4e79\">\n";
  for (size_t i = 0; i < d.params.size(); ++i)
    for (double y : d.samples[i])
      svg << "<circle cx=\"" << X(d.params[i]) << "\" cy=\"" << Y(y)
          << "\" r=\"0.7\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace orbitkit

#include "plots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "strainwig/errors.hpp"

namespace strainwig::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 220.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 40.0;

struct Curve {
  std::string label;
  std::string color;
  std::string dash;
  std::vector<std::pair<double, double>> pts;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void panel(std::ostringstream& svg, double y0, const std::string& ylabel,
           const std::vector<Curve>& curves) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& c : curves)
    for (const auto& [x, y] : c.pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  const double w = kWidth - kLeft - kRight;
  const double h = kPanelHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * w; };
  auto py = [&](double y) { return y0 + kTop + (ymax - y) / (ymax - ymin) * h; };

  svg << "<rect x='" << kLeft << "' y='" << y0 + kTop << "' width='" << w << "' height='" << h
      << "' fill='none' stroke='black'/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4.0;
    const double yv = ymin + k * (ymax - ymin) / 4.0;
    svg << "<text x='" << px(xv) << "' y='" << y0 + kTop + h + 16
        << "' font-size='11' text-anchor='middle'>" << num(xv) << "</text>\n";
    svg << "<text x='" << kLeft - 6 << "' y='" << py(yv) + 4
        << "' font-size='11' text-anchor='end'>" << num(yv) << "</text>\n";
  }
  svg << "<text x='" << 16 << "' y='" << y0 + kTop + h / 2 << "' font-size='13' transform='rotate(-90 16 "
      << y0 + kTop + h / 2 << ")' text-anchor='middle'>" << ylabel << "</text>\n";
  svg << "<text x='" << kLeft + w / 2 << "' y='" << y0 + kTop + h + 32
      << "' font-size='12' text-anchor='middle'>epsilon</text>\n";

  double ly = y0 + kTop + 14;
  for (const auto& c : curves) {
    svg << "<polyline fill='none' stroke='" << c.color << "' stroke-width='1.6'";
    if (!c.dash.empty()) svg << " stroke-dasharray='" << c.dash << "'";
    svg << " points='";
    for (const auto& [x, y] : c.pts) svg << px(x) << ',' << py(y) << ' ';
    svg << "'/>\n";
    svg << "<line x1='" << kLeft + w - 110 << "' y1='" << ly - 4 << "' x2='" << kLeft + w - 90
        << "' y2='" << ly - 4 << "' stroke='" << c.color << "'";
    if (!c.dash.empty()) svg << " stroke-dasharray='" << c.dash << "'";
    svg << "/>\n<text x='" << kLeft + w - 86 << "' y='" << ly << "' font-size='11'>" << c.label
        << "</text>\n";
    ly += 14;
  }
}

}  // namespace

void write_sweep_svg(const std::vector<SweepSeries>& series, const std::string& path) {
  const char* colors[] = {"#1f4e9c", "#b3261e"};
  using Getter = std::function<double(const SweepRow&)>;
  auto make = [&](const std::string& name, const Getter& get, const std::string& dash,
                  std::size_t idx) {
    Curve c;
    c.label = name + " " + series[idx].direction;
    c.color = colors[idx % 2];
    c.dash = dash;
    for (const auto& r : series[idx].rows) c.pts.emplace_back(r.epsilon, get(r));
    return c;
  };
  std::vector<Curve> ab, zeta, vf;
  for (std::size_t i = 0; i < series.size(); ++i) {
    ab.push_back(make("a", [](const SweepRow& r) { return r.a; }, "", i));
    ab.push_back(make("b", [](const SweepRow& r) { return r.b; }, "5,3", i));
    zeta.push_back(make("zeta", [](const SweepRow& r) { return r.zeta; }, "", i));
    vf.push_back(make("vF'", [](const SweepRow& r) { return r.vf_eff; }, "", i));
  }
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
      << 3 * kPanelHeight << "' font-family='sans-serif'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  panel(svg, 0.0, "a, b", ab);
  panel(svg, kPanelHeight, "zeta = a/b", zeta);
  panel(svg, 2 * kPanelHeight, "vF' / vF", vf);
  svg << "</svg>\n";
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  os << svg.str();
}

}  // namespace strainwig::cli

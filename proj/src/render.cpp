#include "unimod/render.hpp"

#include <cstdio>
#include <fstream>

#include "unimod/errors.hpp"

namespace unimod {

namespace {

constexpr double kView = 1.25 * kPi;
constexpr double kSide = 600.0;
constexpr double kPad = 20.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double px(double theta) { return kPad + (theta + kView) / (2.0 * kView) * kSide; }
// SVG y grows downwards; theta2 grows upwards.
double py(double theta) { return kPad + (kView - theta) / (2.0 * kView) * kSide; }

}  // namespace

std::string render_svg(const FigureSpec& spec) {
  if (spec.sample_resolution < 100) throw DomainError("sample_resolution must be at least 100");
  if (spec.palette.empty()) throw DomainError("palette is empty");
  const std::size_t m = spec.sample_resolution;
  const double cell = 2.0 * kView / static_cast<double>(m);
  const double cell_px = kSide / static_cast<double>(m);
  const double total = kSide + 2.0 * kPad;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(total) + "\" height=\"" + num(total) +
       "\" viewBox=\"0 0 " + num(total) + " " + num(total) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(total) + "\" height=\"" + num(total) + "\" fill=\"white\"/>\n";

  for (std::size_t b = 0; b < spec.centers.size(); ++b) {
    const std::string& color = spec.palette[b % spec.palette.size()];
    s += "<g fill=\"" + color + "\" fill-opacity=\"0.45\" shape-rendering=\"crispEdges\">\n";
    // One run-length encoded pass per sample row.
    for (std::size_t r = 0; r < m; ++r) {
      const double t2 = kView - (static_cast<double>(r) + 0.5) * cell;
      std::size_t c = 0;
      while (c < m) {
        auto inside = [&](std::size_t col) {
          const double t1 = -kView + (static_cast<double>(col) + 0.5) * cell;
          return toric_membership(spec.centers[b], TorusPoint(t1, t2), spec.closed).inside;
        };
        if (!inside(c)) {
          ++c;
          continue;
        }
        std::size_t e = c + 1;
        while (e < m && inside(e)) ++e;
        s += "<rect x=\"" + num(kPad + static_cast<double>(c) * cell_px) + "\" y=\"" +
             num(kPad + static_cast<double>(r) * cell_px) + "\" width=\"" +
             num(static_cast<double>(e - c) * cell_px) + "\" height=\"" + num(cell_px) + "\"/>\n";
        c = e;
      }
    }
    s += "</g>\n";
  }

  s += "<rect x=\"" + num(px(-kPi)) + "\" y=\"" + num(py(kPi)) + "\" width=\"" + num(px(kPi) - px(-kPi)) +
       "\" height=\"" + num(py(-kPi) - py(kPi)) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  if (spec.show_grid) {
    s += "<g fill=\"black\">\n";
    for (int i = 0; i < 9; ++i) {
      const TorusPoint p = grid_torus_point(grid_point(i));
      s += "<circle cx=\"" + num(px(p.theta1())) + "\" cy=\"" + num(py(p.theta2())) + "\" r=\"3.500\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_svg(const FigureSpec& spec, const std::string& path) {
  const std::string svg = render_svg(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << svg;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace unimod

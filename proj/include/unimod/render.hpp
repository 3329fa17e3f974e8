#pragma once

#include <string>
#include <vector>

#include "unimod/torus.hpp"

namespace unimod {

struct FigureSpec {
  std::vector<ToricCenter> centers;
  bool show_grid = true;
  std::size_t sample_resolution = 360;  // samples per axis over the view
  std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};
  bool closed = false;                  // draw closed instead of open bodies
};

/// SVG picture of the bodies on [-5pi/4, 5pi/4]^2 with the fundamental domain
/// [-pi, pi)^2 outlined and the grid points marked. Output is a pure function
/// of the spec.
std::string render_svg(const FigureSpec& spec);
void write_svg(const FigureSpec& spec, const std::string& path);

}  // namespace unimod

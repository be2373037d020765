#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cycseq {

/// Polyline rendering of a planar path: viewBox auto-fitted with a 5% margin,
/// stroke width 0.02, vertices drawn as 0.03-radius dots. The y-axis is
/// flipped so the figure appears in mathematical orientation.
std::string render_svg(const std::vector<std::complex<double>>& points);

} // namespace cycseq

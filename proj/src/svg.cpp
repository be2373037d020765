#include "cycseq/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cycseq {

std::string render_svg(const std::vector<std::complex<double>>& points) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!points.empty()) {
        minx = maxx = points.front().real();
        miny = maxy = -points.front().imag();
        for (const auto& p : points) {
            minx = std::min(minx, p.real());
            maxx = std::max(maxx, p.real());
            miny = std::min(miny, -p.imag());
            maxy = std::max(maxy, -p.imag());
        }
    }
    double w = maxx - minx, h = maxy - miny;
    double margin = 0.05 * std::max({w, h, 1e-9});
    minx -= margin;
    miny -= margin;
    w += 2 * margin;
    h += 2 * margin;

    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx << ' '
       << miny << ' ' << w << ' ' << h << "\">\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.02\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            os << ' ';
        os << points[i].real() << ',' << -points[i].imag();
    }
    os << "\"/>\n";
    for (const auto& p : points)
        os << "  <circle cx=\"" << p.real() << "\" cy=\"" << -p.imag()
           << "\" r=\"0.03\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace cycseq

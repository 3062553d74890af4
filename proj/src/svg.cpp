#include "fic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fic/serialize.hpp"

namespace fic {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 560.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 56.0;

double nice_ceil(double v) {
    if (v <= 0.0) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(v)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (v <= m * mag + 1e-12) return m * mag;
    return 10.0 * mag;
}

}  // namespace

std::string render_region_svg(const std::vector<BoundaryCurve>& curves,
                              const std::string& title) {
    double max_r = 0.0;
    for (const BoundaryCurve& c : curves)
        for (const RatePoint& p : c.points) max_r = std::max({max_r, p.r1, p.r2});
    const double lim = nice_ceil(max_r * 1.05);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double r1) { return kMarginLeft + r1 / lim * plot_w; };
    auto sy = [&](double r2) { return kMarginTop + plot_h - r2 / lim * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << title << "</text>\n";

    // axes with 5 ticks per side
    out << "  <g stroke=\"#444\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(lim) << "\" y2=\""
        << sy(0) << "\"/>\n";
    out << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\""
        << sy(lim) << "\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        const double r = lim * k / 5.0;
        out << "    <line x1=\"" << sx(r) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(r)
            << "\" y2=\"" << sy(0) + 5 << "\"/>\n";
        out << "    <text x=\"" << sx(r) << "\" y=\"" << sy(0) + 18
            << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#444\">" << fmt12(r)
            << "</text>\n";
        out << "    <line x1=\"" << sx(0) - 5 << "\" y1=\"" << sy(r) << "\" x2=\"" << sx(0)
            << "\" y2=\"" << sy(r) << "\"/>\n";
        out << "    <text x=\"" << sx(0) - 8 << "\" y=\"" << sy(r) + 4
            << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#444\">" << fmt12(r) << "</text>\n";
    }
    out << "  </g>\n";
    out << "  <text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">R1 (bits)"
        << "</text>\n";
    out << "  <text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << kMarginTop + plot_h / 2 << ")\">R2 (bits)</text>\n";

    for (const BoundaryCurve& c : curves) {
        out << "  <polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"2\"";
        if (c.dashed) out << " stroke-dasharray=\"7 4\"";
        out << " points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            if (i) out << " ";
            out << fmt12(sx(c.points[i].r1)) << "," << fmt12(sy(c.points[i].r2));
        }
        out << "\"/>\n";
    }

    // legend
    double ly = kMarginTop + 12.0;
    for (const BoundaryCurve& c : curves) {
        const double lx = kMarginLeft + plot_w - 170.0;
        out << "  <line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 28 << "\" y2=\""
            << ly << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"";
        if (c.dashed) out << " stroke-dasharray=\"7 4\"";
        out << "/>\n";
        out << "  <text x=\"" << lx + 34 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << c.name << "</text>\n";
        ly += 18.0;
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace fic

#include "picard/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace picard {

namespace {

std::string fmt(double x) {
    if (std::abs(x) < 1e-12) x = 0.0;  // avoid "-0"
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

struct Box {
    double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
    bool seen = false;

    void add(double x, double y) {
        if (!seen) {
            xmin = xmax = x;
            ymin = ymax = y;
            seen = true;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    void pad(double frac) {
        double px = std::max(0.5, (xmax - xmin) * frac);
        double py = std::max(0.5, (ymax - ymin) * frac);
        xmin -= px;
        xmax += px;
        ymin -= py;
        ymax += py;
    }
};

// clip base + t dir to the box (Liang-Barsky)
bool clip_line(const ProjectedLine& line, const Box& box, double& t0, double& t1) {
    t0 = -1e18;
    t1 = 1e18;
    const double p[4] = {-line.dir.real(), line.dir.real(), -line.dir.imag(), line.dir.imag()};
    const double q[4] = {line.base.real() - box.xmin, box.xmax - line.base.real(),
                         line.base.imag() - box.ymin, box.ymax - line.base.imag()};
    for (int i = 0; i < 4; i++) {
        if (std::abs(p[i]) < 1e-15) {
            if (q[i] < 0) return false;
            continue;
        }
        double t = q[i] / p[i];
        if (p[i] < 0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
    }
    return t0 < t1;
}

}  // namespace

std::string render_orbit_svg(const SvgConfig& config) {
    if (config.radius < 0 || config.radius > 6)
        throw std::invalid_argument("orbit svg: radius must lie in 0..6");
    if (config.density < 8 || config.density > 4096)
        throw std::invalid_argument("orbit svg: density must lie in 8..4096");

    UnitarySymmetric standard(MatK::identity(config.d));
    GeneratorSet gens = picard_generators(config.d);
    std::vector<UnitarySymmetric> ball = orbit_circles(standard, gens, config.radius);

    std::vector<CircleSample> finite_samples;
    std::vector<ProjectedLine> lines;
    Box box;
    for (const UnitarySymmetric& y : ball) {
        if (circle_data(y).finite) {
            CircleSample s = sample_circle(y, config.density);
            for (const CirclePoint& p : s.points) box.add(p.zeta_re, p.zeta_im);
            finite_samples.push_back(std::move(s));
        } else {
            lines.push_back(infinite_circle_line(y));
        }
    }
    box.pad(0.05);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"720\" "
           "height=\"720\" viewBox=\""
        << fmt(box.xmin) << " " << fmt(box.ymin) << " " << fmt(box.xmax - box.xmin) << " "
        << fmt(box.ymax - box.ymin) << "\">\n";
    const double stroke = 0.004 * std::max(box.xmax - box.xmin, box.ymax - box.ymin);

    for (const ProjectedLine& line : lines) {
        double t0, t1;
        if (!clip_line(line, box, t0, t1)) continue;
        auto a = line.base + t0 * line.dir, b = line.base + t1 * line.dir;
        svg << "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"" << fmt(stroke)
            << "\" points=\"" << fmt(a.real()) << "," << fmt(a.imag()) << " " << fmt(b.real())
            << "," << fmt(b.imag()) << "\"/>\n";
    }
    for (const CircleSample& s : finite_samples) {
        svg << "<polyline fill=\"none\" stroke=\"#1d3557\" stroke-width=\"" << fmt(stroke)
            << "\" points=\"";
        bool first = true;
        for (const CirclePoint& p : s.points) {
            if (!first) svg << " ";
            svg << fmt(p.zeta_re) << "," << fmt(p.zeta_im);
            first = false;
        }
        if (s.closed && !s.points.empty())
            svg << " " << fmt(s.points[0].zeta_re) << "," << fmt(s.points[0].zeta_im);
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace picard

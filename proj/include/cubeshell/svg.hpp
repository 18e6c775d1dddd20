#pragma once

// Static SVG figure of a solved instance in the normalized frame: projected
// points, the center domain, Voronoi edges and the optimal shell's section.

#include "cubeshell/linf_voronoi.hpp"
#include "cubeshell/solver.hpp"

#include <iomanip>
#include <ostream>

namespace cubeshell {

struct SvgOptions {
    double size = 640;
    bool voronoi = true;
    std::size_t voronoi_site_limit = 2000;
};

inline void render_svg(std::ostream& out, const PointSet& P, const SolveResult& res, const SvgOptions& opt = {}) {
    auto [Pn, norm] = normalize(P);
    const CenterDomain C = center_domain(Pn);
    const Point cn = norm.apply(res.shell.center);

    // Plane coordinates of every point: (x1, x2) for d = 3, (x1, x2) for d = 2, (x1, 0) for d = 1.
    auto plane = [&](const Point& p) -> std::pair<double, double> {
        if (p.dim() == 1) return {to_double(p[0]), 0.0};
        return {to_double(p[0]), to_double(p[1])};
    };
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    auto grow = [&](double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    };
    for (const auto& p : Pn) {
        auto [x, y] = plane(p);
        grow(x, y);
    }
    const auto [cx, cy] = plane(cn);
    const double R = to_double(res.shell.outer_radius), r = to_double(res.shell.inner_radius);
    if (Pn.dim() == 3) {
        grow(cx - R, cy - R);
        grow(cx + R, cy + R);
    }
    const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
    const double pad = 0.05 * span;
    xlo -= pad;
    ylo -= pad;
    const double scale = opt.size / (span + 2 * pad);
    auto X = [&](double x) { return (x - xlo) * scale; };
    auto Y = [&](double y) { return opt.size - (y - ylo) * scale; };

    out << std::setprecision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
        << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (Pn.dim() == 3 && opt.voronoi && Pn.size() <= opt.voronoi_site_limit) {
        VoronoiDiagram vd = build_vd(make_sites(Pn));
        for (const auto& e : vd.edges()) {
            out << "<polyline fill=\"none\" stroke=\"#9bb\" stroke-width=\"1\" points=\"";
            for (const auto& v : e.chain) out << X(to_double(v.x)) << ',' << Y(to_double(v.y)) << ' ';
            out << "\"/>\n";
        }
    }

    if (Pn.dim() >= 2) {
        auto draw_square = [&](double h, const char* stroke) {
            out << "<rect x=\"" << X(cx - h) << "\" y=\"" << Y(cy + h) << "\" width=\"" << 2 * h * scale
                << "\" height=\"" << 2 * h * scale << "\" fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"1.5\"/>\n";
        };
        draw_square(R, "#c33");
        draw_square(r, "#36c");
    }
    if (Pn.dim() == 3) {
        const Rect c = Rect::from_box(C.box);
        double x0 = to_double(c.xlo), x1 = to_double(c.xhi), y0 = to_double(c.ylo), y1 = to_double(c.yhi);
        out << "<rect x=\"" << X(x0) << "\" y=\"" << Y(y1) << "\" width=\"" << std::max((x1 - x0) * scale, 1.0)
            << "\" height=\"" << std::max((y1 - y0) * scale, 1.0) << "\" fill=\"#fd8\" fill-opacity=\"0.5\"/>\n";
    }
    for (const auto& p : Pn) {
        auto [x, y] = plane(p);
        out << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"2.5\" fill=\"#222\"/>\n";
    }
    out << "<circle cx=\"" << X(cx) << "\" cy=\"" << Y(cy) << "\" r=\"4\" fill=\"#c33\"/>\n";
    out << "</svg>\n";
}

}  // namespace cubeshell

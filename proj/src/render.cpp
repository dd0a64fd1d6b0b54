#include "chambercoh/render.hpp"

#include "chambercoh/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace chambercoh {

namespace {

struct Box {
    double x0, y0, x1, y1;
};

// Clip the line a*x + b*y + c = 0 to the box; returns false when disjoint.
bool clip_line(double a, double b, double c, const Box& box, double out[4]) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double x, double y) {
        for (auto& p : pts)
            if (std::abs(p.first - x) < 1e-9 && std::abs(p.second - y) < 1e-9) return;
        pts.emplace_back(x, y);
    };
    if (std::abs(b) > 1e-12) {
        for (double x : {box.x0, box.x1}) {
            double y = -(a * x + c) / b;
            if (y >= box.y0 - 1e-9 && y <= box.y1 + 1e-9) push(x, y);
        }
    }
    if (std::abs(a) > 1e-12) {
        for (double y : {box.y0, box.y1}) {
            double x = -(b * y + c) / a;
            if (x >= box.x0 - 1e-9 && x <= box.x1 + 1e-9) push(x, y);
        }
    }
    if (pts.size() < 2) return false;
    out[0] = pts[0].first;
    out[1] = pts[0].second;
    out[2] = pts[1].first;
    out[3] = pts[1].second;
    return true;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << (std::abs(v) < 5e-3 ? 0.0 : v);
    return out.str();
}

}  // namespace

std::string render_svg(const Arrangement& a, const ChamberSet& cs,
                       const std::optional<Flag>& flag) {
    // World box: vertices, witnesses and the flag point, padded.
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            x0 = x1 = x;
            y0 = y1 = y;
            first = false;
            return;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& p : a.intersection_points()) grow(p.x.to_double(), p.y.to_double());
    for (const auto& c : cs.all()) grow(c.wx.to_double(), c.wy.to_double());
    if (flag) grow(flag->f0x.to_double(), flag->f0y.to_double());
    double pad = std::max({x1 - x0, y1 - y0, 2.0}) * 0.25;
    Box box{x0 - pad, y0 - pad, x1 + pad, y1 + pad};

    const double W = 800, H = 800;
    double sx = W / (box.x1 - box.x0), sy = H / (box.y1 - box.y0);
    double s = std::min(sx, sy);
    auto px = [&](double x) { return (x - box.x0) * s; };
    auto py = [&](double y) { return H - (y - box.y0) * s; };  // y axis up

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (flag) {
        double fa = -flag->h2.cx.to_double(), fb = -flag->h2.cy.to_double(),
               fc = -flag->h2.c0.to_double();
        double seg[4];
        if (clip_line(fa, fb, fc, box, seg))
            svg << "<line x1=\"" << fmt(px(seg[0])) << "\" y1=\"" << fmt(py(seg[1])) << "\" x2=\""
                << fmt(px(seg[2])) << "\" y2=\"" << fmt(py(seg[3]))
                << "\" stroke=\"#888\" stroke-dasharray=\"6,4\" stroke-width=\"1.5\"/>\n";
        svg << "<circle cx=\"" << fmt(px(flag->f0x.to_double())) << "\" cy=\""
            << fmt(py(flag->f0y.to_double()))
            << "\" r=\"5\" fill=\"#888\"/>\n";
    }

    for (size_t i = 0; i < a.size(); ++i) {
        const Line& l = a.lines()[i];
        double seg[4];
        if (!clip_line(l.a.get_d(), l.b.get_d(), l.c.get_d(), box, seg)) continue;
        svg << "<line x1=\"" << fmt(px(seg[0])) << "\" y1=\"" << fmt(py(seg[1])) << "\" x2=\""
            << fmt(px(seg[2])) << "\" y2=\"" << fmt(py(seg[3]))
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt(px(seg[2]) + (seg[2] > seg[0] ? -18 : 4)) << "\" y=\""
            << fmt(py(seg[3]) - 4) << "\" font-size=\"13\" fill=\"black\">H" << i + 1
            << "</text>\n";
    }

    for (const auto& p : a.intersection_points())
        svg << "<circle cx=\"" << fmt(px(p.x.to_double())) << "\" cy=\""
            << fmt(py(p.y.to_double())) << "\" r=\"4\" fill=\"black\"/>\n";

    for (int i = 0; i < int(cs.size()); ++i) {
        const Chamber& c = cs.at(i);
        svg << "<text x=\"" << fmt(px(c.wx.to_double())) << "\" y=\""
            << fmt(py(c.wy.to_double())) << "\" font-size=\"14\" fill=\"#c00\">"
            << chamber_label(i) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace chambercoh

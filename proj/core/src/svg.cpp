#include "lam/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace lam {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    return s == "-0.0000" ? "0.0000" : s;
}

struct Canvas {
    double c, r;
    double x(const Angle& t) const { return c + r * std::cos(2 * std::numbers::pi * t.to_double()); }
    double y(const Angle& t) const { return c - r * std::sin(2 * std::numbers::pi * t.to_double()); }
};

std::string pick(const RenderOptions& o, const std::string& key, const std::string& fallback) {
    auto it = o.style.find(key);
    return it == o.style.end() ? fallback : it->second;
}

} // namespace

std::string render_svg(const LamDocument& doc, const RenderOptions& opts) {
    if (opts.width_px <= 0) throw DomainError("width_px must be positive");
    const double w = opts.width_px;
    const Canvas cv{w / 2, w * 0.45};
    const double stroke = std::max(0.5, w / 600);
    auto lit = [&](const std::string& id) {
        return std::find(opts.highlight.begin(), opts.highlight.end(), id) != opts.highlight.end();
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width_px << "\" height=\"" << opts.width_px
       << "\" viewBox=\"0 0 " << opts.width_px << ' ' << opts.width_px << "\">\n";
    os << "<circle cx=\"" << fmt(cv.c) << "\" cy=\"" << fmt(cv.c) << "\" r=\"" << fmt(cv.r)
       << "\" fill=\"none\" stroke=\"" << pick(opts, "circle", "#000000") << "\" stroke-width=\"" << fmt(stroke)
       << "\"/>\n";

    if (opts.fill_polygons) {
        for (const auto& p : doc.polygons) {
            os << "<polygon points=\"";
            for (std::size_t i = 0; i < p.size(); ++i)
                os << (i ? " " : "") << fmt(cv.x(p.vertices()[i])) << ',' << fmt(cv.y(p.vertices()[i]));
            os << "\" fill=\"" << (lit(p.str()) ? pick(opts, "highlight", "#d62728") : pick(opts, "fill", "#c6dbef"))
               << "\" stroke=\"none\"/>\n";
        }
    }
    auto line = [&](const Leaf& l, const std::string& color, const char* extra) {
        os << "<line x1=\"" << fmt(cv.x(l.first())) << "\" y1=\"" << fmt(cv.y(l.first())) << "\" x2=\""
           << fmt(cv.x(l.second())) << "\" y2=\"" << fmt(cv.y(l.second())) << "\" stroke=\"" << color
           << "\" stroke-width=\"" << fmt(stroke) << '"' << extra << "/>\n";
    };
    for (const auto& c : doc.portrait) line(c, pick(opts, "critical", "#7f7f7f"), " stroke-dasharray=\"6,4\"");
    for (const auto& x : doc.leaves) {
        std::string color = x.depth.value_or(0) == 0 ? pick(opts, "generator", "#d62728") : pick(opts, "pullback", "#1f77b4");
        if (lit(x.leaf.str())) color = pick(opts, "highlight", "#ff7f0e");
        line(x.leaf, color, "");
    }
    if (opts.draw_labels) {
        std::set<Angle> pts;
        for (const auto& x : doc.leaves)
            if (x.depth.value_or(0) == 0) pts.insert({x.leaf.first(), x.leaf.second()});
        const Canvas outer{cv.c, cv.r * 1.08};
        for (const auto& t : pts)
            os << "<text x=\"" << fmt(outer.x(t)) << "\" y=\"" << fmt(outer.y(t))
               << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\""
               << pick(opts, "label", "#000000") << "\">" << t.str() << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const Lamination& l, const RenderOptions& opts) { return render_svg(document_from(l), opts); }

} // namespace lam

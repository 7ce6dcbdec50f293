#include "bookcross/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "bookcross/error.hpp"

namespace bookcross {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Point {
    double x;
    double y;
};

}  // namespace

std::string render_svg(const BookDrawing& drawing, const RenderSpec& spec) {
    if (spec.columns < 1 || spec.radius <= 0.0) throw InputError("render spec needs columns >= 1 and radius > 0");
    const auto& layout = drawing.layout();
    const int pages = drawing.k();
    const int columns = std::min(spec.columns, pages);
    const int rows = (pages + columns - 1) / columns;
    const double cell = 2.0 * (spec.radius + spec.margin);
    const double header = 30.0;
    const double width = cell * columns;
    const double height = cell * rows + header;

    // position p sits at angle -90deg + 360deg * p / N, clockwise on screen
    std::vector<Point> unit(static_cast<std::size_t>(layout.size()));
    for (int p = 0; p < layout.size(); ++p) {
        const double theta = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * p / layout.size();
        unit[static_cast<std::size_t>(p)] = {std::cos(theta), std::sin(theta)};
    }

    std::vector<std::vector<Edge>> by_page(static_cast<std::size_t>(pages));
    for (int i = 0; i < drawing.m(); ++i)
        for (int j = 0; j < drawing.n(); ++j) by_page[static_cast<std::size_t>(drawing.page({i, j}))].push_back({i, j});

    const auto report = count_crossings(drawing);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out << "<style>\n"
           "  .spine { fill: none; stroke: #999999; stroke-width: 1; }\n"
           "  .edge { stroke: #1f4e79; stroke-width: 1.2; }\n"
           "  .edge.crossed { stroke: #c0392b; stroke-width: 1.6; }\n"
           "  .black { fill: #000000; stroke: #000000; stroke-width: 1; }\n"
           "  .white { fill: #ffffff; stroke: #000000; stroke-width: 1.2; }\n"
           "  .label { font-family: sans-serif; font-size: 9px; fill: #333333; }\n"
           "  .title { font-family: sans-serif; font-size: 13px; fill: #000000; }\n"
           "</style>\n";
    out << "<text class=\"title\" x=\"10\" y=\"20\">K(" << drawing.m() << "," << drawing.n() << "), " << pages
        << (pages == 1 ? " page" : " pages") << ", " << report.total << " crossings</text>\n";

    for (int page = 0; page < pages; ++page) {
        const double cx = cell * (page % columns) + cell / 2.0;
        const double cy = header + cell * (page / columns) + cell / 2.0;
        auto at = [&](int position) {
            const auto& u = unit[static_cast<std::size_t>(position)];
            return Point{cx + spec.radius * u.x, cy + spec.radius * u.y};
        };

        const auto& edges = by_page[static_cast<std::size_t>(page)];
        std::vector<bool> crossed(edges.size(), false);
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
                if (edges_cross(layout, edges[a], edges[b])) crossed[a] = crossed[b] = true;

        out << "<g id=\"page" << page << "\">\n";
        out << "  <circle class=\"spine\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(spec.radius)
            << "\"/>\n";
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto p = at(layout.black_position(edges[e].black));
            const auto q = at(layout.white_position(edges[e].white));
            out << "  <line class=\"edge" << (crossed[e] ? " crossed" : "") << "\" x1=\"" << num(p.x) << "\" y1=\""
                << num(p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y) << "\"/>\n";
        }
        for (int pos = 0; pos < layout.size(); ++pos) {
            const auto& v = layout.at(pos);
            const auto p = at(pos);
            out << "  <circle class=\"" << (v.color == Color::black ? "black" : "white") << "\" cx=\"" << num(p.x)
                << "\" cy=\"" << num(p.y) << "\" r=\"" << num(spec.vertex_radius) << "\"/>\n";
            if (spec.labels) {
                const auto& u = unit[static_cast<std::size_t>(pos)];
                const double lr = spec.radius + spec.vertex_radius + 8.0;
                out << "  <text class=\"label\" x=\"" << num(cx + lr * u.x - 6.0) << "\" y=\"" << num(cy + lr * u.y + 3.0)
                    << "\">" << v.token() << "</text>\n";
            }
        }
        out << "  <text class=\"title\" x=\"" << num(cx - spec.radius) << "\" y=\""
            << num(cy + spec.radius + spec.margin * 0.75) << "\">page " << page << ": "
            << report.per_page[static_cast<std::size_t>(page)] << " crossings</text>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace bookcross

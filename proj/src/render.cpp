#include "hyperplan/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace hyperplan {

namespace {

std::string num(double v) {
    if (std::abs(v) < 5e-4) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string_view fill_for(RoomProgram p) {
    switch (p) {
        case RoomProgram::living: return "#f4d58d";
        case RoomProgram::bedroom: return "#a8c5e2";
        case RoomProgram::kitchen: return "#f2a07b";
        case RoomProgram::bath: return "#9ed8c6";
        case RoomProgram::extra: return "#d5c3e8";
        case RoomProgram::foyer: return "#e6e6e6";
    }
    return "#ffffff";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Plan coordinates have y up; SVG has y down.
struct View {
    double min_x = 0.0;
    double max_y = 0.0;
    double scale = 40.0;
    double margin = 20.0;

    double x(double v) const { return margin + (v - min_x) * scale; }
    double y(double v) const { return margin + (max_y - v) * scale; }
    std::string pt(Point2 p) const { return num(x(p.x)) + "," + num(y(p.y)); }
};

template <class Range>
std::string points_attr(const View& view, const Range& pts) {
    std::string out;
    for (const Point2& p : pts) {
        if (!out.empty()) out += ' ';
        out += view.pt(p);
    }
    return out;
}

}  // namespace

std::string render_plan_svg(const FloorPlan& plan, std::span<const Placement> furniture) {
    double min_x = INFINITY, max_x = -INFINITY, min_y = INFINITY, max_y = -INFINITY;
    for (const Point2& p : plan.boundary.vertices()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const View view{min_x, max_y};
    const double width = 2 * view.margin + (max_x - min_x) * view.scale;
    const double height = 2 * view.margin + (max_y - min_y) * view.scale;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    s << "<title>" << escape(plan.id) << "</title>\n";
    s << "<g id=\"rooms\" stroke=\"#333333\" stroke-width=\"2\">\n";
    for (const Room& r : plan.rooms) {
        s << "<polygon id=\"room-" << escape(r.id) << "\" class=\"" << program_name(r.program) << "\" fill=\""
          << fill_for(r.program) << "\" points=\"" << points_attr(view, r.polygon.vertices()) << "\"/>\n";
    }
    s << "</g>\n";
    s << "<polygon id=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\" points=\""
      << points_attr(view, plan.boundary.vertices()) << "\"/>\n";
    s << "<g id=\"facade\" stroke=\"#2b6cb0\" stroke-width=\"6\">\n";
    for (const Segment& f : plan.facade_edges) {
        s << "<line x1=\"" << num(view.x(f.a.x)) << "\" y1=\"" << num(view.y(f.a.y)) << "\" x2=\"" << num(view.x(f.b.x))
          << "\" y2=\"" << num(view.y(f.b.y)) << "\"/>\n";
    }
    s << "</g>\n";
    s << "<g id=\"circulation\" stroke=\"#c53030\" stroke-width=\"6\" stroke-dasharray=\"8 4\">\n";
    for (const Segment& c : plan.circulation_edges) {
        s << "<line x1=\"" << num(view.x(c.a.x)) << "\" y1=\"" << num(view.y(c.a.y)) << "\" x2=\"" << num(view.x(c.b.x))
          << "\" y2=\"" << num(view.y(c.b.y)) << "\"/>\n";
    }
    s << "</g>\n";
    // Doors are painted as gaps over the walls.
    s << "<g id=\"doors\" stroke=\"#ffffff\" stroke-width=\"7\">\n";
    for (const Door& d : plan.doors) {
        s << "<line class=\"" << (d.is_entrance() ? "entrance" : "door") << "\" x1=\"" << num(view.x(d.segment.a.x))
          << "\" y1=\"" << num(view.y(d.segment.a.y)) << "\" x2=\"" << num(view.x(d.segment.b.x)) << "\" y2=\""
          << num(view.y(d.segment.b.y)) << "\"/>\n";
    }
    s << "</g>\n";
    if (!furniture.empty()) {
        s << "<g id=\"furniture\" fill=\"none\">\n";
        for (const Placement& p : furniture) {
            s << "<polygon class=\"clearance\" stroke=\"#718096\" stroke-width=\"1\" stroke-dasharray=\"3 3\" points=\""
              << points_attr(view, p.circulation) << "\"/>\n";
            s << "<polygon class=\"block\" stroke=\"#1a202c\" stroke-width=\"1.5\" points=\""
              << points_attr(view, p.footprint) << "\"><title>" << escape(p.block) << "</title></polygon>\n";
        }
        s << "</g>\n";
    }
    s << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (const Room& r : plan.rooms) {
        const Point2 c = centroid(r.polygon);
        s << "<text x=\"" << num(view.x(c.x)) << "\" y=\"" << num(view.y(c.y)) << "\">" << escape(r.id) << "</text>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

std::string render_hypergraph_svg(const Hypergraph& hg) {
    struct Laid {
        const SubdivNode* node;
        double x;
        int depth;
    };
    std::vector<Laid> laid;
    std::vector<std::pair<std::size_t, std::size_t>> links;
    int leaf_count = 0;
    int max_depth = 0;
    std::function<std::size_t(const SubdivNode&, int)> place = [&](const SubdivNode& n, int depth) {
        max_depth = std::max(max_depth, depth);
        if (n.is_leaf()) {
            laid.push_back({&n, static_cast<double>(leaf_count++), depth});
            return laid.size() - 1;
        }
        const std::size_t a = place(n.children[0], depth + 1);
        const std::size_t b = place(n.children[1], depth + 1);
        laid.push_back({&n, 0.5 * (laid[a].x + laid[b].x), depth});
        links.emplace_back(laid.size() - 1, a);
        links.emplace_back(laid.size() - 1, b);
        return laid.size() - 1;
    };
    place(hg.root, 0);

    const double dx = 90.0;
    const double dy = 70.0;
    const double margin = 50.0;
    const double leaf_row = margin + max_depth * dy;
    auto px = [&](double x) { return margin + x * dx; };
    auto py = [&](int depth) { return margin + depth * dy; };

    std::map<std::string, double> leaf_x;
    for (const Laid& l : laid) {
        if (l.node->is_leaf()) leaf_x[l.node->room_id] = px(l.x);
    }
    double arc_depth = 0.0;
    for (const auto& [a, b] : hg.access_edges) arc_depth = std::max(arc_depth, std::abs(leaf_x[a] - leaf_x[b]) / 2.0);

    const double width = 2 * margin + std::max(0, leaf_count - 1) * dx;
    const double height = leaf_row + margin + arc_depth + 20.0;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    s << "<title>" << escape(hg.id) << (hg.source.mirrored ? " (mirrored)" : "") << "</title>\n";
    s << "<g id=\"tree\" stroke=\"#4a5568\" stroke-width=\"1.5\">\n";
    for (const auto& [p, c] : links) {
        s << "<line x1=\"" << num(px(laid[p].x)) << "\" y1=\"" << num(py(laid[p].depth)) << "\" x2=\""
          << num(px(laid[c].x)) << "\" y2=\"" << num(py(laid[c].depth)) << "\"/>\n";
    }
    s << "</g>\n";
    s << "<g id=\"access\" fill=\"none\" stroke=\"#c53030\" stroke-width=\"1.5\">\n";
    for (const auto& [a, b] : hg.access_edges) {
        const double x1 = std::min(leaf_x[a], leaf_x[b]);
        const double x2 = std::max(leaf_x[a], leaf_x[b]);
        const double r = (x2 - x1) / 2.0;
        const double y = leaf_row + 14.0;
        s << "<path d=\"M " << num(x1) << ' ' << num(y) << " A " << num(r) << ' ' << num(r) << " 0 0 0 " << num(x2)
          << ' ' << num(y) << "\"/>\n";
    }
    s << "</g>\n";
    s << "<g id=\"nodes\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (const Laid& l : laid) {
        const double x = px(l.x);
        const double y = py(l.depth);
        if (l.node->is_leaf()) {
            const bool entrance = l.node->room_id == hg.entrance_room;
            s << "<rect x=\"" << num(x - 30) << "\" y=\"" << num(y - 12) << "\" width=\"60\" height=\"24\" fill=\""
              << fill_for(*l.node->program) << "\" stroke=\"" << (entrance ? "#c53030" : "#333333")
              << "\" stroke-width=\"" << (entrance ? "3" : "1") << "\"/>\n";
            s << "<text x=\"" << num(x) << "\" y=\"" << num(y + 4) << "\">" << escape(l.node->room_id) << "</text>\n";
        } else {
            s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"14\" fill=\"#ffffff\" stroke=\"#333333\"/>\n";
            s << "<text x=\"" << num(x) << "\" y=\"" << num(y + 4) << "\">" << num(l.node->angle * 180.0 / std::numbers::pi)
              << "</text>\n";
        }
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace hyperplan

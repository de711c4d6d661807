#include "hyperplan/geometry.hpp"

#include "hyperplan/error.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include <algorithm>
#include <limits>
#include <set>

namespace hyperplan {

namespace {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, false, true>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;

constexpr double kCollinearTol = 1e-9;

bool remove_one_redundant(std::vector<Point2>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (coincident(v[i], v[j])) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
            return true;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = v[(i + n - 1) % n];
        const Point2 next = v[(i + 1) % n];
        const Point2 e = next - prev;
        const double len = norm(e);
        // A vertex whose neighbours coincide is the tip of a zero-width spike.
        const bool redundant = len < kEpsPoint || std::abs(cross(e, v[i] - prev)) / len < kCollinearTol;
        if (redundant) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
    }
    return false;
}

std::vector<Point2> normalize_ring(std::vector<Point2> v) {
    for (const Point2& p : v) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorCode::InvalidPolygon, "non-finite coordinate");
        }
    }
    if (v.size() >= 2 && coincident(v.front(), v.back())) v.pop_back();
    while (v.size() >= 3 && remove_one_redundant(v)) {
    }
    if (v.size() < 3) throw Error(ErrorCode::DegenerateGeometry, "fewer than 3 distinct vertices");
    const double a = signed_area(v);
    if (std::abs(a) < kEpsArea) throw Error(ErrorCode::DegenerateGeometry, "ring has no area");
    if (a < 0) std::reverse(v.begin(), v.end());
    const auto first = std::min_element(v.begin(), v.end(), [](Point2 p, Point2 q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    std::rotate(v.begin(), first, v.end());
    return v;
}

bool segments_cross(const Segment& s, const Segment& t) {
    const double o1 = cross(s.b - s.a, t.a - s.a);
    const double o2 = cross(s.b - s.a, t.b - s.a);
    const double o3 = cross(t.b - t.a, s.a - t.a);
    const double o4 = cross(t.b - t.a, s.b - t.a);
    return ((o1 < 0 && o2 > 0) || (o1 > 0 && o2 < 0)) && ((o3 < 0 && o4 > 0) || (o3 > 0 && o4 < 0));
}

// Crossing-number test with no boundary tolerance.
bool crossing_inside(std::span<const Point2> ring, Point2 q) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = ring[i];
        const Point2 b = ring[j];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double x = (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x;
            if (q.x < x) inside = !inside;
        }
    }
    return inside;
}

BPolygon to_boost(const Polygon& p) {
    BPolygon out;
    for (const Point2& v : p.vertices()) out.outer().emplace_back(v.x, v.y);
    out.outer().emplace_back(p[0].x, p[0].y);
    return out;
}

std::vector<Point2> from_boost_ring(const BPolygon::ring_type& ring) {
    std::vector<Point2> out;
    out.reserve(ring.size());
    for (const BPoint& q : ring) out.push_back({q.x(), q.y()});
    return out;
}

struct RingNode {
    Point2 p;
    double s = 0.0;  // signed distance to the cut, snapped to 0 near it
};

struct DirectedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
};

// Follows each directed edge to the outgoing edge with the sharpest left turn,
// which separates pieces that touch at a single vertex.
std::vector<std::vector<Point2>> trace_faces(const std::vector<RingNode>& nodes,
                                             const std::vector<DirectedEdge>& edges) {
    std::vector<std::vector<std::size_t>> outgoing(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) outgoing[edges[e].from].push_back(e);

    auto successor = [&](std::size_t e) -> std::optional<std::size_t> {
        const std::size_t v = edges[e].to;
        const Point2 din = nodes[v].p - nodes[edges[e].from].p;
        std::optional<std::size_t> best;
        double best_turn = -std::numeric_limits<double>::infinity();
        for (std::size_t cand : outgoing[v]) {
            const Point2 dout = nodes[edges[cand].to].p - nodes[v].p;
            const double turn = std::atan2(cross(din, dout), dot(din, dout));
            if (turn > best_turn) {
                best_turn = turn;
                best = cand;
            }
        }
        return best;
    };

    std::vector<bool> used(edges.size(), false);
    std::vector<std::vector<Point2>> faces;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (used[start]) continue;
        std::vector<Point2> face;
        std::size_t e = start;
        for (std::size_t guard = 0; guard <= edges.size(); ++guard) {
            used[e] = true;
            face.push_back(nodes[edges[e].from].p);
            const auto next = successor(e);
            if (!next || *next == start || used[*next]) break;
            e = *next;
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(normalize_ring(std::move(vertices))) {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segment_distance(edge(i), edge(j)) < kEpsPoint) {
                throw Error(ErrorCode::InvalidPolygon, "ring self-intersects");
            }
        }
    }
}

Polygon::Polygon(std::vector<Point2> vertices, Trusted) : vertices_(normalize_ring(std::move(vertices))) {}

Polygon Polygon::from_trusted(std::vector<Point2> vertices) { return Polygon(std::move(vertices), Trusted{}); }

Polygon Polygon::rectangle(double x0, double y0, double x1, double y1) {
    return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

CutLine CutLine::through(double angle, Point2 p) {
    CutLine cut{normalize_angle(angle), 0.0};
    cut.offset = dot(p, cut.normal());
    return cut;
}

double normalize_angle(double angle) {
    double a = std::fmod(angle, std::numbers::pi);
    if (a < 0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
}

double signed_area(std::span<const Point2> ring) {
    double twice = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) twice += cross(ring[i], ring[(i + 1) % n]);
    return 0.5 * twice;
}

double polygon_area(const Polygon& p) {
    const double a = signed_area(p.vertices());
    if (a < kEpsArea) throw Error(ErrorCode::DegenerateGeometry, "area below tolerance");
    return a;
}

double polygon_perimeter(const Polygon& p) {
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p.edge(i).length();
    return total;
}

Point2 centroid(const Polygon& p) {
    double cx = 0.0;
    double cy = 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point2 a = p[i];
        const Point2 b = p[(i + 1) % p.size()];
        const double c = cross(a, b);
        twice += c;
        cx += (a.x + b.x) * c;
        cy += (a.y + b.y) * c;
    }
    return {cx / (3.0 * twice), cy / (3.0 * twice)};
}

std::pair<double, double> projection_range(const Polygon& p, Point2 axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point2& v : p.vertices()) {
        const double t = dot(v, axis);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return {lo, hi};
}

double point_segment_distance(Point2 q, const Segment& s) {
    const Point2 e = s.b - s.a;
    const double len2 = dot(e, e);
    if (len2 == 0.0) return distance(q, s.a);
    const double t = std::clamp(dot(q - s.a, e) / len2, 0.0, 1.0);
    return distance(q, s.a + t * e);
}

double segment_distance(const Segment& s, const Segment& t) {
    if (segments_cross(s, t)) return 0.0;
    return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t), point_segment_distance(t.a, s),
                     point_segment_distance(t.b, s)});
}

double distance_to_boundary(const Polygon& p, Point2 q) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) best = std::min(best, point_segment_distance(q, p.edge(i)));
    return best;
}

bool contains_point(const Polygon& p, Point2 q) {
    return distance_to_boundary(p, q) < kEpsPoint || crossing_inside(p.vertices(), q);
}

bool strictly_contains(const Polygon& p, Point2 q) {
    return distance_to_boundary(p, q) >= kEpsPoint && crossing_inside(p.vertices(), q);
}

std::optional<Segment> collinear_overlap(const Segment& s, const Segment& t, double tol) {
    const double len = s.length();
    if (len < kEpsPoint || t.length() < kEpsPoint) return std::nullopt;
    const Point2 u = (1.0 / len) * (s.b - s.a);
    if (std::abs(cross(u, t.a - s.a)) > tol || std::abs(cross(u, t.b - s.a)) > tol) return std::nullopt;
    const double ta = dot(t.a - s.a, u);
    const double tb = dot(t.b - s.a, u);
    const double lo = std::max(0.0, std::min(ta, tb));
    const double hi = std::min(len, std::max(ta, tb));
    if (hi - lo < kEpsPoint) return std::nullopt;
    return Segment{s.a + lo * u, s.a + hi * u};
}

SplitResult split_by_line(const Polygon& p, const CutLine& cut) {
    const Point2 n = cut.normal();
    const Point2 d = cut.direction();
    const auto verts = p.vertices();
    const std::size_t m = verts.size();

    std::vector<double> s(m);
    bool below = false;
    bool above = false;
    for (std::size_t i = 0; i < m; ++i) {
        s[i] = dot(verts[i], n) - cut.offset;
        if (std::abs(s[i]) <= kOnLineTol) s[i] = 0.0;
        below = below || s[i] < 0;
        above = above || s[i] > 0;
    }
    if (!below || !above) throw Error(ErrorCode::SplitEmpty, "cut does not cross the polygon");

    std::vector<RingNode> nodes;
    nodes.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        nodes.push_back({verts[i], s[i]});
        if (s[i] * s[j] < 0) {
            const double t = s[i] / (s[i] - s[j]);
            nodes.push_back({verts[i] + t * (verts[j] - verts[i]), 0.0});
        }
    }

    const std::size_t k = nodes.size();
    std::vector<DirectedEdge> lower;
    std::vector<DirectedEdge> upper;
    std::set<std::pair<std::size_t, std::size_t>> boundary_on_line;
    for (std::size_t a = 0; a < k; ++a) {
        const std::size_t b = (a + 1) % k;
        const double sa = nodes[a].s;
        const double sb = nodes[b].s;
        if (sa < 0 || sb < 0) {
            lower.push_back({a, b});
        } else if (sa > 0 || sb > 0) {
            upper.push_back({a, b});
        } else {
            // Edge on the cut: the interior lies to its left.
            const Point2 e = nodes[b].p - nodes[a].p;
            const Point2 left{-e.y, e.x};
            (dot(left, n) > 0 ? upper : lower).push_back({a, b});
            boundary_on_line.insert(std::minmax(a, b));
        }
    }

    std::vector<std::size_t> on_line;
    for (std::size_t a = 0; a < k; ++a) {
        if (nodes[a].s == 0.0) on_line.push_back(a);
    }
    std::sort(on_line.begin(), on_line.end(),
              [&](std::size_t a, std::size_t b) { return dot(nodes[a].p, d) < dot(nodes[b].p, d); });
    for (std::size_t q = 0; q + 1 < on_line.size(); ++q) {
        const std::size_t a = on_line[q];
        const std::size_t b = on_line[q + 1];
        if (boundary_on_line.count(std::minmax(a, b)) != 0) continue;
        if (!crossing_inside(verts, 0.5 * (nodes[a].p + nodes[b].p))) continue;
        lower.push_back({b, a});
        upper.push_back({a, b});
    }

    auto collect = [&](const std::vector<DirectedEdge>& edges) {
        std::vector<std::vector<Point2>> faces;
        for (auto& face : trace_faces(nodes, edges)) {
            if (face.size() >= 3 && std::abs(signed_area(face)) >= kEpsArea) faces.push_back(std::move(face));
        }
        return faces;
    };
    auto lower_faces = collect(lower);
    auto upper_faces = collect(upper);
    if (lower_faces.empty() || upper_faces.empty()) {
        throw Error(ErrorCode::SplitEmpty, "cut leaves one side empty");
    }
    if (lower_faces.size() > 1 || upper_faces.size() > 1) {
        throw Error(ErrorCode::SplitDisconnected, "cut yields " + std::to_string(lower_faces.size()) + "+" +
                                                      std::to_string(upper_faces.size()) + " pieces");
    }
    return {Polygon::from_trusted(std::move(lower_faces.front())),
            Polygon::from_trusted(std::move(upper_faces.front()))};
}

double lower_area(const Polygon& p, const CutLine& cut) {
    const Point2 n = cut.normal();
    const auto verts = p.vertices();
    const std::size_t m = verts.size();
    std::vector<Point2> clipped;
    clipped.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        const double si = dot(verts[i], n) - cut.offset;
        const double sj = dot(verts[j], n) - cut.offset;
        if (si <= 0) clipped.push_back(verts[i]);
        if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
            clipped.push_back(verts[i] + (si / (si - sj)) * (verts[j] - verts[i]));
        }
    }
    if (clipped.size() < 3) return 0.0;
    return std::max(0.0, signed_area(clipped));
}

RatioSplit split_at_ratio(const Polygon& p, double angle, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw Error(ErrorCode::RatioSplitInfeasible, "ratio must lie in (0, 1)");
    }
    const double a = normalize_angle(angle);
    const CutLine probe{a, 0.0};
    auto [lo, hi] = projection_range(p, probe.normal());
    const double target = ratio * polygon_area(p);

    // Bisect to machine precision; the 200-step cap is never reached in practice.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (lower_area(p, {a, mid}) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const CutLine cut{a, 0.5 * (lo + hi)};
    const double total = polygon_area(p);
    if (std::abs(lower_area(p, cut) - target) > kRelAreaTol * total) {
        throw Error(ErrorCode::RatioSplitInfeasible, "bisection did not reach the target area");
    }
    try {
        auto halves = split_by_line(p, cut);
        return {std::move(halves.lower), std::move(halves.upper), cut.offset};
    } catch (const Error& e) {
        throw Error(ErrorCode::RatioSplitInfeasible, std::string(error_code_name(e.code())) + " at ratio " +
                                                         std::to_string(ratio));
    }
}

std::vector<Polygon> inward_offset(const Polygon& p, double d) {
    if (d < 0) throw Error(ErrorCode::InvalidRecord, "negative offset distance");
    if (d == 0) return {p};
    namespace buf = bg::strategy::buffer;
    BMultiPolygon out;
    bg::buffer(to_boost(p), out, buf::distance_symmetric<double>(-d), buf::side_straight(), buf::join_round(72),
               buf::end_flat(), buf::point_circle(72));
    std::vector<Polygon> pieces;
    for (const BPolygon& piece : out) {
        if (bg::area(piece) < kEpsArea) continue;
        try {
            pieces.push_back(Polygon::from_trusted(from_boost_ring(piece.outer())));
        } catch (const Error&) {
            // sliver below tolerance
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Polygon& a, const Polygon& b) {
        return std::pair(a[0].x, a[0].y) < std::pair(b[0].x, b[0].y);
    });
    return pieces;
}

std::vector<Polygon> subtract(const Polygon& p, const Polygon& q) {
    BMultiPolygon out;
    bg::difference(to_boost(p), to_boost(q), out);
    std::vector<Polygon> pieces;
    for (const BPolygon& piece : out) {
        if (bg::area(piece) < kEpsArea) continue;
        for (const auto& inner : piece.inners()) {
            if (std::abs(bg::area(inner)) >= kEpsArea) {
                throw Error(ErrorCode::HoleProduced, "subtrahend lies strictly inside");
            }
        }
        try {
            pieces.push_back(Polygon::from_trusted(from_boost_ring(piece.outer())));
        } catch (const Error&) {
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Polygon& a, const Polygon& b) {
        return std::pair(a[0].x, a[0].y) < std::pair(b[0].x, b[0].y);
    });
    return pieces;
}

double intersection_area(const Polygon& p, const Polygon& q) {
    BMultiPolygon out;
    bg::intersection(to_boost(p), to_boost(q), out);
    return bg::area(out);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point2& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double convexity(const Polygon& p) {
    const auto verts = p.vertices();
    const auto hull = convex_hull({verts.begin(), verts.end()});
    return polygon_area(p) / signed_area(hull);
}

CaliperBox min_caliper(const Polygon& p) {
    const auto verts = p.vertices();
    const auto hull = convex_hull({verts.begin(), verts.end()});
    CaliperBox best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2 a = hull[i];
        const Point2 e = hull[(i + 1) % hull.size()] - a;
        const double len = norm(e);
        if (len < kEpsPoint) continue;
        const Point2 u = (1.0 / len) * e;
        double width = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const Point2& q : hull) {
            width = std::max(width, cross(u, q - a));
            lo = std::min(lo, dot(u, q - a));
            hi = std::max(hi, dot(u, q - a));
        }
        if (width < best.width) best = {width, hi - lo, std::atan2(u.y, u.x)};
    }
    return best;
}

namespace {

template <class Fn>
Polygon map_vertices(const Polygon& p, Fn fn) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const Point2& v : p.vertices()) out.push_back(fn(v));
    return Polygon::from_trusted(std::move(out));
}

}  // namespace

Polygon rotated(const Polygon& p, double angle, Point2 about) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return map_vertices(p, [&](Point2 v) {
        const Point2 r = v - about;
        return Point2{about.x + c * r.x - s * r.y, about.y + s * r.x + c * r.y};
    });
}

Polygon translated(const Polygon& p, Point2 delta) {
    return map_vertices(p, [&](Point2 v) { return v + delta; });
}

Polygon scaled(const Polygon& p, double factor, Point2 about) {
    return map_vertices(p, [&](Point2 v) { return about + factor * (v - about); });
}

Polygon mirrored_x(const Polygon& p) {
    return map_vertices(p, [](Point2 v) { return Point2{-v.x, v.y}; });
}

bool same_ring(const Polygon& a, const Polygon& b, double tol) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        if (distance(a[0], b[shift]) > tol) continue;
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) all = distance(a[i], b[(i + shift) % n]) <= tol;
        if (all) return true;
    }
    return false;
}

}  // namespace hyperplan

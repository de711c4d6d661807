#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hyperplan {

// Two points closer than this are the same point.
inline constexpr double kEpsPoint = 1e-6;
// Rings with less area than this are degenerate.
inline constexpr double kEpsArea = 1e-9;
// Relative area tolerance for ratio-targeted splits.
inline constexpr double kRelAreaTol = 1e-6;
// Vertices closer than this to a cut line are treated as lying on it.
inline constexpr double kOnLineTol = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool coincident(Point2 a, Point2 b) { return distance(a, b) < kEpsPoint; }

struct Segment {
    Point2 a;
    Point2 b;

    double length() const { return distance(a, b); }
    Point2 midpoint() const { return 0.5 * (a + b); }
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Simple ring without holes, counter-clockwise, starting at the
// lexicographically smallest vertex, with coincident and collinear vertices
// removed. Construction validates and normalizes; two polygons describing
// the same ring compare equal up to floating-point noise.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    static Polygon rectangle(double x0, double y0, double x1, double y1);
    // Normalizes without the O(n^2) simplicity check; for rings produced by
    // the library's own operations.
    static Polygon from_trusted(std::vector<Point2> vertices);

    std::span<const Point2> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }
    Segment edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    struct Trusted {};
    Polygon(std::vector<Point2> vertices, Trusted);

    std::vector<Point2> vertices_;
};

// A straight line {p : p . n == offset} with n = (-sin a, cos a).
struct CutLine {
    double angle = 0.0;
    double offset = 0.0;

    Point2 normal() const { return {-std::sin(angle), std::cos(angle)}; }
    Point2 direction() const { return {std::cos(angle), std::sin(angle)}; }

    // Line through `p` at `angle`; the angle is normalized to [0, pi).
    static CutLine through(double angle, Point2 p);
};

double normalize_angle(double angle);  // into [0, pi)
double signed_area(std::span<const Point2> ring);

double polygon_area(const Polygon& p);
double polygon_perimeter(const Polygon& p);
Point2 centroid(const Polygon& p);
std::pair<double, double> projection_range(const Polygon& p, Point2 axis);

bool contains_point(const Polygon& p, Point2 q);  // closed set, boundary within kEpsPoint
bool strictly_contains(const Polygon& p, Point2 q);
double point_segment_distance(Point2 q, const Segment& s);
double segment_distance(const Segment& s, const Segment& t);
double distance_to_boundary(const Polygon& p, Point2 q);

// Part of `t` that lies on `s`, if the two are collinear within `tol` and
// overlap with positive length.
std::optional<Segment> collinear_overlap(const Segment& s, const Segment& t, double tol = kEpsPoint);

struct SplitResult {
    Polygon lower;
    Polygon upper;
};

// lower = P n {p . n <= offset}, upper = the rest. Throws SplitEmpty when
// one side is empty and SplitDisconnected when a side has several pieces.
SplitResult split_by_line(const Polygon& p, const CutLine& cut);

// Area of P n {p . n <= offset}; defined for every offset, never throws.
double lower_area(const Polygon& p, const CutLine& cut);

struct RatioSplit {
    Polygon first;
    Polygon second;
    double offset = 0.0;
};

// Cut at `angle` placed so that the lower side holds `ratio` of the area.
// Throws RatioSplitInfeasible if that cut disconnects either side.
RatioSplit split_at_ratio(const Polygon& p, double angle, double ratio);

// Erosion of P by d. Empty when P is thinner than 2d everywhere.
std::vector<Polygon> inward_offset(const Polygon& p, double d);

// P \ Q as hole-free pieces; throws HoleProduced when Q punches a hole.
std::vector<Polygon> subtract(const Polygon& p, const Polygon& q);

double intersection_area(const Polygon& p, const Polygon& q);

std::vector<Point2> convex_hull(std::vector<Point2> points);
// area(P) / area(hull(P)); diagnostic only.
double convexity(const Polygon& p);

// Narrowest caliper over hull edge directions and the extent across it.
struct CaliperBox {
    double width = 0.0;
    double length = 0.0;
    double angle = 0.0;

    double aspect() const { return length > width ? length / width : width / length; }
};
CaliperBox min_caliper(const Polygon& p);

Polygon rotated(const Polygon& p, double angle, Point2 about = {});
Polygon translated(const Polygon& p, Point2 delta);
Polygon scaled(const Polygon& p, double factor, Point2 about = {});
Polygon mirrored_x(const Polygon& p);  // x -> -x

// Same ring up to start vertex, vertex by vertex within tol.
bool same_ring(const Polygon& a, const Polygon& b, double tol = kEpsPoint);

}  // namespace hyperplan

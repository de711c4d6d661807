#pragma once

// Reference implementations used to check the library. They share no code
// with it beyond the plain data types.

#include "hyperplan/furnishing.hpp"
#include "hyperplan/geometry.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace oracle {

using hyperplan::Point2;

// Cyclic Jacobi rotations on a dense symmetric matrix. Returns eigenvalues
// (descending) and the matching eigenvectors as columns.
struct Eigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;  // vectors[k] is the k-th eigenvector
};

inline Eigen jacobi_eigen(std::vector<std::vector<double>> a, double tol = 1e-14, int max_sweeps = 100) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < tol * tol) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });
    Eigen out;
    for (std::size_t k : order) {
        out.values.push_back(a[k][k]);
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

// Crossing-number point test, independent of the library's predicate.
inline bool inside(std::span<const Point2> ring, Point2 q) {
    bool in = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        const Point2 a = ring[i];
        const Point2 b = ring[j];
        if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
    return in;
}

struct MonteCarloArea {
    double area = 0.0;
    double sigma = 0.0;
};

// Area of `target` by point counting inside the bounding box of `frame`.
inline MonteCarloArea monte_carlo_area(std::span<const Point2> frame, std::span<const Point2> target,
                                       std::size_t samples, std::mt19937_64& rng) {
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    for (const Point2& p : frame) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (inside(target, {ux(rng), uy(rng)})) ++hits;
    }
    const double box = (x1 - x0) * (y1 - y0);
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {p * box, box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

// Random convex polygon: sorted angles on a random ellipse.
inline std::vector<Point2> random_convex(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> rad(2.0, 8.0);
    std::uniform_real_distribution<double> off(-5.0, 5.0);
    const double rx = rad(rng), ry = rad(rng), tilt = ang(rng), cx = off(rng), cy = off(rng);
    std::vector<double> t(n);
    for (double& v : t) v = ang(rng);
    std::sort(t.begin(), t.end());
    std::vector<Point2> pts;
    for (double v : t) {
        const double x = rx * std::cos(v), y = ry * std::sin(v);
        pts.push_back({cx + x * std::cos(tilt) - y * std::sin(tilt), cy + x * std::sin(tilt) + y * std::cos(tilt)});
    }
    return pts;
}

// Random simple polygon: star-shaped around the origin.
inline std::vector<Point2> random_star(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> rad(1.0, 5.0);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5 + jitter(rng)) * 2.0 * std::numbers::pi / static_cast<double>(n);
        const double r = rad(rng);
        pts.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return pts;
}

// Furniture placement checks on Boost.Geometry, with the zone rules spelled
// out directly: footprint and clearance inside the room, footprints clear of
// door zones, no footprint touching another block's footprint or clearance.
namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPoly = bg::model::polygon<BPoint, false, false>;  // counter-clockwise, open

inline BPoly to_boost(std::span<const Point2> ring) {
    BPoly p;
    for (const Point2& q : ring) bg::append(p.outer(), BPoint(q.x, q.y));
    bg::correct(p);
    return p;
}

inline double overlap_area(const BPoly& a, const BPoly& b) {
    std::vector<BPoly> out;
    bg::intersection(a, b, out);
    double area = 0.0;
    for (const BPoly& p : out) area += std::abs(bg::area(p));
    return area;
}

inline bool covered(const BPoly& room, const BPoly& q, double tol = 1e-6) {
    return std::abs(bg::area(q)) - overlap_area(room, q) <= tol;
}

struct PlacedQuads {
    std::vector<Point2> footprint;
    std::vector<Point2> clearance;
};

inline bool placement_valid(std::span<const Point2> room, std::span<const std::vector<Point2>> door_zones,
                            std::span<const PlacedQuads> placed, double tol = 1e-6) {
    const BPoly r = to_boost(room);
    std::vector<BPoly> feet, clear;
    for (const PlacedQuads& p : placed) {
        feet.push_back(to_boost(p.footprint));
        clear.push_back(to_boost(p.clearance));
        if (!covered(r, feet.back(), tol) || !covered(r, clear.back(), tol)) return false;
        for (const auto& dz : door_zones) {
            if (overlap_area(feet.back(), to_boost(dz)) > tol) return false;
        }
    }
    for (std::size_t i = 0; i < feet.size(); ++i) {
        for (std::size_t j = 0; j < feet.size(); ++j) {
            if (i == j) continue;
            if (overlap_area(feet[i], feet[j]) > tol || overlap_area(feet[i], clear[j]) > tol) return false;
        }
    }
    return true;
}

// Exhaustive search on a 10 cm grid with quarter-turn orientations in an
// axis-aligned rectangular room [0,w]x[0,h]. Boxes are [x0,y0,x1,y1].
struct Box {
    double x0, y0, x1, y1;
};

inline bool boxes_overlap(const Box& a, const Box& b, double tol = 1e-9) {
    return a.x0 < b.x1 - tol && b.x0 < a.x1 - tol && a.y0 < b.y1 - tol && b.y0 < a.y1 - tol;
}

struct GridPose {
    Box foot;
    Box clear;
};

inline std::vector<GridPose> grid_poses(const hyperplan::FurnitureBlock& b, double w, double h,
                                        std::span<const Box> doors, double step = 0.1) {
    std::vector<GridPose> out;
    for (int s = 0; s < 4; ++s) {
        // Margins of the clearance around the footprint after s quarter turns
        // (counter-clockwise): front/back/left/right rotate through +y,-x,-y,+x.
        double fw = (s % 2 == 0) ? b.width : b.depth;
        double fd = (s % 2 == 0) ? b.depth : b.width;
        double m_xm = 0, m_xp = 0, m_ym = 0, m_yp = 0;
        switch (s) {
            case 0: m_yp = b.front; m_ym = b.back; m_xm = b.left; m_xp = b.right; break;
            case 1: m_xm = b.front; m_xp = b.back; m_ym = b.left; m_yp = b.right; break;
            case 2: m_ym = b.front; m_yp = b.back; m_xp = b.left; m_xm = b.right; break;
            default: m_xp = b.front; m_xm = b.back; m_yp = b.left; m_ym = b.right; break;
        }
        const int nx = static_cast<int>(std::floor((w - fw) / step + 1e-9));
        const int ny = static_cast<int>(std::floor((h - fd) / step + 1e-9));
        for (int i = 0; i <= nx; ++i) {
            for (int j = 0; j <= ny; ++j) {
                const double x = i * step, y = j * step;
                GridPose p{{x, y, x + fw, y + fd}, {x - m_xm, y - m_ym, x + fw + m_xp, y + fd + m_yp}};
                if (p.clear.x0 < -1e-9 || p.clear.y0 < -1e-9 || p.clear.x1 > w + 1e-9 || p.clear.y1 > h + 1e-9) continue;
                bool blocked = false;
                for (const Box& d : doors) blocked = blocked || boxes_overlap(p.foot, d);
                if (!blocked) out.push_back(p);
            }
        }
    }
    return out;
}

enum class Verdict { feasible, infeasible, unknown };

// Depth-first over per-block pose lists; `budget` caps pair checks.
inline Verdict grid_search(std::span<const hyperplan::FurnitureBlock> blocks, double w, double h,
                           std::span<const Box> doors, long long budget = 50'000'000) {
    std::vector<std::vector<GridPose>> poses;
    for (const auto& b : blocks) {
        poses.push_back(grid_poses(b, w, h, doors));
        if (poses.back().empty()) return Verdict::infeasible;
    }
    std::vector<const GridPose*> chosen;
    long long work = 0;
    bool exhausted = false;
    auto compatible = [&](const GridPose& p) {
        for (const GridPose* q : chosen) {
            ++work;
            if (boxes_overlap(p.foot, q->foot) || boxes_overlap(p.foot, q->clear) || boxes_overlap(p.clear, q->foot)) {
                return false;
            }
        }
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == poses.size()) return true;
        for (const GridPose& p : poses[i]) {
            if (work > budget) {
                exhausted = true;
                return false;
            }
            if (!compatible(p)) continue;
            chosen.push_back(&p);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (dfs(dfs, 0)) return Verdict::feasible;
    return exhausted ? Verdict::unknown : Verdict::infeasible;
}

}  // namespace oracle

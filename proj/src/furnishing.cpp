#include "hyperplan/furnishing.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace hyperplan {

const FurnitureBlock& FurnitureCatalog::block(const std::string& name) const {
    auto it = blocks.find(name);
    if (it == blocks.end()) throw Error(ErrorCode::InvalidRecord, "unknown furniture block " + name);
    return it->second;
}

const OccupancyRequirement& FurnitureCatalog::requirement(int bedrooms) const {
    if (bedrooms < 0 || bedrooms >= static_cast<int>(occupancies.size())) {
        throw Error(ErrorCode::UnknownOccupancy, std::to_string(bedrooms) + " bedrooms");
    }
    return occupancies[static_cast<std::size_t>(bedrooms)];
}

void validate_catalog(const FurnitureCatalog& catalog) {
    if (catalog.occupancies.empty()) throw Error(ErrorCode::InvalidRecord, "catalog has no occupancies");
    for (const auto& [name, b] : catalog.blocks) {
        if (name != b.name) throw Error(ErrorCode::InvalidRecord, "block key " + name + " does not match its name");
        if (!(b.width > 0.0 && b.depth > 0.0)) throw Error(ErrorCode::InvalidRecord, "block " + name + " footprint");
        if (b.front < 0.0 || b.back < 0.0 || b.left < 0.0 || b.right < 0.0) {
            throw Error(ErrorCode::InvalidRecord, "block " + name + " has a negative clearance");
        }
    }
    for (std::size_t i = 0; i < catalog.occupancies.size(); ++i) {
        const OccupancyRequirement& occ = catalog.occupancies[i];
        if (occ.bedrooms != static_cast<int>(i)) {
            throw Error(ErrorCode::InvalidRecord, "occupancies must be listed for 0, 1, 2, ... bedrooms");
        }
        if (!(occ.min_furniture_area > 0.0)) throw Error(ErrorCode::InvalidRecord, occ.label + " minimum area");
        for (const FurnitureSlot& slot : occ.slots) {
            for (const std::string& name : slot.blocks) catalog.block(name);
        }
    }
}

namespace {

FurnitureCatalog build_default_catalog() {
    using P = RoomProgram;
    FurnitureCatalog c;
    auto add = [&](std::string name, P program, double w, double d, double front, double left = 0.0,
                   double right = 0.0) {
        c.blocks[name] = FurnitureBlock{name, program, w, d, front, 0.0, left, right};
    };
    // Footprints include the immediate use space of each item (chairs around
    // tables, bedside tables, door swing of wardrobes).
    add("bed_double", P::bedroom, 2.4, 2.5, 0.5);
    add("wardrobe", P::bedroom, 2.0, 1.2, 0.6);
    add("dresser", P::bedroom, 1.5, 1.0, 0.5);
    add("bed_single", P::bedroom, 1.6, 2.5, 0.0, 0.0, 0.5);
    add("wardrobe_small", P::bedroom, 2.0, 1.0, 0.6);
    add("desk", P::bedroom, 1.6, 1.25, 0.6);
    add("sofa", P::living, 2.5, 2.4, 0.5);
    add("sofa_small", P::living, 2.0, 2.0, 0.5);
    add("dining_2", P::living, 1.6, 1.0, 0.3);
    add("dining_4", P::living, 2.2, 2.0, 0.3);
    add("dining_6", P::living, 2.8, 2.25, 0.3);
    add("dining_8", P::living, 3.0, 2.5, 0.3);
    add("shelf", P::living, 2.0, 0.6, 0.4);
    add("lounge", P::living, 2.0, 1.7, 0.3);
    add("kitchenette", P::kitchen, 2.0, 1.2, 0.6);
    add("kitchen_run", P::kitchen, 3.0, 1.6, 0.6);
    add("utility", P::kitchen, 2.0, 1.8, 0.4);
    add("bathtub", P::bath, 1.8, 1.0, 0.3);
    add("toilet", P::bath, 1.0, 1.2, 0.3);
    add("sink", P::bath, 1.0, 0.8, 0.3);

    const FurnitureSlot bath_primary{P::bath, SlotRole::primary, {"bathtub", "toilet", "sink"}, std::nullopt};
    const FurnitureSlot bath_secondary{P::bath, SlotRole::secondary, {"toilet", "sink"}, P::bath};
    const FurnitureSlot bed_primary{P::bedroom, SlotRole::primary, {"bed_double", "wardrobe", "dresser"}, std::nullopt};
    const FurnitureSlot bed_secondary{
        P::bedroom, SlotRole::secondary, {"bed_single", "wardrobe_small", "desk"}, std::nullopt};
    const FurnitureSlot kitchen_small{P::kitchen, SlotRole::primary, {"kitchen_run"}, P::living};
    const FurnitureSlot kitchen_large{P::kitchen, SlotRole::primary, {"kitchen_run", "utility"}, P::living};
    auto living = [](const char* dining) {
        return FurnitureSlot{P::living, SlotRole::primary, {"sofa", dining, "shelf", "lounge"}, std::nullopt};
    };

    c.occupancies.push_back({0,
                             "studio",
                             21.4,
                             {{P::living, SlotRole::primary, {"bed_double", "wardrobe", "sofa_small", "dining_2", "shelf"}, std::nullopt},
                              {P::kitchen, SlotRole::primary, {"kitchenette"}, P::living},
                              bath_primary}});
    c.occupancies.push_back({1, "1bed", 33.5, {bed_primary, living("dining_4"), kitchen_small, bath_primary}});
    c.occupancies.push_back(
        {2, "2bed", 45.4, {bed_primary, living("dining_6"), kitchen_small, bath_primary, bed_secondary, bath_secondary}});
    const double base3 = 58.2;
    std::vector<FurnitureSlot> three{bed_primary,  living("dining_8"), kitchen_large, bath_primary,
                                     bed_secondary, bed_secondary,     bath_secondary};
    c.occupancies.push_back({3, "3bed", base3, three});
    three.push_back(bed_secondary);
    c.occupancies.push_back({4, "4bed", 66.2, three});
    three.push_back(bed_secondary);
    c.occupancies.push_back({5, "5bed", 74.2, three});
    return c;
}

}  // namespace

const FurnitureCatalog& default_catalog() {
    static const FurnitureCatalog catalog = [] {
        FurnitureCatalog c = build_default_catalog();
        validate_catalog(c);
        return c;
    }();
    return catalog;
}

namespace {

constexpr double kQuadTol = 1e-7;  // default of quads_overlap

// Edge normals of a quad, kept with their lengths so repeated overlap tests
// against the same quad skip the square roots.
struct SatQuad {
    Quad q;
    std::array<Point2, 4> axis;
    std::array<double, 4> len;
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;

    explicit SatQuad(const Quad& quad) : q(quad) {
        for (const Point2& p : q) {
            x0 = std::min(x0, p.x);
            y0 = std::min(y0, p.y);
            x1 = std::max(x1, p.x);
            y1 = std::max(y1, p.y);
        }
        for (std::size_t i = 0; i < 4; ++i) {
            const Point2 e = q[(i + 1) % 4] - q[i];
            axis[i] = {-e.y, e.x};
            len[i] = norm(axis[i]);
        }
        for (std::size_t i = 0; i < 4; ++i) {
            lo[i] = INFINITY;
            hi[i] = -INFINITY;
            for (const Point2& p : q) {
                const double s = dot(p, axis[i]) / len[i];
                lo[i] = std::min(lo[i], s);
                hi[i] = std::max(hi[i], s);
            }
        }
        const double turn = cross(q[1] - q[0], q[2] - q[0]) + cross(q[2] - q[0], q[3] - q[0]);
        orient = turn > 0.0 ? 1.0 : -1.0;
        center = 0.25 * (q[0] + q[1] + q[2] + q[3]);
        inradius = depth(center);
    }

    // Signed distance from p to the nearest edge line, positive inside.
    double depth(Point2 p) const {
        double d = INFINITY;
        for (std::size_t i = 0; i < 4; ++i) {
            if (len[i] < 1e-12) return -INFINITY;
            d = std::min(d, orient * dot(p - q[i], axis[i]) / len[i]);
        }
        return d;
    }

    std::array<double, 4> lo, hi;  // own projections
    double orient = 1.0;
    Point2 center;
    double inradius = 0.0;
};

bool sat_overlap(const SatQuad& a, const SatQuad& b, double tol) {
    // Disjoint boxes mean disjoint quads, which some edge normal separates
    // with a positive gap; the full test would say the same.
    if (a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0) return false;
    // Likewise a disc well above tol inside both means every axis overlaps.
    constexpr double margin = 1e-6;
    if (tol < margin / 2) {
        if (a.inradius > margin && b.depth(a.center) > margin) return true;
        if (b.inradius > margin && a.depth(b.center) > margin) return true;
    }
    // Projections of `own` onto its axes are cached; only `other` is projected.
    auto separated_on = [&](const SatQuad& own, const SatQuad& other, bool own_is_a) {
        for (std::size_t i = 0; i < 4; ++i) {
            const Point2 axis = own.axis[i];
            const double len = own.len[i];
            if (len < 1e-12) continue;
            double omin = INFINITY, omax = -INFINITY;
            for (const Point2& p : other.q) {
                const double s = dot(p, axis) / len;
                omin = std::min(omin, s);
                omax = std::max(omax, s);
            }
            const double amin = own_is_a ? own.lo[i] : omin, amax = own_is_a ? own.hi[i] : omax;
            const double bmin = own_is_a ? omin : own.lo[i], bmax = own_is_a ? omax : own.hi[i];
            if (amax - bmin <= tol || bmax - amin <= tol) return true;
        }
        return false;
    };
    return !separated_on(a, b, true) && !separated_on(b, a, false);
}

}  // namespace

bool quads_overlap(const Quad& a, const Quad& b, double tol) { return sat_overlap(SatQuad(a), SatQuad(b), tol); }

bool quad_inside(const Polygon& room, const Quad& q, double tol) {
    for (const Point2& c : q) {
        if (!contains_point(room, c)) return false;
    }
    // With every corner inside, the quad leaves the room only if some wall
    // runs through its interior.
    for (std::size_t i = 0; i < room.size(); ++i) {
        const Segment e = room.edge(i);
        const Point2 d = e.b - e.a;
        double t0 = 0.0;
        double t1 = 1.0;
        for (std::size_t k = 0; k < 4 && t0 < t1; ++k) {
            const Point2 side = q[(k + 1) % 4] - q[k];
            const double len = norm(side);
            if (len < 1e-12) continue;
            const Point2 inward{-side.y / len, side.x / len};
            const double f0 = dot(e.a - q[k], inward) - tol;
            const double df = dot(d, inward);
            if (std::abs(df) < 1e-15) {
                if (f0 <= 0.0) t1 = t0 - 1.0;
                continue;
            }
            const double t = -f0 / df;
            if (df > 0.0) {
                t0 = std::max(t0, t);
            } else {
                t1 = std::min(t1, t);
            }
        }
        if (t1 > t0 && (t1 - t0) * norm(d) > tol) return false;
    }
    return true;
}

std::vector<Quad> door_zones(const Polygon& room, std::span<const Segment> doors) {
    std::vector<Quad> out;
    for (const Segment& door : doors) {
        for (std::size_t i = 0; i < room.size(); ++i) {
            const Segment e = room.edge(i);
            if (!segment_on(door, e)) continue;
            const Point2 u = (1.0 / e.length()) * (e.b - e.a);
            const Point2 n{-u.y, u.x};
            Point2 p0 = door.a;
            Point2 p1 = door.b;
            if (dot(p1 - p0, u) < 0.0) std::swap(p0, p1);
            const double w = door.length();
            out.push_back({p0, p1, p1 + w * n, p0 + w * n});
            break;
        }
    }
    return out;
}

namespace {

struct WallFrame {
    Point2 origin;
    Point2 u;
    Point2 n;
    double length = 0.0;
};

struct Pose {
    std::size_t edge_offset = 0;
    int orient = 0;
    std::size_t anchor = 0;
};

Point2 quarter_turn(Point2 p, int s) {
    switch (s & 3) {
        case 1: return {-p.y, p.x};
        case 2: return {-p.x, -p.y};
        case 3: return {p.y, -p.x};
        default: return p;
    }
}

class RoomFurnisher {
public:
    RoomFurnisher(const Polygon& room, std::span<const Quad> door_clearance, const FurnishConfig& config)
        : room_(room), doors_(door_clearance), config_(config) {
        std::vector<Polygon> pieces{room};
        for (const Quad& dz : door_clearance) {
            std::vector<Polygon> next;
            for (const Polygon& piece : pieces) {
                try {
                    const Polygon zone = Polygon::from_trusted({dz.begin(), dz.end()});
                    for (Polygon& rest : subtract(piece, zone)) next.push_back(std::move(rest));
                } catch (const Error&) {
                    next.push_back(piece);
                }
            }
            pieces = std::move(next);
        }
        for (const Polygon& piece : pieces) {
            for (std::size_t i = 0; i < piece.size(); ++i) {
                const Segment e = piece.edge(i);
                const double len = e.length();
                if (len < 1e-6) continue;
                const Point2 u = (1.0 / len) * (e.b - e.a);
                walls_.push_back({e.a, u, {-u.y, u.x}, len});
            }
        }
    }

    std::optional<std::vector<Placement>> run(std::span<const FurnitureBlock> blocks) {
        if (blocks.empty()) return std::vector<Placement>{};
        cache_.assign(blocks.size(), std::vector<Candidates>(walls_.size() * 4));
        // A block with no usable pose anywhere sinks every ordering.
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            bool any = false;
            for (std::size_t w = 0; w < walls_.size() && !any; ++w) any = any_usable(blocks[i], i, w);
            if (!any) return std::nullopt;
        }
        // The walk depends on which wall comes first, so every wall gets a turn
        // as the starting point, each with a fresh backtracking budget.
        for (std::size_t first = 0; first < walls_.size(); ++first) {
            // Starting one wall later only repeats the previous walk when the
            // first block had nothing on the skipped wall.
            if (first > 0 && !any_usable(blocks[0], 0, first - 1)) continue;
            placed_.clear();
            placed_sat_.clear();
            if (auto found = run_from(blocks, first)) return found;
        }
        return std::nullopt;
    }

private:
    std::optional<std::vector<Placement>> run_from(std::span<const FurnitureBlock> blocks, std::size_t first) {
        const std::size_t n = blocks.size();
        std::vector<std::size_t> start(n, first);
        std::vector<Pose> from(n);
        std::vector<Pose> poses(n);
        int backtracks = 0;
        std::size_t i = 0;
        while (i < n) {
            auto found = search(blocks[i], i, start[i], from[i]);
            if (found) {
                poses[i] = found->first;
                placed_.push_back(std::move(found->second));
                ++i;
                if (i < n) {
                    start[i] = (start[i - 1] + poses[i - 1].edge_offset) % walls_.size();
                    from[i] = Pose{};
                }
                continue;
            }
            if (i == 0 || backtracks >= config_.max_backtracks) return std::nullopt;
            ++backtracks;
            --i;
            placed_.pop_back();
            placed_sat_.pop_back();
            from[i] = poses[i];
            ++from[i].anchor;
        }
        return placed_;
    }

    std::vector<double> anchors(const WallFrame& w, double span) const {
        std::vector<double> out;
        const double room_left = w.length - span;
        if (room_left < -1e-9) return out;
        for (double t = 0.0; t <= room_left + 1e-9; t += config_.anchor_step) out.push_back(std::min(t, room_left));
        if (out.empty() || room_left - out.back() > 1e-9) out.push_back(std::max(room_left, 0.0));
        return out;
    }

    Placement make(const FurnitureBlock& b, const WallFrame& w, int s, double t) const {
        const Quad foot{{{0.0, 0.0}, {b.width, 0.0}, {b.width, b.depth}, {0.0, b.depth}}};
        const Quad circ{{{-b.left, -b.back},
                         {b.width + b.right, -b.back},
                         {b.width + b.right, b.depth + b.front},
                         {-b.left, b.depth + b.front}}};
        double mx = INFINITY;
        double my = INFINITY;
        for (const Point2& p : foot) {
            const Point2 r = quarter_turn(p, s);
            mx = std::min(mx, r.x);
            my = std::min(my, r.y);
        }
        auto to_world = [&](Point2 p) {
            const Point2 r = quarter_turn(p, s);
            return w.origin + (r.x - mx + t) * w.u + (r.y - my) * w.n;
        };
        Placement pl;
        pl.block = b.name;
        pl.position = to_world({0.0, 0.0});
        double rot = std::atan2(w.u.y, w.u.x) + s * std::numbers::pi / 2.0;
        rot = std::fmod(rot, 2.0 * std::numbers::pi);
        if (rot < 0.0) rot += 2.0 * std::numbers::pi;
        pl.rotation = rot;
        for (std::size_t k = 0; k < 4; ++k) {
            pl.footprint[k] = to_world(foot[k]);
            pl.circulation[k] = to_world(circ[k]);
        }
        return pl;
    }

    // Wall containment and door clearance do not depend on what is already
    // placed, so each (block, wall, turn) row is built once per room.
    struct Candidates {
        bool built = false;
        std::vector<Placement> poses;
        std::vector<SatQuad> foot;
        std::vector<SatQuad> circ;
        std::vector<char> usable;
    };

    const Candidates& candidates(const FurnitureBlock& b, std::size_t block, std::size_t wall, int s) {
        Candidates& c = cache_[block][wall * 4 + s];
        if (c.built) return c;
        c.built = true;
        const WallFrame& w = walls_[wall];
        for (double t : anchors(w, (s % 2 == 0) ? b.width : b.depth)) {
            Placement pl = make(b, w, s, t);
            bool ok = true;
            for (const Quad& dz : doors_) ok = ok && !quads_overlap(pl.footprint, dz);
            ok = ok && quad_inside(room_, pl.footprint) && quad_inside(room_, pl.circulation);
            c.foot.emplace_back(pl.footprint);
            c.circ.emplace_back(pl.circulation);
            c.poses.push_back(std::move(pl));
            c.usable.push_back(ok);
        }
        return c;
    }

    bool any_usable(const FurnitureBlock& b, std::size_t block, std::size_t wall) {
        for (int s = 0; s < 4; ++s) {
            const Candidates& c = candidates(b, block, wall, s);
            if (std::find(c.usable.begin(), c.usable.end(), 1) != c.usable.end()) return true;
        }
        return false;
    }

    bool clear_of_placed(const Candidates& c, std::size_t j) const {
        for (const auto& [foot, circ] : placed_sat_) {
            if (sat_overlap(c.foot[j], circ, kQuadTol)) return false;
            if (sat_overlap(c.circ[j], foot, kQuadTol)) return false;
        }
        return true;
    }

    std::optional<std::pair<Pose, Placement>> search(const FurnitureBlock& b, std::size_t block, std::size_t start,
                                                     Pose from) {
        for (std::size_t k = from.edge_offset; k < walls_.size(); ++k) {
            const std::size_t wall = (start + k) % walls_.size();
            const int s0 = k == from.edge_offset ? from.orient : 0;
            for (int s = s0; s < 4; ++s) {
                const Candidates& c = candidates(b, block, wall, s);
                const std::size_t j0 = (k == from.edge_offset && s == s0) ? from.anchor : 0;
                for (std::size_t j = j0; j < c.poses.size(); ++j) {
                    if (c.usable[j] && clear_of_placed(c, j)) {
                        placed_sat_.emplace_back(c.foot[j], c.circ[j]);
                        return std::make_pair(Pose{k, s, j}, c.poses[j]);
                    }
                }
            }
        }
        return std::nullopt;
    }

    const Polygon& room_;
    std::span<const Quad> doors_;
    FurnishConfig config_;
    std::vector<WallFrame> walls_;
    std::vector<Placement> placed_;
    std::vector<std::pair<SatQuad, SatQuad>> placed_sat_;
    std::vector<std::vector<Candidates>> cache_;
};

}  // namespace

std::optional<std::vector<Placement>> furnish_room(const Polygon& room, std::span<const Quad> door_clearance,
                                                   std::span<const FurnitureBlock> required,
                                                   const FurnishConfig& config) {
    RoomFurnisher furnisher(room, door_clearance, config);
    return furnisher.run(required);
}

double clamp_furniture_area(double placed_area, double extra_area, double min_area, bool all_placed, bool* feasible) {
    const double total = placed_area + extra_area;
    const bool ok = all_placed && total >= min_area - 1e-9;
    if (feasible != nullptr) *feasible = ok;
    return ok ? total : min_area;
}

std::map<std::string, std::vector<std::string>> assign_slots(const FloorPlan& plan, const OccupancyRequirement& req) {
    std::map<RoomProgram, std::vector<const Room*>> by_program;
    for (const Room& r : plan.rooms) by_program[r.program].push_back(&r);
    for (auto& [program, rooms] : by_program) {
        std::stable_sort(rooms.begin(), rooms.end(), [](const Room* a, const Room* b) {
            const double aa = polygon_area(a->polygon);
            const double ab = polygon_area(b->polygon);
            if (std::abs(aa - ab) > 1e-9) return aa > ab;
            return a->id < b->id;
        });
    }
    std::map<RoomProgram, std::size_t> used;
    std::map<std::string, std::vector<std::string>> out;
    for (SlotRole role : {SlotRole::primary, SlotRole::secondary}) {
        for (const FurnitureSlot& slot : req.slots) {
            if (slot.role != role) continue;
            const auto& rooms = by_program[slot.program];
            const Room* host = nullptr;
            std::size_t& next = used[slot.program];
            if (next < rooms.size()) {
                host = rooms[next++];
            } else if (slot.fallback && !by_program[*slot.fallback].empty()) {
                host = by_program[*slot.fallback].front();
            }
            auto& list = out[host ? host->id : std::string()];
            list.insert(list.end(), slot.blocks.begin(), slot.blocks.end());
        }
    }
    return out;
}

FurnishResult furnish_plan(const FloorPlan& plan, const FurnitureCatalog& catalog, const FurnishConfig& config) {
    const OccupancyRequirement& req = catalog.requirement(plan.occupancy());
    FurnishResult result;
    result.min_area = req.min_furniture_area;
    bool all_placed = true;
    for (auto& [room_id, names] : assign_slots(plan, req)) {
        RoomFurnishing rf{room_id, names, false, {}};
        const Room* room = plan.find_room(room_id);
        if (room == nullptr) {
            all_placed = false;
            result.rooms.push_back(std::move(rf));
            continue;
        }
        std::vector<FurnitureBlock> blocks;
        for (const std::string& name : names) blocks.push_back(catalog.block(name));
        std::stable_sort(blocks.begin(), blocks.end(),
                         [](const FurnitureBlock& a, const FurnitureBlock& b) { return a.area() > b.area(); });
        std::vector<Segment> door_segments;
        for (const Door& d : plan.doors) {
            if (d.room_a == room_id || d.room_b == room_id) door_segments.push_back(d.segment);
        }
        const auto zones = door_zones(room->polygon, door_segments);
        if (auto placements = furnish_room(room->polygon, zones, blocks, config)) {
            rf.feasible = true;
            for (const FurnitureBlock& b : blocks) result.placed_area += b.area();
            rf.placements = std::move(*placements);
        } else {
            all_placed = false;
        }
        result.rooms.push_back(std::move(rf));
    }
    for (const Room& r : plan.rooms) {
        if (r.program == RoomProgram::extra) result.extra_area += polygon_area(r.polygon);
    }
    result.f_tot = clamp_furniture_area(result.placed_area, result.extra_area, result.min_area, all_placed,
                                        &result.feasible);
    return result;
}

}  // namespace hyperplan

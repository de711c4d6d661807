#include "hyperplan/validity.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <cmath>

namespace hyperplan {

std::string_view flag_name(FlagKind kind) {
    switch (kind) {
        case FlagKind::FacadeBlocked: return "FacadeBlocked";
        case FlagKind::BadRoomGeometry: return "BadRoomGeometry";
        case FlagKind::PassageTooThin: return "PassageTooThin";
        case FlagKind::AccessUnrealizable: return "AccessUnrealizable";
    }
    return "";
}

std::string ValidityFlag::to_string() const {
    std::string out(flag_name(kind));
    if (!room_id.empty()) out += "(" + room_id + ")";
    return out;
}

double perimeter_diff(const Polygon& a, const Polygon& b) {
    const double la = polygon_perimeter(a);
    const double lb = polygon_perimeter(b);
    const double lsa = 4.0 * std::sqrt(polygon_area(a));
    const double lsb = 4.0 * std::sqrt(polygon_area(b));
    return std::abs(1.0 - (lsa * lb) / (la * lsb));
}

std::map<std::string, double> room_perimeter_diffs(const FloorPlan& generated, const FloorPlan& source) {
    if (generated.rooms.size() != source.rooms.size()) {
        throw Error(ErrorCode::RoomSetMismatch, generated.id + " vs " + source.id + ": room counts differ");
    }
    std::map<std::string, double> out;
    for (const Room& src : source.rooms) {
        const Room* gen = generated.find_room(src.id);
        if (gen == nullptr) throw Error(ErrorCode::RoomSetMismatch, "room " + src.id + " missing from " + generated.id);
        out[src.id] = perimeter_diff(src.polygon, gen->polygon);
    }
    return out;
}

double plan_perimeter_diff(const FloorPlan& generated, const FloorPlan& source) {
    const auto scores = room_perimeter_diffs(generated, source);
    double sum = 0.0;
    for (const auto& [id, v] : scores) sum += v;
    return sum / static_cast<double>(scores.size());
}

namespace {

bool has_facade_access(const Room& room, const FloorPlan& plan, double min_overlap) {
    for (std::size_t i = 0; i < room.polygon.size(); ++i) {
        for (const Segment& f : plan.facade_edges) {
            auto piece = collinear_overlap(room.polygon.edge(i), f);
            if (piece && piece->length() >= min_overlap - 1e-9) return true;
        }
    }
    return false;
}

double distance_to_region(const std::vector<Polygon>& region, const Segment& s) {
    double best = INFINITY;
    for (const Polygon& p : region) {
        if (contains_point(p, s.a) || contains_point(p, s.b)) return 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) best = std::min(best, segment_distance(p.edge(i), s));
    }
    return best;
}

bool passage_too_thin(const Room& foyer, const FloorPlan& plan, const ValidityConfig& cfg) {
    const auto core = inward_offset(foyer.polygon, cfg.passage_half_width);
    if (core.empty()) return true;
    for (const Door& d : plan.doors) {
        if (d.room_a != foyer.id && d.room_b != foyer.id) continue;
        if (distance_to_region(core, d.segment) > cfg.passage_half_width + cfg.passage_reach_tol) return true;
    }
    return false;
}

}  // namespace

std::set<ValidityFlag> check_plan(const FloorPlan& plan, const ValidityConfig& config) {
    std::set<ValidityFlag> flags;
    for (const Room& r : plan.rooms) {
        if (is_habitable(r.program)) {
            if (!has_facade_access(r, plan, config.facade_min_overlap)) flags.insert({FlagKind::FacadeBlocked, r.id});
            const CaliperBox box = min_caliper(r.polygon);
            if (box.width < config.min_room_width || box.aspect() > config.max_aspect) {
                flags.insert({FlagKind::BadRoomGeometry, r.id});
            }
        }
        if (r.program == RoomProgram::foyer && passage_too_thin(r, plan, config)) {
            flags.insert({FlagKind::PassageTooThin, r.id});
        }
    }
    return flags;
}

bool fit_filter(const Hypergraph& hg, const BoundarySpec& target, const ValidityConfig& config) {
    const double source_area = hg.leaf_area_sum();
    const double footprint = std::abs(polygon_area(target.polygon) / source_area - 1.0);
    if (footprint > config.footprint_tol + 1e-12) return false;
    const double fr = facade_ratio(target.polygon, target.facade_edges);
    return std::abs(fr - hg.source.facade_ratio) <= config.facade_ratio_tol + 1e-12;
}

ValidityReport make_report(std::map<std::string, double> room_scores, std::set<ValidityFlag> flags,
                           const ValidityConfig& config) {
    ValidityReport report;
    report.room_scores = std::move(room_scores);
    double sum = 0.0;
    for (const auto& [id, v] : report.room_scores) sum += v;
    report.delta_r = report.room_scores.empty() ? 0.0 : sum / static_cast<double>(report.room_scores.size());
    report.flags = std::move(flags);
    report.passed = report.flags.empty() && report.delta_r <= config.delta_max;
    return report;
}

}  // namespace hyperplan

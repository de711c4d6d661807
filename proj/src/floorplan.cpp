#include "hyperplan/floorplan.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperplan {

std::string_view program_name(RoomProgram program) {
    switch (program) {
        case RoomProgram::living: return "living";
        case RoomProgram::bedroom: return "bedroom";
        case RoomProgram::kitchen: return "kitchen";
        case RoomProgram::bath: return "bath";
        case RoomProgram::extra: return "extra";
        case RoomProgram::foyer: return "foyer";
    }
    return "living";
}

RoomProgram parse_program(std::string_view name) {
    for (RoomProgram p : kAllPrograms) {
        if (program_name(p) == name) return p;
    }
    throw Error(ErrorCode::UnknownProgram, std::string(name));
}

bool is_habitable(RoomProgram program) {
    return program == RoomProgram::living || program == RoomProgram::bedroom || program == RoomProgram::kitchen;
}

bool is_daylit(RoomProgram program) { return is_habitable(program) || program == RoomProgram::foyer; }

AccessEdge make_access_edge(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

int FloorPlan::occupancy() const {
    return static_cast<int>(
        std::count_if(rooms.begin(), rooms.end(), [](const Room& r) { return r.program == RoomProgram::bedroom; }));
}

const Room* FloorPlan::find_room(std::string_view room_id) const {
    for (const Room& r : rooms) {
        if (r.id == room_id) return &r;
    }
    return nullptr;
}

std::vector<AccessEdge> FloorPlan::access_edges() const {
    std::set<AccessEdge> edges;
    for (const Door& d : doors) {
        if (!d.is_entrance()) edges.insert(make_access_edge(d.room_a, d.room_b));
    }
    return {edges.begin(), edges.end()};
}

std::optional<std::string> FloorPlan::entrance_room() const {
    for (const Door& d : doors) {
        if (d.is_entrance()) return d.inner_room();
    }
    return std::nullopt;
}

bool segment_on(const Segment& inner, const Segment& outer, double tol) {
    return point_segment_distance(inner.a, outer) <= tol && point_segment_distance(inner.b, outer) <= tol;
}

std::vector<Segment> shared_walls(const Polygon& a, const Polygon& b) {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Segment ea = a.edge(i);
            const Segment eb = b.edge(j);
            // Neighbouring rooms traverse a shared wall in opposite directions.
            if (dot(ea.b - ea.a, eb.b - eb.a) >= 0) continue;
            if (auto piece = collinear_overlap(ea, eb)) out.push_back(*piece);
        }
    }
    return out;
}

std::vector<Segment> contact_segments(const Polygon& p, std::span<const Segment> segments) {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (const Segment& s : segments) {
            if (auto piece = collinear_overlap(p.edge(i), s)) out.push_back(*piece);
        }
    }
    return out;
}

double facade_ratio(const Polygon& boundary, std::span<const Segment> facade) {
    double total = 0.0;
    for (const Segment& s : facade) total += s.length();
    return std::clamp(total / polygon_perimeter(boundary), 0.0, 1.0);
}

double facade_ratio(const FloorPlan& plan) { return facade_ratio(plan.boundary, plan.facade_edges); }

namespace {

bool on_boundary(const Polygon& boundary, const Segment& s) {
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (segment_on(s, boundary.edge(i))) return true;
    }
    return false;
}

void check_annotations(const FloorPlan& plan) {
    for (const auto* set : {&plan.facade_edges, &plan.circulation_edges}) {
        for (const Segment& s : *set) {
            if (s.length() < kEpsPoint) throw Error(ErrorCode::InvalidRecord, "zero-length boundary annotation");
            if (!on_boundary(plan.boundary, s)) {
                throw Error(ErrorCode::InvalidRecord, "facade/circulation segment is not on the boundary");
            }
        }
    }
    for (const Segment& f : plan.facade_edges) {
        for (const Segment& c : plan.circulation_edges) {
            if (collinear_overlap(f, c)) throw Error(ErrorCode::InvalidRecord, "facade and circulation overlap");
        }
    }
}

void check_tiling(const FloorPlan& plan) {
    const double total = polygon_area(plan.boundary);
    const double tol = 1e-6 * total;
    double sum = 0.0;
    for (std::size_t i = 0; i < plan.rooms.size(); ++i) {
        const Polygon& room = plan.rooms[i].polygon;
        const double area = polygon_area(room);
        sum += area;
        if (area - intersection_area(room, plan.boundary) > tol) {
            throw Error(ErrorCode::TilingOverlap, "room " + plan.rooms[i].id + " extends beyond the boundary");
        }
        for (std::size_t j = i + 1; j < plan.rooms.size(); ++j) {
            if (intersection_area(room, plan.rooms[j].polygon) > tol) {
                throw Error(ErrorCode::TilingOverlap, "rooms " + plan.rooms[i].id + " and " + plan.rooms[j].id);
            }
        }
    }
    if (sum < total - tol) {
        throw Error(ErrorCode::TilingGap, "rooms cover " + std::to_string(sum) + " of " + std::to_string(total));
    }
    if (sum > total + tol) throw Error(ErrorCode::TilingOverlap, "rooms exceed the boundary area");
}

void check_doors(const FloorPlan& plan) {
    int entrances = 0;
    for (const Door& d : plan.doors) {
        if (d.width < kDoorWidthMin - kEpsPoint) {
            throw Error(ErrorCode::InvalidRecord, "door narrower than " + std::to_string(kDoorWidthMin));
        }
        if (d.room_a == d.room_b) throw Error(ErrorCode::DanglingDoor, "door joins " + d.room_a + " to itself");
        if (d.is_entrance()) {
            ++entrances;
            const Room* room = plan.find_room(d.inner_room());
            if (room == nullptr) throw Error(ErrorCode::DanglingDoor, "unknown room " + d.inner_room());
            const auto frontage = contact_segments(room->polygon, plan.circulation_edges);
            const bool placed = std::any_of(frontage.begin(), frontage.end(),
                                            [&](const Segment& s) { return segment_on(d.segment, s); });
            if (!placed) throw Error(ErrorCode::DanglingDoor, "entrance door is not on a circulation edge");
            continue;
        }
        const Room* a = plan.find_room(d.room_a);
        const Room* b = plan.find_room(d.room_b);
        if (a == nullptr || b == nullptr) {
            throw Error(ErrorCode::DanglingDoor, "door references unknown room " + (a ? d.room_b : d.room_a));
        }
        const auto walls = shared_walls(a->polygon, b->polygon);
        const bool placed =
            std::any_of(walls.begin(), walls.end(), [&](const Segment& s) { return segment_on(d.segment, s); });
        if (!placed) throw Error(ErrorCode::DanglingDoor, "door " + d.room_a + "|" + d.room_b + " is not on a shared wall");
    }
    if (entrances != 1) throw Error(ErrorCode::InvalidRecord, "plan needs exactly one entrance door");

    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& [a, b] : plan.access_edges()) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::set<std::string> seen{*plan.entrance_room()};
    std::vector<std::string> stack{*plan.entrance_room()};
    while (!stack.empty()) {
        const std::string cur = stack.back();
        stack.pop_back();
        for (const std::string& next : adjacency[cur]) {
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    for (const Room& r : plan.rooms) {
        if (!seen.count(r.id)) throw Error(ErrorCode::AccessDisconnected, "room " + r.id + " is unreachable");
    }
}

}  // namespace

FloorPlan ingest_traced(const TracedRecord& record) {
    if (record.id.empty()) throw Error(ErrorCode::InvalidRecord, "plan id is empty");
    FloorPlan plan{record.id, Polygon(record.boundary), {}, record.facade, record.circulation, {}};

    std::set<std::string> ids;
    for (const TracedRoom& tr : record.rooms) {
        if (tr.id.empty() || tr.id == kEntrance) throw Error(ErrorCode::InvalidRecord, "invalid room id '" + tr.id + "'");
        if (!ids.insert(tr.id).second) throw Error(ErrorCode::InvalidRecord, "duplicate room id " + tr.id);
        plan.rooms.push_back({tr.id, parse_program(tr.program), Polygon(tr.polygon)});
    }
    if (plan.rooms.empty()) throw Error(ErrorCode::InvalidRecord, "plan has no rooms");
    std::sort(plan.rooms.begin(), plan.rooms.end(), [](const Room& a, const Room& b) { return a.id < b.id; });

    for (const TracedDoor& td : record.doors) {
        Door d{td.rooms[0], td.rooms[1], td.segment, td.width};
        if (d.room_a == kEntrance) std::swap(d.room_a, d.room_b);
        plan.doors.push_back(std::move(d));
    }

    check_annotations(plan);
    check_tiling(plan);
    check_doors(plan);
    return plan;
}

TracedRecord to_record(const FloorPlan& plan) {
    TracedRecord rec{plan.id, {}, {}, plan.facade_edges, plan.circulation_edges, {}};
    rec.boundary.assign(plan.boundary.vertices().begin(), plan.boundary.vertices().end());
    for (const Room& r : plan.rooms) {
        rec.rooms.push_back({r.id, std::string(program_name(r.program)),
                             {r.polygon.vertices().begin(), r.polygon.vertices().end()}});
    }
    for (const Door& d : plan.doors) rec.doors.push_back({{d.room_a, d.room_b}, d.segment, d.width});
    return rec;
}

namespace {

std::optional<Segment> longest(const std::vector<Segment>& pieces) {
    std::optional<Segment> best;
    for (const Segment& s : pieces) {
        if (!best || s.length() > best->length() + 1e-12) best = s;
    }
    return best;
}

Segment centered_on(const Segment& wall, double width) {
    const Point2 mid = wall.midpoint();
    const Point2 u = (1.0 / wall.length()) * (wall.b - wall.a);
    return {mid - (0.5 * width) * u, mid + (0.5 * width) * u};
}

}  // namespace

FloorPlan realize_doors(const PlanSkeleton& skeleton, double door_width) {
    FloorPlan plan{skeleton.id, skeleton.boundary, skeleton.rooms, skeleton.facade_edges,
                   skeleton.circulation_edges, {}};
    std::sort(plan.rooms.begin(), plan.rooms.end(), [](const Room& a, const Room& b) { return a.id < b.id; });

    const Room* entrance = plan.find_room(skeleton.entrance_room);
    if (entrance == nullptr) throw Error(ErrorCode::NoSharedWall, std::string(kEntrance));
    const auto frontage = longest(contact_segments(entrance->polygon, plan.circulation_edges));
    if (!frontage || frontage->length() < door_width - 1e-9) {
        throw Error(ErrorCode::NoSharedWall, std::string(kEntrance));
    }
    plan.doors.push_back({entrance->id, std::string(kEntrance), centered_on(*frontage, door_width), door_width});

    for (const auto& [a, b] : skeleton.access_edges) {
        const Room* ra = plan.find_room(a);
        const Room* rb = plan.find_room(b);
        if (ra == nullptr || rb == nullptr) throw Error(ErrorCode::NoSharedWall, a + "|" + b);
        const auto wall = longest(shared_walls(ra->polygon, rb->polygon));
        if (!wall || wall->length() < door_width - 1e-9) throw Error(ErrorCode::NoSharedWall, a + "|" + b);
        plan.doors.push_back({a, b, centered_on(*wall, door_width), door_width});
    }
    return plan;
}

}  // namespace hyperplan

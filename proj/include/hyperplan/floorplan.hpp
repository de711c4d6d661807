#pragma once

#include "hyperplan/geometry.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperplan {

enum class RoomProgram { living, bedroom, kitchen, bath, extra, foyer };

inline constexpr std::array<RoomProgram, 6> kAllPrograms = {RoomProgram::living, RoomProgram::bedroom,
                                                            RoomProgram::kitchen, RoomProgram::bath,
                                                            RoomProgram::extra, RoomProgram::foyer};

std::string_view program_name(RoomProgram program);
RoomProgram parse_program(std::string_view name);  // throws UnknownProgram

// Rooms that must be usable for living: living, bedroom, kitchen.
bool is_habitable(RoomProgram program);
// Rooms that enter the daylight score: living, kitchen, bedroom, foyer.
bool is_daylit(RoomProgram program);

// Pseudo room id for the building circulation side of an entrance door.
inline constexpr std::string_view kEntrance = "ENTRANCE";
inline constexpr double kDoorWidthMin = 0.9;

struct Room {
    std::string id;
    RoomProgram program = RoomProgram::living;
    Polygon polygon;
};

// Unordered room pair stored with first < second.
using AccessEdge = std::pair<std::string, std::string>;
AccessEdge make_access_edge(std::string a, std::string b);

struct Door {
    std::string room_a;
    std::string room_b;  // kEntrance for the apartment entrance
    Segment segment;
    double width = kDoorWidthMin;

    bool is_entrance() const { return room_b == kEntrance || room_a == kEntrance; }
    // The non-entrance side of an entrance door.
    const std::string& inner_room() const { return room_a == kEntrance ? room_b : room_a; }
};

struct FloorPlan {
    std::string id;
    Polygon boundary;
    std::vector<Room> rooms;  // sorted by id
    std::vector<Segment> facade_edges;
    std::vector<Segment> circulation_edges;
    std::vector<Door> doors;

    int occupancy() const;
    const Room* find_room(std::string_view room_id) const;
    // Room-to-room access edges implied by the doors, sorted and unique.
    std::vector<AccessEdge> access_edges() const;
    std::optional<std::string> entrance_room() const;
};

// Rooms plus access structure before doors are placed; output of apply.
struct PlanSkeleton {
    std::string id;
    Polygon boundary;
    std::vector<Room> rooms;
    std::vector<AccessEdge> access_edges;
    std::string entrance_room;
    std::vector<Segment> facade_edges;
    std::vector<Segment> circulation_edges;
};

// Raw traced plan as read from a corpus file, before validation.
struct TracedRoom {
    std::string id;
    std::string program;
    std::vector<Point2> polygon;
};

struct TracedDoor {
    std::array<std::string, 2> rooms;
    Segment segment;
    double width = kDoorWidthMin;
};

struct TracedRecord {
    std::string id;
    std::vector<Point2> boundary;
    std::vector<TracedRoom> rooms;
    std::vector<Segment> facade;
    std::vector<Segment> circulation;
    std::vector<TracedDoor> doors;
};

// Validates a traced record into a plan: orientation normalized, rooms tile
// the boundary, annotations lie on the boundary, doors sit on shared walls and
// connect every room to the entrance.
FloorPlan ingest_traced(const TracedRecord& record);
TracedRecord to_record(const FloorPlan& plan);

// One door per access edge, centered on the longest shared wall.
FloorPlan realize_doors(const PlanSkeleton& skeleton, double door_width = kDoorWidthMin);

// Facade length over boundary perimeter.
double facade_ratio(const Polygon& boundary, std::span<const Segment> facade);
double facade_ratio(const FloorPlan& plan);

// Wall pieces shared by two interior-disjoint polygons.
std::vector<Segment> shared_walls(const Polygon& a, const Polygon& b);
// Pieces of the polygon's edges lying on any of the given segments.
std::vector<Segment> contact_segments(const Polygon& p, std::span<const Segment> segments);

// True if `inner` lies on `outer` (collinear and contained) within tol.
bool segment_on(const Segment& inner, const Segment& outer, double tol = kEpsPoint);

}  // namespace hyperplan

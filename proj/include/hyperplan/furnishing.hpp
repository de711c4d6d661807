#pragma once

#include "hyperplan/floorplan.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperplan {

// Convex quadrilateral, counter-clockwise.
using Quad = std::array<Point2, 4>;

// Rectangle w x d in its own frame: x in [0, w], y in [0, d], with the back
// (y = 0) being the side normally set against a wall. The circulation zone
// extends the footprint by the given margins on each side.
struct FurnitureBlock {
    std::string name;
    RoomProgram program = RoomProgram::living;
    double width = 0.0;
    double depth = 0.0;
    double front = 0.0;
    double back = 0.0;
    double left = 0.0;
    double right = 0.0;

    double area() const { return width * depth; }
};

enum class SlotRole { primary, secondary };

// One room's worth of required blocks.
struct FurnitureSlot {
    RoomProgram program = RoomProgram::living;
    SlotRole role = SlotRole::primary;
    std::vector<std::string> blocks;
    std::optional<RoomProgram> fallback;  // host program when no room of `program` is free
};

struct OccupancyRequirement {
    int bedrooms = 0;
    std::string label;
    double min_furniture_area = 0.0;
    std::vector<FurnitureSlot> slots;
};

struct FurnitureCatalog {
    std::map<std::string, FurnitureBlock> blocks;
    std::vector<OccupancyRequirement> occupancies;  // indexed by bedroom count

    const FurnitureBlock& block(const std::string& name) const;
    const OccupancyRequirement& requirement(int bedrooms) const;  // throws UnknownOccupancy
    double min_furniture_area(int bedrooms) const { return requirement(bedrooms).min_furniture_area; }
};

// Checks names resolve, dimensions are positive and occupancies are 0..n in
// order; throws InvalidRecord.
void validate_catalog(const FurnitureCatalog& catalog);

// Built-in catalog: studio through 5-bed.
const FurnitureCatalog& default_catalog();

struct Placement {
    std::string block;
    Point2 position;  // world position of the block's local origin
    double rotation = 0.0;
    Quad footprint;
    Quad circulation;
};

struct FurnishConfig {
    double anchor_step = 0.1;  // spacing of candidate positions along an edge
    int max_backtracks = 64;
};

// Clearance square of side door-width on the room side of each door lying
// on the room's boundary; doors elsewhere are ignored.
std::vector<Quad> door_zones(const Polygon& room, std::span<const Segment> doors);

// Places blocks flush against the edges of (room minus door zones). nullopt
// means the heuristic found no arrangement.
std::optional<std::vector<Placement>> furnish_room(const Polygon& room, std::span<const Quad> door_clearance,
                                                   std::span<const FurnitureBlock> required,
                                                   const FurnishConfig& config = {});

struct RoomFurnishing {
    std::string room_id;
    std::vector<std::string> required;
    bool feasible = true;
    std::vector<Placement> placements;
};

struct FurnishResult {
    std::vector<RoomFurnishing> rooms;  // rooms that received blocks, by id
    double placed_area = 0.0;
    double extra_area = 0.0;
    double min_area = 0.0;
    double f_tot = 0.0;
    bool feasible = false;
};

// Total furniture area with the minimum-area clamp.
double clamp_furniture_area(double placed_area, double extra_area, double min_area, bool all_placed, bool* feasible);

// Which room receives which block list; rooms are matched by program,
// the largest room taking the primary slot.
std::map<std::string, std::vector<std::string>> assign_slots(const FloorPlan& plan, const OccupancyRequirement& req);

FurnishResult furnish_plan(const FloorPlan& plan, const FurnitureCatalog& catalog, const FurnishConfig& config = {});

// Geometry helpers shared with rendering.
bool quads_overlap(const Quad& a, const Quad& b, double tol = 1e-7);
bool quad_inside(const Polygon& room, const Quad& q, double tol = 1e-7);

}  // namespace hyperplan

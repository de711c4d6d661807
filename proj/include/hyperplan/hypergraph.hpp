#pragma once

#include "hyperplan/floorplan.hpp"
#include "hyperplan/geometry.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperplan {

enum class RetentionMode { ratio_retain, area_retain };

// Node of the subdivision tree. Internal nodes carry the cut angle (relative
// to the source plan's circulation direction) and exactly two children; the
// first child is the side with the smaller projection on the cut normal.
struct SubdivNode {
    std::string id;
    double area_abs = 0.0;    // m^2 in the source plan
    double area_ratio = 1.0;  // fraction of the parent's area; 1 at the root
    double angle = 0.0;       // internal nodes only
    std::optional<RoomProgram> program;  // leaves only
    std::string room_id;                 // leaves only
    std::vector<SubdivNode> children;

    bool is_leaf() const { return children.empty(); }
    friend bool operator==(const SubdivNode&, const SubdivNode&) = default;
};

struct SourceRef {
    std::string plan_id;       // plan in the corpus this graph was encoded from
    std::string citation;      // external attribution when the plan is not bundled
    bool mirrored = false;
    double facade_ratio = 0.0;  // of the source plan, for the fit filter

    friend bool operator==(const SourceRef&, const SourceRef&) = default;
};

struct Hypergraph {
    std::string id;
    SubdivNode root;
    std::vector<AccessEdge> access_edges;  // sorted, unique
    std::string entrance_room;
    std::vector<std::string> facade_rooms;  // sorted
    SourceRef source;
    double frame_angle = 0.0;

    std::vector<const SubdivNode*> leaves() const;  // depth-first, first child first
    std::size_t room_count() const;
    double leaf_area_sum() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Throws InvalidRecord / AccessDisconnected when a structural invariant fails.
void validate_hypergraph(const Hypergraph& hg);

// Direction in [0, pi) of the longest circulation segment.
double circulation_frame(const Polygon& boundary, std::span<const Segment> circulation);

// Inverse subdivision: recursively finds straight cuts running along room
// walls that split the current region into two room groups. Throws
// NotBspRepresentable when some region admits no such cut.
Hypergraph encode_plan(const FloorPlan& plan);

PlanSkeleton apply(const Hypergraph& hg, const Polygon& boundary, RetentionMode mode, double target_frame_angle);

// Boundary annotated with facade and circulation, the input of a fit.
struct BoundarySpec {
    std::string id;
    Polygon polygon;
    std::vector<Segment> facade_edges;
    std::vector<Segment> circulation_edges;
};

// Anchors the graph on the boundary's circulation frame and carries the
// boundary annotations into the skeleton.
PlanSkeleton apply(const Hypergraph& hg, const BoundarySpec& target, RetentionMode mode);

// Reflection across the axis normal to the circulation frame.
Hypergraph mirror(const Hypergraph& hg);

}  // namespace hyperplan

#pragma once

#include "hyperplan/floorplan.hpp"
#include "hyperplan/furnishing.hpp"
#include "hyperplan/hypergraph.hpp"

#include <span>
#include <string>

namespace hyperplan {

// Byte-stable SVG: fixed decimal precision, elements in plan order.
std::string render_plan_svg(const FloorPlan& plan, std::span<const Placement> furniture = {});

// Subdivision tree in layers with rooms as leaves; access edges drawn as arcs
// below the leaf row.
std::string render_hypergraph_svg(const Hypergraph& hg);

}  // namespace hyperplan

#pragma once

#include "hyperplan/floorplan.hpp"
#include "hyperplan/hypergraph.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace hyperplan {

struct ValidityConfig {
    double delta_max = 0.1;         // accepted plan-level perimeter difference
    double facade_ratio_tol = 0.15;
    double footprint_tol = 0.20;    // |A_target / A_source - 1|
    double facade_min_overlap = 0.9;
    double min_room_width = 1.8;
    double max_aspect = 4.0;
    double passage_half_width = 0.45;
    double passage_reach_tol = 0.02;  // slack for the polygonized erosion
};

enum class FlagKind { FacadeBlocked, BadRoomGeometry, PassageTooThin, AccessUnrealizable };

std::string_view flag_name(FlagKind kind);

struct ValidityFlag {
    FlagKind kind = FlagKind::FacadeBlocked;
    std::string room_id;  // empty for AccessUnrealizable

    std::string to_string() const;
    friend auto operator<=>(const ValidityFlag&, const ValidityFlag&) = default;
};

struct ValidityReport {
    std::map<std::string, double> room_scores;  // delta_p per room id
    double delta_r = 0.0;
    std::set<ValidityFlag> flags;
    bool passed = false;
};

// |1 - (Ls_a * L_b) / (L_a * Ls_b)| with Ls = 4 sqrt(area). A is the
// reference; the score is not symmetric.
double perimeter_diff(const Polygon& a, const Polygon& b);

// Per-room scores for rooms matched by id; throws RoomSetMismatch.
std::map<std::string, double> room_perimeter_diffs(const FloorPlan& generated, const FloorPlan& source);
double plan_perimeter_diff(const FloorPlan& generated, const FloorPlan& source);

std::set<ValidityFlag> check_plan(const FloorPlan& plan, const ValidityConfig& config = {});

bool fit_filter(const Hypergraph& hg, const BoundarySpec& target, const ValidityConfig& config = {});

ValidityReport make_report(std::map<std::string, double> room_scores, std::set<ValidityFlag> flags,
                           const ValidityConfig& config = {});

}  // namespace hyperplan

#pragma once

#include "hyperplan/carbon.hpp"
#include "hyperplan/floorplan.hpp"
#include "hyperplan/furnishing.hpp"
#include "hyperplan/hypergraph.hpp"
#include "hyperplan/validity.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperplan {

enum class RankKey { delta_r, d_tot };

struct PipelineConfig {
    ValidityConfig validity;
    FurnishConfig furnish;
    double door_width = kDoorWidthMin;
    double multiplier = kFurnitureMultiplier;
    RetentionMode mode = RetentionMode::ratio_retain;
    RankKey rank_by = RankKey::delta_r;  // primary sort key; the other one breaks ties
};

enum class FitStage { filtered, apply_failed, doors_failed, no_source, rejected, accepted };

std::string_view stage_name(FitStage stage);

struct FitResult {
    std::string candidate_id;
    std::string hypergraph_id;
    bool mirrored = false;
    FitStage stage = FitStage::filtered;
    std::string detail;
    std::optional<FloorPlan> plan;
    ValidityReport validity;
    std::optional<FurnishResult> furnishing;
    std::optional<CarbonReport> carbon;

    bool accepted() const { return stage == FitStage::accepted; }
};

struct FitInputs {
    const BoundarySpec* boundary = nullptr;
    std::span<const Hypergraph> library;
    const std::map<std::string, FloorPlan>* sources = nullptr;  // by plan id
    const FurnitureCatalog* catalog = nullptr;
    // Optional; matched to candidates by candidate id.
    const std::map<std::string, PerformanceRecord>* performance = nullptr;
    const CityProfile* profile = nullptr;
};

std::string candidate_id(const BoundarySpec& boundary, const Hypergraph& hg);

// One library entry (or its mirror) on the boundary, through every stage.
FitResult evaluate_candidate(const FitInputs& in, const Hypergraph& hg, const PipelineConfig& config);

// Every hypergraph and its mirror; results in canonical order (accepted
// first by rank key, then the rejected ones by id). `jobs` workers evaluate
// candidates concurrently without affecting the output.
std::vector<FitResult> fit(const FitInputs& in, const PipelineConfig& config, int jobs = 1);

}  // namespace hyperplan

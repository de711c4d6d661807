#pragma once

#include "hyperplan/carbon.hpp"
#include "hyperplan/floorplan.hpp"
#include "hyperplan/furnishing.hpp"
#include "hyperplan/hypergraph.hpp"
#include "hyperplan/pipeline.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hyperplan {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Every record carries {"format": ..., "version": 1, "units": {...}}.
// Lengths are meters, areas square meters, angles radians.
json plan_to_json(const FloorPlan& plan);
TracedRecord traced_from_json(const json& j);
FloorPlan plan_from_json(const json& j);  // validated through ingest_traced

json hypergraph_to_json(const Hypergraph& hg);
Hypergraph hypergraph_from_json(const json& j);  // validated

json boundary_to_json(const BoundarySpec& b);
BoundarySpec boundary_from_json(const json& j);

json catalog_to_json(const FurnitureCatalog& c);
FurnitureCatalog catalog_from_json(const json& j);

json profiles_to_json(const std::vector<CityProfile>& profiles);
std::vector<CityProfile> profiles_from_json(const json& j);

json performance_to_json(const std::vector<PerformanceRecord>& records);
std::vector<PerformanceRecord> performance_from_json(const json& j);

json config_to_json(const PipelineConfig& config);
// Keys not present keep their defaults.
PipelineConfig config_from_json(const json& j);

// Parse failures are reported with line and column.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

// The "format" tag of a record, for commands that accept several kinds.
std::string record_format(const json& j);

struct CorpusBundle {
    std::filesystem::path root;
    std::string provenance;
    std::map<std::string, FloorPlan> plans;  // by id
    std::vector<Hypergraph> hypergraphs;     // sorted by id
    FurnitureCatalog catalog;
    std::vector<CityProfile> profiles;
    std::map<std::string, PerformanceRecord> performance;  // by apartment id
};

// Directory with manifest.json, plans/*.json, hypergraphs/*.json and
// optional catalog.json, profiles.json, performance.json. Missing catalog
// and profiles fall back to the built-in ones.
CorpusBundle load_corpus(const std::filesystem::path& dir);

struct Library {
    std::vector<Hypergraph> hypergraphs;     // sorted by id
    std::map<std::string, FloorPlan> plans;  // source plans, by id
};

// A corpus directory, or a flat directory holding hypergraph records and
// optionally their source plans. Throws EmptyLibrary without hypergraphs.
Library load_library(const std::filesystem::path& dir);

}  // namespace hyperplan

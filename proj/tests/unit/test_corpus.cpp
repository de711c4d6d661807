#include "builders.hpp"

#include "hyperplan/corpus.hpp"
#include "hyperplan/error.hpp"

#include <doctest.h>

using namespace hyperplan;
using namespace testing;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidRecord;
}

}  // namespace

TEST_CASE("plans and hypergraphs survive a JSON round trip") {
    for (const std::string& id : golden_plan_ids()) {
        CAPTURE(id);
        const FloorPlan plan = golden_plan(id);
        const json pj = plan_to_json(plan);
        CHECK(record_format(pj) == "hyperplan.plan");
        CHECK(plan_to_json(plan_from_json(pj)) == pj);

        const Hypergraph hg = encode_plan(plan);
        const json hj = hypergraph_to_json(hg);
        CHECK(hypergraph_from_json(hj) == hg);
        CHECK(hypergraph_from_json(hypergraph_to_json(mirror(hg))) == mirror(hg));
    }
}

TEST_CASE("catalog, profiles, boundary and config round trips") {
    const FurnitureCatalog& cat = default_catalog();
    const json cj = catalog_to_json(cat);
    CHECK(catalog_to_json(catalog_from_json(cj)) == cj);

    const json pj = profiles_to_json(builtin_profiles());
    const auto profiles = profiles_from_json(pj);
    REQUIRE(profiles.size() == 3);
    CHECK(profiles[2].grid_carbon == 0.128);
    CHECK(profiles_to_json(profiles) == pj);

    auto [facade, circ] = box_annotations(7, 8);
    const BoundarySpec b{"box", rect(0, 0, 7, 8), facade, circ};
    const BoundarySpec b2 = boundary_from_json(boundary_to_json(b));
    CHECK(b2.id == "box");
    CHECK(same_ring(b2.polygon, b.polygon));
    CHECK(b2.facade_edges.size() == 3);

    PipelineConfig cfg;
    cfg.validity.delta_max = 0.2;
    cfg.mode = RetentionMode::area_retain;
    const PipelineConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.validity.delta_max == 0.2);
    CHECK(back.mode == RetentionMode::area_retain);
    const json bare = {{"format", "hyperplan.config"}, {"version", 1}, {"units", {{"length", "m"}, {"area", "m2"}}}};
    CHECK(config_from_json(bare).validity.delta_max == PipelineConfig{}.validity.delta_max);
}

TEST_CASE("performance records round trip and keep provenance") {
    const auto recs = performance_from_json(read_json_file(golden_dir() / "performance.json"));
    CHECK(recs.size() == golden_plan_ids().size());
    for (const PerformanceRecord& r : recs) CHECK(r.provenance == "synthetic");
    const json j = performance_to_json(recs);
    CHECK(performance_to_json(performance_from_json(j)) == j);
}

TEST_CASE("records are checked for version, units and fields") {
    const json good = plan_to_json(golden_plan("studio_a"));

    json v = good;
    v["version"] = 2;
    CHECK(code_of([&] { plan_from_json(v); }) == ErrorCode::VersionMismatch);

    json u = good;
    u["units"]["length"] = "mm";
    CHECK(code_of([&] { plan_from_json(u); }) == ErrorCode::UnitMismatch);

    json no_units = good;
    no_units.erase("units");
    CHECK(code_of([&] { plan_from_json(no_units); }) == ErrorCode::ParseError);

    json missing = good;
    missing["rooms"][0].erase("polygon");
    CHECK(code_of([&] { plan_from_json(missing); }) == ErrorCode::ParseError);

    json wrong_type = good;
    wrong_type["rooms"][0]["polygon"] = "square";
    CHECK(code_of([&] { plan_from_json(wrong_type); }) == ErrorCode::ParseError);

    json program = good;
    program["rooms"][0]["program"] = "garage";
    CHECK(code_of([&] { plan_from_json(program); }) == ErrorCode::UnknownProgram);

    CHECK(code_of([&] { hypergraph_from_json(good); }) == ErrorCode::ParseError);
}

TEST_CASE("parse errors point at the offending line") {
    TempDir tmp("parse");
    const fs::path p = tmp.path / "bad.json";
    write_text(p, "{\n  \"format\": \"hyperplan.plan\",\n  \"version\": 1,\n  oops\n}\n");
    try {
        read_json_file(p);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(e.detail().find("line 4") != std::string::npos);
    }
}

TEST_CASE("the golden corpus loads with built-in catalog and profiles") {
    const CorpusBundle c = load_corpus(golden_dir());
    CHECK(c.plans.size() == 17);
    CHECK(c.hypergraphs.size() == 17);
    CHECK(c.performance.size() == 17);
    CHECK(c.profiles.size() == 3);
    CHECK(c.catalog.occupancies.size() == default_catalog().occupancies.size());
    CHECK_FALSE(c.provenance.empty());
    CHECK(std::is_sorted(c.hypergraphs.begin(), c.hypergraphs.end(),
                         [](const Hypergraph& a, const Hypergraph& b) { return a.id < b.id; }));
}

TEST_CASE("a flat library directory works and an empty one is rejected") {
    TempDir tmp("lib");
    for (const std::string id : {"studio_a", "onebed_a"}) {
        write_json_file(tmp.path / (id + ".json"), hypergraph_to_json(encode_plan(golden_plan(id))));
        write_json_file(tmp.path / (id + "_plan.json"), plan_to_json(golden_plan(id)));
    }
    const Library lib = load_library(tmp.path);
    CHECK(lib.hypergraphs.size() == 2);
    CHECK(lib.plans.size() == 2);
    fs::create_directories(tmp.path / "none");
    CHECK(code_of([&] { load_library(tmp.path / "none"); }) == ErrorCode::EmptyLibrary);
}

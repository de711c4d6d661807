#include "builders.hpp"

#include "hyperplan/corpus.hpp"
#include "hyperplan/pipeline.hpp"

#include <doctest.h>

using namespace hyperplan;
using namespace testing;

namespace {

BoundarySpec boundary_of(const FloorPlan& plan) {
    return {plan.id, plan.boundary, plan.facade_edges, plan.circulation_edges};
}

}  // namespace

TEST_CASE("fit over the golden corpus ranks the source plan first") {
    const CorpusBundle corpus = load_corpus(golden_dir());
    const BoundarySpec target = boundary_of(corpus.plans.at("threebed_a"));
    FitInputs in;
    in.boundary = &target;
    in.library = corpus.hypergraphs;
    in.sources = &corpus.plans;
    in.catalog = &corpus.catalog;
    const std::vector<FitResult> results = fit(in, PipelineConfig{});
    REQUIRE(results.size() == 2 * corpus.hypergraphs.size());
    REQUIRE(results.front().accepted());
    CHECK(results.front().hypergraph_id == "threebed_a");
    CHECK(results.front().validity.delta_r < 1e-9);

    bool seen_rejected = false;
    double prev = -1.0;
    for (const FitResult& r : results) {
        if (!r.accepted()) {
            seen_rejected = true;
            continue;
        }
        CHECK_FALSE(seen_rejected);  // accepted ones come first
        CHECK(r.validity.delta_r >= prev - 1e-15);
        prev = r.validity.delta_r;
        REQUIRE(r.furnishing.has_value());
        CHECK(r.furnishing->feasible);
    }
    const std::vector<FitResult> parallel = fit(in, PipelineConfig{}, 4);
    REQUIRE(parallel.size() == results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(parallel[i].candidate_id == results[i].candidate_id);
        CHECK(parallel[i].stage == results[i].stage);
    }
}

TEST_CASE("candidate stages") {
    const CorpusBundle corpus = load_corpus(golden_dir());
    const BoundarySpec target = boundary_of(corpus.plans.at("onebed_a"));
    FitInputs in;
    in.boundary = &target;
    in.library = corpus.hypergraphs;
    in.sources = &corpus.plans;
    in.catalog = &corpus.catalog;
    auto find = [&](const std::string& id) {
        for (const Hypergraph& hg : corpus.hypergraphs)
            if (hg.id == id) return hg;
        throw std::runtime_error(id);
    };
    CHECK(candidate_id(target, find("studio_a")) == "onebed_a/studio_a");
    CHECK(candidate_id(target, mirror(find("studio_a"))) == "onebed_a/studio_a~m");
    CHECK(evaluate_candidate(in, find("studio_a"), {}).stage == FitStage::filtered);
    CHECK(evaluate_candidate(in, find("onebed_a"), {}).stage == FitStage::accepted);

    const std::map<std::string, FloorPlan> none;
    in.sources = &none;
    CHECK(evaluate_candidate(in, find("onebed_a"), {}).stage == FitStage::no_source);
    CHECK(stage_name(FitStage::no_source) == "no_source");
}

#include "hyperplan/pipeline.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hyperplan {

std::string_view stage_name(FitStage stage) {
    switch (stage) {
        case FitStage::filtered: return "filtered";
        case FitStage::apply_failed: return "apply_failed";
        case FitStage::doors_failed: return "doors_failed";
        case FitStage::no_source: return "no_source";
        case FitStage::rejected: return "rejected";
        case FitStage::accepted: return "accepted";
    }
    return "";
}

std::string candidate_id(const BoundarySpec& boundary, const Hypergraph& hg) {
    return boundary.id + "/" + hg.id + (hg.source.mirrored ? "~m" : "");
}

FitResult evaluate_candidate(const FitInputs& in, const Hypergraph& hg, const PipelineConfig& config) {
    FitResult r;
    r.candidate_id = candidate_id(*in.boundary, hg);
    r.hypergraph_id = hg.id;
    r.mirrored = hg.source.mirrored;

    if (!fit_filter(hg, *in.boundary, config.validity)) {
        r.stage = FitStage::filtered;
        return r;
    }
    std::optional<PlanSkeleton> skeleton;
    try {
        skeleton = apply(hg, *in.boundary, config.mode);
    } catch (const Error& e) {
        r.stage = FitStage::apply_failed;
        r.detail = e.what();
        return r;
    }
    skeleton->id = r.candidate_id;

    try {
        r.plan = realize_doors(*skeleton, config.door_width);
    } catch (const Error& e) {
        r.stage = FitStage::doors_failed;
        r.detail = e.what();
        r.validity = make_report({}, {{FlagKind::AccessUnrealizable, ""}}, config.validity);
        return r;
    }

    const FloorPlan* source = nullptr;
    if (in.sources != nullptr) {
        auto it = in.sources->find(hg.source.plan_id);
        if (it != in.sources->end()) source = &it->second;
    }
    if (source == nullptr) {
        r.stage = FitStage::no_source;
        r.detail = "source plan " + hg.source.plan_id + " not available";
        return r;
    }
    try {
        r.validity = make_report(room_perimeter_diffs(*r.plan, *source), check_plan(*r.plan, config.validity),
                                 config.validity);
        if (!r.validity.passed) {
            r.stage = FitStage::rejected;
            r.detail = r.validity.flags.empty() ? "perimeter difference" : r.validity.flags.begin()->to_string();
            return r;
        }
        r.furnishing = furnish_plan(*r.plan, *in.catalog, config.furnish);
        if (in.performance != nullptr && in.profile != nullptr) {
            auto it = in.performance->find(r.candidate_id);
            if (it != in.performance->end()) {
                r.carbon = carbon_report(*r.plan, r.furnishing->f_tot, it->second, *in.profile, config.multiplier);
                r.carbon->valid = r.furnishing->feasible;
            }
        }
    } catch (const Error& e) {
        r.stage = FitStage::rejected;
        r.detail = e.what();
        return r;
    }
    if (!r.furnishing->feasible) {
        r.stage = FitStage::rejected;
        r.detail = "furnishing infeasible";
        return r;
    }
    r.stage = FitStage::accepted;
    return r;
}

namespace {

bool rank_before(const FitResult& a, const FitResult& b, RankKey key) {
    if (a.accepted() != b.accepted()) return a.accepted();
    if (a.accepted()) {
        const double da = a.carbon ? a.carbon->d_tot : -1.0;
        const double db = b.carbon ? b.carbon->d_tot : -1.0;
        if (key == RankKey::delta_r) {
            if (a.validity.delta_r != b.validity.delta_r) return a.validity.delta_r < b.validity.delta_r;
            if (da != db) return da > db;
        } else {
            if (da != db) return da > db;
            if (a.validity.delta_r != b.validity.delta_r) return a.validity.delta_r < b.validity.delta_r;
        }
    }
    if (a.hypergraph_id != b.hypergraph_id) return a.hypergraph_id < b.hypergraph_id;
    return a.mirrored < b.mirrored;
}

}  // namespace

std::vector<FitResult> fit(const FitInputs& in, const PipelineConfig& config, int jobs) {
    if (in.library.empty()) throw Error(ErrorCode::EmptyLibrary, "library has no hypergraphs");
    if (in.boundary == nullptr || in.catalog == nullptr) throw Error(ErrorCode::InvalidRecord, "incomplete fit inputs");
    circulation_frame(in.boundary->polygon, in.boundary->circulation_edges);

    std::vector<Hypergraph> candidates;
    candidates.reserve(in.library.size() * 2);
    for (const Hypergraph& hg : in.library) {
        candidates.push_back(hg);
        candidates.push_back(mirror(hg));
    }
    std::vector<FitResult> results(candidates.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < candidates.size(); i = next++) {
            results[i] = evaluate_candidate(in, candidates[i], config);
        }
    };
    const int workers = std::clamp(jobs, 1, static_cast<int>(candidates.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    std::stable_sort(results.begin(), results.end(),
                     [&](const FitResult& a, const FitResult& b) { return rank_before(a, b, config.rank_by); });
    return results;
}

}  // namespace hyperplan

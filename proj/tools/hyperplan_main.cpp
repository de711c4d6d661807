#include "hyperplan/analysis.hpp"
#include "hyperplan/carbon.hpp"
#include "hyperplan/corpus.hpp"
#include "hyperplan/error.hpp"
#include "hyperplan/furnishing.hpp"
#include "hyperplan/hypergraph.hpp"
#include "hyperplan/pipeline.hpp"
#include "hyperplan/render.hpp"
#include "hyperplan/validity.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace hyperplan;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidRecord, "cannot write " + out_path);
    out << text;
}

std::string safe_name(std::string s) {
    for (char& c : s) {
        if (c == '/' || c == '\\' || c == ' ' || c == ':') c = '_';
    }
    return s;
}

struct Common {
    std::string config_path;
    std::string mode;
    std::string catalog_path;
    std::string profile = "zurich";
    std::string profiles_path;

    PipelineConfig config() const {
        PipelineConfig c = config_path.empty() ? PipelineConfig{} : config_from_json(read_json_file(config_path));
        if (mode == "ratio") c.mode = RetentionMode::ratio_retain;
        if (mode == "area") c.mode = RetentionMode::area_retain;
        return c;
    }
    FurnitureCatalog catalog() const {
        return catalog_path.empty() ? default_catalog() : catalog_from_json(read_json_file(catalog_path));
    }
    CityProfile city() const {
        const auto profiles =
            profiles_path.empty() ? builtin_profiles() : profiles_from_json(read_json_file(profiles_path));
        return find_profile(profiles, profile);
    }
};

int cmd_encode(const std::string& plan_path, const std::string& out) {
    const FloorPlan plan = plan_from_json(read_json_file(plan_path));
    emit(hypergraph_to_json(encode_plan(plan)).dump(2) + "\n", out);
    return 0;
}

int cmd_apply(const Common& common, const std::string& hg_path, const std::string& boundary_path, bool mirrored,
              const std::string& out) {
    Hypergraph hg = hypergraph_from_json(read_json_file(hg_path));
    if (mirrored) hg = mirror(hg);
    const BoundarySpec target = boundary_from_json(read_json_file(boundary_path));
    const PipelineConfig config = common.config();
    PlanSkeleton skeleton = apply(hg, target, config.mode);
    const FloorPlan plan = realize_doors(skeleton, config.door_width);
    emit(plan_to_json(plan).dump(2) + "\n", out);
    return 0;
}

int cmd_fit(const Common& common, const std::string& boundary_path, const std::string& library_path, int jobs,
            const std::string& svg_dir, const std::string& performance_path, bool all) {
    const BoundarySpec target = boundary_from_json(read_json_file(boundary_path));
    const Library lib = load_library(library_path);
    const PipelineConfig config = common.config();
    const FurnitureCatalog catalog = common.catalog();

    std::map<std::string, PerformanceRecord> performance;
    std::optional<CityProfile> city;
    if (!performance_path.empty()) {
        for (PerformanceRecord& r : performance_from_json(read_json_file(performance_path))) {
            const std::string id = r.apartment_id;
            performance.emplace(id, std::move(r));
        }
        city = common.city();
    }
    FitInputs in;
    in.boundary = &target;
    in.library = lib.hypergraphs;
    in.sources = &lib.plans;
    in.catalog = &catalog;
    if (city) {
        in.performance = &performance;
        in.profile = &*city;
    }
    const std::vector<FitResult> results = fit(in, config, jobs);

    std::ostringstream csv;
    csv << "rank,candidate_id,hypergraph_id,mirrored,stage,delta_r,f_tot[m2],feasible,d_tot[-],c_e[kgCO2e/yr],"
           "delta_e[kgCO2e/yr],detail\n";
    int rank = 0;
    int accepted = 0;
    for (const FitResult& r : results) {
        if (r.accepted()) ++accepted;
        if (!r.accepted() && !all) continue;
        csv << (r.accepted() ? std::to_string(++rank) : std::string("-")) << ',' << r.candidate_id << ','
            << r.hypergraph_id << ',' << (r.mirrored ? 1 : 0) << ',' << stage_name(r.stage) << ','
            << (r.plan && !r.validity.room_scores.empty() ? fmt(r.validity.delta_r) : "") << ','
            << (r.furnishing ? fmt(r.furnishing->f_tot) : "") << ','
            << (r.furnishing ? (r.furnishing->feasible ? "1" : "0") : "") << ','
            << (r.carbon ? fmt(r.carbon->d_tot) : "") << ',' << (r.carbon ? fmt(r.carbon->c_e) : "") << ','
            << (r.carbon ? fmt(r.carbon->delta_e) : "") << ',' << '"' << r.detail << '"' << '\n';
        if (!svg_dir.empty() && r.plan) {
            fs::create_directories(svg_dir);
            std::vector<Placement> furniture;
            if (r.furnishing) {
                for (const RoomFurnishing& rf : r.furnishing->rooms) {
                    furniture.insert(furniture.end(), rf.placements.begin(), rf.placements.end());
                }
            }
            emit(render_plan_svg(*r.plan, furniture), (fs::path(svg_dir) / (safe_name(r.candidate_id) + ".svg")).string());
        }
    }
    std::cout << csv.str();
    std::cerr << "evaluated " << results.size() << " candidates, accepted " << accepted << "\n";
    return accepted > 0 ? 0 : 2;
}

int cmd_furnish(const Common& common, const std::string& plan_path, const std::string& svg_dir) {
    const FloorPlan plan = plan_from_json(read_json_file(plan_path));
    const PipelineConfig config = common.config();
    const FurnishResult res = furnish_plan(plan, common.catalog(), config.furnish);
    std::cout << "room_id,block,feasible,x[m],y[m],rotation[rad]\n";
    std::vector<Placement> all;
    for (const RoomFurnishing& rf : res.rooms) {
        if (!rf.feasible) {
            for (const std::string& b : rf.required) std::cout << rf.room_id << ',' << b << ",0,,,\n";
            continue;
        }
        for (const Placement& p : rf.placements) {
            std::cout << rf.room_id << ',' << p.block << ",1," << fmt(p.position.x) << ',' << fmt(p.position.y) << ','
                      << fmt(p.rotation) << '\n';
            all.push_back(p);
        }
    }
    std::cout << "# placed_area[m2]=" << fmt(res.placed_area) << " extra_area[m2]=" << fmt(res.extra_area)
              << " min_area[m2]=" << fmt(res.min_area) << " f_tot[m2]=" << fmt(res.f_tot)
              << " feasible=" << (res.feasible ? 1 : 0) << '\n';
    if (!svg_dir.empty()) {
        fs::create_directories(svg_dir);
        emit(render_plan_svg(plan, all), (fs::path(svg_dir) / (safe_name(plan.id) + ".svg")).string());
    }
    return 0;
}

int cmd_score(const Common& common, const std::string& plan_path, const std::string& performance_path) {
    const FloorPlan plan = plan_from_json(read_json_file(plan_path));
    const auto records = performance_from_json(read_json_file(performance_path));
    const PerformanceRecord* record = nullptr;
    for (const PerformanceRecord& r : records) {
        if (r.apartment_id == plan.id) record = &r;
    }
    if (record == nullptr) throw Error(ErrorCode::IdMismatch, "no performance record for " + plan.id);
    const PipelineConfig config = common.config();
    const CityProfile city = common.city();
    const FurnishResult furnishing = furnish_plan(plan, common.catalog(), config.furnish);
    const CarbonReport report = carbon_report(plan, furnishing.f_tot, *record, city, config.multiplier);
    std::string flags;
    for (const ValidityFlag& f : check_plan(plan, config.validity)) flags += (flags.empty() ? "" : ";") + f.to_string();

    std::cout << "apartment_id,city,g_cc[kgCO2e/kWh],area[m2],f_tot[m2],feasible,a_e[m2],eui_s[kWh/m2/yr],"
                 "eui_hp[kWh/m2/yr],c_e[kgCO2e/yr],delta_e[kgCO2e/yr],d_tot[-],flags\n";
    std::cout << report.apartment_id << ',' << report.city << ',' << fmt(report.grid_carbon) << ','
              << fmt(report.area) << ',' << fmt(report.f_tot) << ',' << (furnishing.feasible ? 1 : 0) << ','
              << fmt(report.a_e) << ',' << fmt(record->eui_standard) << ',' << fmt(record->eui_high) << ','
              << fmt(report.c_e) << ',' << fmt(report.delta_e) << ',' << fmt(report.d_tot) << ',' << flags << '\n';
    return 0;
}

struct FeatureRows {
    std::vector<std::string> ids;
    std::vector<FeatureVector> rows;
};

FeatureRows corpus_features(const std::string& corpus_path) {
    const CorpusBundle bundle = load_corpus(corpus_path);
    FeatureRows out;
    for (const auto& [id, plan] : bundle.plans) {
        const Hypergraph* hg = nullptr;
        for (const Hypergraph& h : bundle.hypergraphs) {
            if (h.source.plan_id == id && !h.source.mirrored) {
                hg = &h;
                break;
            }
        }
        std::optional<Hypergraph> encoded;
        if (hg == nullptr) {
            try {
                encoded = encode_plan(plan);
                hg = &*encoded;
            } catch (const Error& e) {
                std::cerr << "skipping " << id << ": " << e.what() << '\n';
                continue;
            }
        }
        out.ids.push_back(id);
        out.rows.push_back(features(*hg, plan));
    }
    return out;
}

int cmd_features(const std::string& corpus_path) {
    const FeatureRows fr = corpus_features(corpus_path);
    std::cout << "# feature_set_version=" << kFeatureSetVersion << '\n' << "plan_id";
    for (std::string_view name : kFeatureNames) std::cout << ',' << name;
    std::cout << '\n';
    for (std::size_t i = 0; i < fr.rows.size(); ++i) {
        std::cout << fr.ids[i];
        for (double v : fr.rows[i]) std::cout << ',' << fmt(v);
        std::cout << '\n';
    }
    return 0;
}

int cmd_pca(const std::string& corpus_path, int components) {
    const FeatureRows fr = corpus_features(corpus_path);
    Eigen::MatrixXd x(static_cast<Eigen::Index>(fr.rows.size()), static_cast<Eigen::Index>(kFeatureCount));
    for (std::size_t i = 0; i < fr.rows.size(); ++i) {
        for (std::size_t j = 0; j < kFeatureCount; ++j) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = fr.rows[i][j];
    }
    const PcaModel model = pca_fit(x);
    const Eigen::MatrixXd proj = model.project(x);
    const int k = std::clamp(components, 1, static_cast<int>(kFeatureCount));
    std::cout << "# feature_set_version=" << kFeatureSetVersion << '\n';
    std::cout << "# explained_variance=";
    for (int c = 0; c < k; ++c) std::cout << (c ? ";" : "") << fmt(model.explained(c));
    std::cout << '\n';
    if (model.degenerate) std::cout << "# warning=DegenerateVariance\n";
    std::cout << "plan_id";
    for (int c = 0; c < k; ++c) std::cout << ",pc" << c + 1;
    std::cout << '\n';
    for (std::size_t i = 0; i < fr.ids.size(); ++i) {
        std::cout << fr.ids[i];
        for (int c = 0; c < k; ++c) std::cout << ',' << fmt(proj(static_cast<Eigen::Index>(i), c));
        std::cout << '\n';
    }
    return 0;
}

int cmd_render(const Common& common, const std::string& path, bool furnish, const std::string& out) {
    const json j = read_json_file(path);
    const std::string format = record_format(j);
    if (format == "hyperplan.hypergraph") {
        emit(render_hypergraph_svg(hypergraph_from_json(j)), out);
        return 0;
    }
    const FloorPlan plan = plan_from_json(j);
    std::vector<Placement> furniture;
    if (furnish) {
        const FurnishResult res = furnish_plan(plan, common.catalog(), common.config().furnish);
        for (const RoomFurnishing& rf : res.rooms) {
            furniture.insert(furniture.end(), rf.placements.begin(), rf.placements.end());
        }
    }
    emit(render_plan_svg(plan, furniture), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floor plan subdivision graphs: encode, apply, fit, furnish, score and analyze apartment plans"};
    app.require_subcommand(1);
    Common common;
    unsigned seed = 0;
    app.add_option("--seed", seed, "Reserved; the pipeline is deterministic");

    auto add_config = [&](CLI::App* sub) { sub->add_option("--config", common.config_path, "Pipeline config file"); };
    auto add_catalog = [&](CLI::App* sub) { sub->add_option("--catalog", common.catalog_path, "Furniture catalog file"); };
    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--profile", common.profile, "City profile name")->capture_default_str();
        sub->add_option("--profiles", common.profiles_path, "City profiles file (default: built-in)");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", common.mode, "Retention mode")->check(CLI::IsMember({"ratio", "area"}));
    };

    std::string in1, in2, out, svg_dir, performance_path;
    int jobs = 1;
    int components = 2;
    bool mirrored = false, all = false, furnish = false;

    auto* encode = app.add_subcommand("encode", "Encode a traced plan as a hypergraph");
    encode->add_option("plan", in1)->required();
    encode->add_option("-o,--out", out);

    auto* apply_cmd = app.add_subcommand("apply", "Apply a hypergraph to a boundary");
    apply_cmd->add_option("hypergraph", in1)->required();
    apply_cmd->add_option("boundary", in2)->required();
    apply_cmd->add_flag("--mirror", mirrored, "Apply the mirrored hypergraph");
    apply_cmd->add_option("-o,--out", out);
    add_config(apply_cmd);
    add_mode(apply_cmd);

    auto* fit_cmd = app.add_subcommand("fit", "Fit a hypergraph library to a boundary");
    fit_cmd->add_option("boundary", in1)->required();
    fit_cmd->add_option("library", in2)->required();
    fit_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--svg-out", svg_dir, "Write one SVG per listed candidate");
    fit_cmd->add_option("--performance", performance_path, "Performance records for the candidates");
    fit_cmd->add_flag("--all", all, "List rejected candidates too");
    add_config(fit_cmd);
    add_mode(fit_cmd);
    add_catalog(fit_cmd);
    add_profile(fit_cmd);

    auto* furnish_cmd = app.add_subcommand("furnish", "Furnish a plan");
    furnish_cmd->add_option("plan", in1)->required();
    furnish_cmd->add_option("--svg-out", svg_dir);
    add_config(furnish_cmd);
    add_catalog(furnish_cmd);

    auto* score = app.add_subcommand("score", "Carbon and daylight report for a plan");
    score->add_option("plan", in1)->required();
    score->add_option("performance", in2)->required();
    add_config(score);
    add_catalog(score);
    add_profile(score);

    auto* features_cmd = app.add_subcommand("features", "Feature matrix of a corpus");
    features_cmd->add_option("corpus", in1)->required();

    auto* pca = app.add_subcommand("pca", "Principal component projection of a corpus");
    pca->add_option("corpus", in1)->required();
    pca->add_option("--components", components, "Number of components to print")->capture_default_str();

    auto* render = app.add_subcommand("render", "Render a plan or hypergraph as SVG");
    render->add_option("record", in1)->required();
    render->add_flag("--furnish", furnish, "Furnish the plan and draw the blocks");
    render->add_option("-o,--out", out);
    add_catalog(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*encode) return cmd_encode(in1, out);
        if (*apply_cmd) return cmd_apply(common, in1, in2, mirrored, out);
        if (*fit_cmd) return cmd_fit(common, in1, in2, jobs, svg_dir, performance_path, all);
        if (*furnish_cmd) return cmd_furnish(common, in1, svg_dir);
        if (*score) return cmd_score(common, in1, in2);
        if (*features_cmd) return cmd_features(in1);
        if (*pca) return cmd_pca(in1, components);
        if (*render) return cmd_render(common, in1, furnish, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_domain_failure(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

#pragma once

#include "hyperplan/corpus.hpp"
#include "hyperplan/floorplan.hpp"
#include "hyperplan/geometry.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <unistd.h>
#include <vector>

namespace testing {

using namespace hyperplan;
namespace fs = std::filesystem;

inline Polygon rect(double x0, double y0, double x1, double y1) { return Polygon::rectangle(x0, y0, x1, y1); }

inline fs::path data_dir() { return HYPERPLAN_DATA_DIR; }
inline fs::path golden_dir() { return data_dir() / "golden"; }
inline fs::path golden_files_dir() { return HYPERPLAN_GOLDEN_DIR; }

inline FloorPlan golden_plan(const std::string& id) {
    return plan_from_json(read_json_file(golden_dir() / "plans" / (id + ".json")));
}

inline std::vector<std::string> golden_plan_ids() {
    std::vector<std::string> ids;
    for (const auto& e : fs::directory_iterator(golden_dir() / "plans")) ids.push_back(e.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

struct RoomSpec {
    std::string id;
    RoomProgram program;
    Polygon polygon;
};

// Boundary edges of an axis-aligned union are not needed here: every plan
// below is built from a rectangle or a polygon passed explicitly.
inline FloorPlan make_plan(const std::string& id, const Polygon& boundary, std::vector<RoomSpec> rooms,
                           std::vector<Segment> facade, std::vector<Segment> circulation,
                           std::vector<AccessEdge> access, const std::string& entrance) {
    PlanSkeleton sk{id, boundary, {}, {}, entrance, std::move(facade), std::move(circulation)};
    for (RoomSpec& r : rooms) sk.rooms.push_back({r.id, r.program, r.polygon});
    for (auto& [a, b] : access) sk.access_edges.push_back(make_access_edge(a, b));
    FloorPlan plan = realize_doors(sk);
    return ingest_traced(to_record(plan));
}

inline std::vector<Segment> edges_of(const Polygon& p) {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.edge(i));
    return out;
}

// w x h box: bottom edge is circulation, the other three are facade.
inline std::pair<std::vector<Segment>, std::vector<Segment>> box_annotations(double w, double h) {
    return {{{{w, 0}, {w, h}}, {{w, h}, {0, h}}, {{0, h}, {0, 0}}}, {{{0, 0}, {w, 0}}}};
}

inline FloorPlan two_room_plan(double w = 8.0, double h = 5.0) {
    auto [facade, circ] = box_annotations(w, h);
    return make_plan("two_halves", rect(0, 0, w, h),
                     {{"a", RoomProgram::living, rect(0, 0, w, h / 2)},
                      {"b", RoomProgram::bedroom, rect(0, h / 2, w, h)}},
                     facade, circ, {{"a", "b"}}, "a");
}

inline FloorPlan single_room_plan(double side = 6.0) {
    auto [facade, circ] = box_annotations(side, side);
    return make_plan("single", rect(0, 0, side, side), {{"studio", RoomProgram::living, rect(0, 0, side, side)}},
                     facade, circ, {}, "studio");
}

// Five rooms arranged as a pinwheel around a central square: no straight
// chord of the outer square runs entirely along walls.
inline FloorPlan pinwheel_plan() {
    auto [facade, circ] = box_annotations(9, 9);
    return make_plan("pinwheel", rect(0, 0, 9, 9),
                     {{"r1", RoomProgram::living, rect(0, 0, 6, 3)},
                      {"r2", RoomProgram::bedroom, rect(6, 0, 9, 6)},
                      {"r3", RoomProgram::kitchen, rect(3, 6, 9, 9)},
                      {"r4", RoomProgram::bedroom, rect(0, 3, 3, 9)},
                      {"hub", RoomProgram::foyer, rect(3, 3, 6, 6)}},
                     facade, circ, {{"r1", "hub"}, {"hub", "r2"}, {"hub", "r3"}, {"hub", "r4"}}, "r1");
}

// Four rooms: the pinwheel with the hub merged into the first arm, which
// becomes an L.
inline FloorPlan pinwheel_l_plan() {
    auto [facade, circ] = box_annotations(9, 9);
    return make_plan("pinwheel_l", rect(0, 0, 9, 9),
                     {{"r1", RoomProgram::living, Polygon({{0, 0}, {6, 0}, {6, 6}, {3, 6}, {3, 3}, {0, 3}})},
                      {"r2", RoomProgram::bedroom, rect(6, 0, 9, 6)},
                      {"r3", RoomProgram::kitchen, rect(3, 6, 9, 9)},
                      {"r4", RoomProgram::bedroom, rect(0, 3, 3, 9)}},
                     facade, circ, {{"r1", "r2"}, {"r1", "r3"}, {"r1", "r4"}}, "r1");
}

// O -> A1, A2; A2 -> B1, B2; B2 -> C1, C2; A1 -> D1, D2.
inline FloorPlan staged_plan() {
    auto [facade, circ] = box_annotations(12, 8);
    return make_plan("staged", rect(0, 0, 12, 8),
                     {{"d1", RoomProgram::living, rect(0, 0, 5, 4)},
                      {"d2", RoomProgram::bedroom, rect(0, 4, 5, 8)},
                      {"b1", RoomProgram::kitchen, rect(5, 5, 12, 8)},
                      {"c1", RoomProgram::bath, rect(5, 0, 8, 5)},
                      {"c2", RoomProgram::bedroom, rect(8, 0, 12, 5)}},
                     facade, circ, {{"d1", "d2"}, {"d1", "c1"}, {"c1", "c2"}, {"d2", "b1"}}, "d1");
}

// Failure cases: each should raise one flag.
inline FloorPlan blocked_bedroom_plan() {
    // 12 x 6, facade only along the top; the bedroom sits behind the living room.
    const Polygon boundary = rect(0, 0, 12, 6);
    return make_plan("blocked_bedroom", boundary,
                     {{"living", RoomProgram::living, rect(0, 0, 6, 6)},
                      {"bed", RoomProgram::bedroom, rect(6, 0, 10, 3.5)},
                      {"kitchen", RoomProgram::kitchen, rect(6, 3.5, 12, 6)},
                      {"bath", RoomProgram::bath, rect(10, 0, 12, 3.5)}},
                     {{{12, 6}, {0, 6}}}, {{{0, 0}, {6, 0}}},
                     {{"living", "bed"}, {"living", "kitchen"}, {"bed", "bath"}}, "living");
}

inline FloorPlan thin_foyer_plan() {
    // A 6 x 0.8 m entry strip along the corridor.
    auto [facade, circ] = box_annotations(6, 6);
    return make_plan("thin_foyer", rect(0, 0, 6, 6),
                     {{"foyer", RoomProgram::foyer, rect(0, 0, 6, 0.8)},
                      {"living", RoomProgram::living, rect(0, 0.8, 6, 6)}},
                     facade, circ, {{"foyer", "living"}}, "foyer");
}

inline FloorPlan sliver_room_plan() {
    // 12 x 2 living room: aspect 6.
    auto [facade, circ] = box_annotations(12, 6);
    return make_plan("sliver", rect(0, 0, 12, 6),
                     {{"living", RoomProgram::living, rect(0, 0, 12, 2)},
                      {"bed", RoomProgram::bedroom, rect(0, 2, 6, 6)},
                      {"kitchen", RoomProgram::kitchen, rect(6, 2, 12, 6)}},
                     facade, circ, {{"living", "bed"}, {"living", "kitchen"}}, "living");
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

// Runs the CLI with the given arguments; stderr is merged into `out` when asked.
inline CliRun run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
    std::string cmd = shell_quote(HYPERPLAN_CLI);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    CliRun run;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return run;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), n);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

inline std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("hyperplan_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

}  // namespace testing

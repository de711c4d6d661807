#include "hyperplan/corpus.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperplan {

namespace fs = std::filesystem;

namespace {

// Read-side view of a JSON value that remembers where it came from, so
// failures name the offending field.
class Field {
public:
    Field(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const json& raw() const { return *j_; }
    const std::string& path() const { return path_; }

    bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

    Field at(const char* key) const {
        if (!j_->is_object()) fail("expected an object");
        auto it = j_->find(key);
        if (it == j_->end()) throw Error(ErrorCode::ParseError, "missing field " + child(key));
        return {*it, child(key)};
    }

    std::vector<Field> items() const {
        if (!j_->is_array()) fail("expected an array");
        std::vector<Field> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]");
        return out;
    }

    double number() const {
        if (!j_->is_number()) fail("expected a number");
        return j_->get<double>();
    }
    int integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<int>();
    }
    std::string str() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }
    bool boolean() const {
        if (!j_->is_boolean()) fail("expected true or false");
        return j_->get<bool>();
    }

    Point2 point() const {
        if (!j_->is_array() || j_->size() != 2) fail("expected [x, y]");
        const auto xy = items();
        return {xy[0].number(), xy[1].number()};
    }
    std::vector<Point2> points() const {
        std::vector<Point2> out;
        for (const Field& f : items()) out.push_back(f.point());
        return out;
    }
    Segment segment() const {
        if (!j_->is_array() || j_->size() != 2) fail("expected [[x, y], [x, y]]");
        const auto ab = items();
        return {ab[0].point(), ab[1].point()};
    }
    std::vector<Segment> segments() const {
        std::vector<Segment> out;
        for (const Field& f : items()) out.push_back(f.segment());
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, (path_.empty() ? std::string("<root>") : path_) + ": " + what);
    }

private:
    std::string child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

    const json* j_;
    std::string path_;
};

using Units = std::vector<std::pair<const char*, const char*>>;

json header(const char* format, const Units& units) {
    json j = json::object();
    j["format"] = format;
    j["version"] = kFormatVersion;
    json u = json::object();
    for (const auto& [k, v] : units) u[k] = v;
    j["units"] = u;
    return j;
}

void check_header(const Field& f, const char* format, const Units& units) {
    const std::string got = f.at("format").str();
    if (got != format) f.fail(std::string("expected a ") + format + " record, found " + got);
    const int version = f.at("version").integer();
    if (version != kFormatVersion) {
        throw Error(ErrorCode::VersionMismatch,
                    std::string(format) + " version " + std::to_string(version) + ", reader supports " +
                        std::to_string(kFormatVersion));
    }
    const Field u = f.at("units");
    for (const auto& [k, v] : units) {
        if (!u.has(k)) throw Error(ErrorCode::UnitMismatch, std::string(format) + " lacks a unit for " + k);
        const std::string given = u.at(k).str();
        if (given != v) {
            throw Error(ErrorCode::UnitMismatch, std::string(format) + " " + k + " in " + given + ", expected " + v);
        }
    }
}

const Units kGeometryUnits{{"length", "m"}, {"angle", "rad"}};
const Units kHypergraphUnits{{"length", "m"}, {"area", "m2"}, {"angle", "rad"}};
const Units kCatalogUnits{{"length", "m"}, {"area", "m2"}};
const Units kProfileUnits{{"grid_carbon", "kgCO2e/kWh"}, {"u_value", "W/m2K"}};
const Units kPerformanceUnits{{"eui", "kWh/m2/yr"}, {"sda", "fraction"}};

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json ring_json(std::span<const Point2> ring) {
    json a = json::array();
    for (const Point2& p : ring) a.push_back(point_json(p));
    return a;
}

json segments_json(std::span<const Segment> segs) {
    json a = json::array();
    for (const Segment& s : segs) a.push_back(json::array({point_json(s.a), point_json(s.b)}));
    return a;
}

template <class T>
T guarded(const Field& f, T (*parse)(const Field&)) {
    try {
        return parse(f);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(e.code(), f.path() + ": " + e.detail());
    }
}

}  // namespace

std::string record_format(const json& j) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) {
        throw Error(ErrorCode::ParseError, "record has no format tag");
    }
    return j["format"].get<std::string>();
}

json plan_to_json(const FloorPlan& plan) {
    json j = header("hyperplan.plan", kGeometryUnits);
    j["id"] = plan.id;
    j["boundary"] = ring_json(plan.boundary.vertices());
    json rooms = json::array();
    for (const Room& r : plan.rooms) {
        rooms.push_back({{"id", r.id}, {"program", program_name(r.program)}, {"polygon", ring_json(r.polygon.vertices())}});
    }
    j["rooms"] = rooms;
    j["facade"] = segments_json(plan.facade_edges);
    j["circulation"] = segments_json(plan.circulation_edges);
    json doors = json::array();
    for (const Door& d : plan.doors) {
        doors.push_back({{"rooms", json::array({d.room_a, d.room_b})},
                         {"segment", segments_json(std::span<const Segment>(&d.segment, 1))[0]},
                         {"width", d.width}});
    }
    j["doors"] = doors;
    return j;
}

TracedRecord traced_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.plan", kGeometryUnits);
    TracedRecord rec;
    rec.id = f.at("id").str();
    rec.boundary = f.at("boundary").points();
    for (const Field& r : f.at("rooms").items()) {
        rec.rooms.push_back({r.at("id").str(), r.at("program").str(), r.at("polygon").points()});
    }
    rec.facade = f.at("facade").segments();
    rec.circulation = f.at("circulation").segments();
    for (const Field& d : f.at("doors").items()) {
        const auto ends = d.at("rooms").items();
        if (ends.size() != 2) d.at("rooms").fail("a door joins exactly two rooms");
        TracedDoor door{{ends[0].str(), ends[1].str()}, d.at("segment").segment(), kDoorWidthMin};
        door.width = d.has("width") ? d.at("width").number() : door.segment.length();
        rec.doors.push_back(std::move(door));
    }
    return rec;
}

FloorPlan plan_from_json(const json& j) { return ingest_traced(traced_from_json(j)); }

namespace {

json node_json(const SubdivNode& n) {
    json j{{"id", n.id}, {"area_abs", n.area_abs}, {"area_ratio", n.area_ratio}};
    if (n.is_leaf()) {
        j["program"] = program_name(*n.program);
        j["room_id"] = n.room_id;
    } else {
        j["angle"] = n.angle;
        j["children"] = json::array({node_json(n.children[0]), node_json(n.children[1])});
    }
    return j;
}

SubdivNode node_from(const Field& f) {
    SubdivNode n;
    n.id = f.at("id").str();
    n.area_abs = f.at("area_abs").number();
    n.area_ratio = f.at("area_ratio").number();
    if (f.has("children")) {
        n.angle = f.at("angle").number();
        for (const Field& c : f.at("children").items()) n.children.push_back(node_from(c));
        if (n.children.size() != 2) f.at("children").fail("an internal node has exactly two children");
    } else {
        n.program = guarded<RoomProgram>(f.at("program"), [](const Field& p) { return parse_program(p.str()); });
        n.room_id = f.at("room_id").str();
    }
    return n;
}

}  // namespace

json hypergraph_to_json(const Hypergraph& hg) {
    json j = header("hyperplan.hypergraph", kHypergraphUnits);
    j["id"] = hg.id;
    j["frame_angle"] = hg.frame_angle;
    j["entrance_room"] = hg.entrance_room;
    json edges = json::array();
    for (const auto& [a, b] : hg.access_edges) edges.push_back(json::array({a, b}));
    j["access_edges"] = edges;
    j["facade_rooms"] = hg.facade_rooms;
    j["source"] = {{"plan_id", hg.source.plan_id},
                   {"citation", hg.source.citation},
                   {"mirrored", hg.source.mirrored},
                   {"facade_ratio", hg.source.facade_ratio}};
    j["root"] = node_json(hg.root);
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.hypergraph", kHypergraphUnits);
    Hypergraph hg;
    hg.id = f.at("id").str();
    hg.frame_angle = f.at("frame_angle").number();
    hg.entrance_room = f.at("entrance_room").str();
    std::set<AccessEdge> edges;
    for (const Field& e : f.at("access_edges").items()) {
        const auto ends = e.items();
        if (ends.size() != 2) e.fail("an access edge joins exactly two rooms");
        edges.insert(make_access_edge(ends[0].str(), ends[1].str()));
    }
    hg.access_edges.assign(edges.begin(), edges.end());
    for (const Field& r : f.at("facade_rooms").items()) hg.facade_rooms.push_back(r.str());
    std::sort(hg.facade_rooms.begin(), hg.facade_rooms.end());
    const Field src = f.at("source");
    hg.source.plan_id = src.at("plan_id").str();
    hg.source.citation = src.has("citation") ? src.at("citation").str() : "";
    hg.source.mirrored = src.at("mirrored").boolean();
    hg.source.facade_ratio = src.at("facade_ratio").number();
    hg.root = node_from(f.at("root"));
    validate_hypergraph(hg);
    return hg;
}

json boundary_to_json(const BoundarySpec& b) {
    json j = header("hyperplan.boundary", kGeometryUnits);
    j["id"] = b.id;
    j["boundary"] = ring_json(b.polygon.vertices());
    j["facade"] = segments_json(b.facade_edges);
    j["circulation"] = segments_json(b.circulation_edges);
    return j;
}

BoundarySpec boundary_from_json(const json& j) {
    const Field f(j, "");
    // A plan record also describes a boundary; its rooms are ignored.
    const bool is_plan = f.has("format") && f.at("format").str() == "hyperplan.plan";
    check_header(f, is_plan ? "hyperplan.plan" : "hyperplan.boundary", kGeometryUnits);
    BoundarySpec b{f.at("id").str(), Polygon(f.at("boundary").points()), f.at("facade").segments(),
                   f.at("circulation").segments()};
    circulation_frame(b.polygon, b.circulation_edges);
    return b;
}

json catalog_to_json(const FurnitureCatalog& c) {
    json j = header("hyperplan.catalog", kCatalogUnits);
    json blocks = json::array();
    for (const auto& [name, b] : c.blocks) {
        blocks.push_back({{"name", b.name},
                          {"program", program_name(b.program)},
                          {"width", b.width},
                          {"depth", b.depth},
                          {"clearance", {{"front", b.front}, {"back", b.back}, {"left", b.left}, {"right", b.right}}}});
    }
    j["blocks"] = blocks;
    json occs = json::array();
    for (const OccupancyRequirement& o : c.occupancies) {
        json slots = json::array();
        for (const FurnitureSlot& s : o.slots) {
            json slot{{"program", program_name(s.program)},
                      {"role", s.role == SlotRole::primary ? "primary" : "secondary"},
                      {"blocks", s.blocks}};
            slot["fallback"] = s.fallback ? json(program_name(*s.fallback)) : json(nullptr);
            slots.push_back(slot);
        }
        occs.push_back({{"bedrooms", o.bedrooms},
                        {"label", o.label},
                        {"min_furniture_area", o.min_furniture_area},
                        {"slots", slots}});
    }
    j["occupancies"] = occs;
    return j;
}

namespace {

RoomProgram program_at(const Field& f) {
    return guarded<RoomProgram>(f, [](const Field& p) { return parse_program(p.str()); });
}

}  // namespace

FurnitureCatalog catalog_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.catalog", kCatalogUnits);
    FurnitureCatalog c;
    for (const Field& b : f.at("blocks").items()) {
        FurnitureBlock block;
        block.name = b.at("name").str();
        block.program = program_at(b.at("program"));
        block.width = b.at("width").number();
        block.depth = b.at("depth").number();
        const Field cl = b.at("clearance");
        block.front = cl.at("front").number();
        block.back = cl.at("back").number();
        block.left = cl.at("left").number();
        block.right = cl.at("right").number();
        if (!c.blocks.emplace(block.name, block).second) b.fail("duplicate block " + block.name);
    }
    for (const Field& o : f.at("occupancies").items()) {
        OccupancyRequirement occ;
        occ.bedrooms = o.at("bedrooms").integer();
        occ.label = o.at("label").str();
        occ.min_furniture_area = o.at("min_furniture_area").number();
        for (const Field& s : o.at("slots").items()) {
            FurnitureSlot slot;
            slot.program = program_at(s.at("program"));
            const std::string role = s.at("role").str();
            if (role != "primary" && role != "secondary") s.at("role").fail("expected primary or secondary");
            slot.role = role == "primary" ? SlotRole::primary : SlotRole::secondary;
            for (const Field& name : s.at("blocks").items()) slot.blocks.push_back(name.str());
            if (s.has("fallback") && !s.at("fallback").raw().is_null()) slot.fallback = program_at(s.at("fallback"));
            occ.slots.push_back(std::move(slot));
        }
        c.occupancies.push_back(std::move(occ));
    }
    validate_catalog(c);
    return c;
}

json profiles_to_json(const std::vector<CityProfile>& profiles) {
    json j = header("hyperplan.profiles", kProfileUnits);
    json list = json::array();
    auto env = [](const Envelope& e) { return json{{"u_value", e.u_value}, {"wwr", e.wwr}, {"window", e.window}}; };
    for (const CityProfile& p : profiles) {
        list.push_back({{"name", p.name},
                        {"grid_carbon", p.grid_carbon},
                        {"standard", env(p.standard)},
                        {"high_performance", env(p.high_performance)},
                        {"hvac", p.hvac},
                        {"hvac_cop", p.hvac_cop}});
    }
    j["profiles"] = list;
    return j;
}

std::vector<CityProfile> profiles_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.profiles", kProfileUnits);
    auto env = [](const Field& e) {
        return Envelope{e.at("u_value").number(), e.at("wwr").number(), e.at("window").str()};
    };
    std::vector<CityProfile> out;
    for (const Field& p : f.at("profiles").items()) {
        CityProfile c{p.at("name").str(),        p.at("grid_carbon").number(), env(p.at("standard")),
                      env(p.at("high_performance")), p.at("hvac").str(),     p.at("hvac_cop").number()};
        if (!(c.grid_carbon >= 0.0)) p.at("grid_carbon").fail("must be non-negative");
        out.push_back(std::move(c));
    }
    return out;
}

json performance_to_json(const std::vector<PerformanceRecord>& records) {
    json j = header("hyperplan.performance", kPerformanceUnits);
    json list = json::array();
    for (const PerformanceRecord& r : records) {
        json sda = json::object();
        for (const auto& [room, v] : r.sda) sda[room] = v;
        list.push_back({{"apartment_id", r.apartment_id},
                        {"eui_standard", r.eui_standard},
                        {"eui_high", r.eui_high},
                        {"sda", sda},
                        {"provenance", r.provenance}});
    }
    j["records"] = list;
    return j;
}

std::vector<PerformanceRecord> performance_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.performance", kPerformanceUnits);
    std::vector<PerformanceRecord> out;
    for (const Field& r : f.at("records").items()) {
        PerformanceRecord rec;
        rec.apartment_id = r.at("apartment_id").str();
        rec.eui_standard = r.at("eui_standard").number();
        rec.eui_high = r.at("eui_high").number();
        const Field sda = r.at("sda");
        if (!sda.raw().is_object()) sda.fail("expected an object of room id to score");
        for (const auto& [room, v] : sda.raw().items()) rec.sda[room] = Field(v, sda.path() + "." + room).number();
        rec.provenance = r.has("provenance") ? r.at("provenance").str() : "";
        try {
            validate_record(rec);
        } catch (const Error& e) {
            throw Error(e.code(), r.path() + ": " + e.detail());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

json config_to_json(const PipelineConfig& c) {
    json j = header("hyperplan.config", {{"length", "m"}, {"area", "m2"}});
    j["delta_max"] = c.validity.delta_max;
    j["facade_ratio_tol"] = c.validity.facade_ratio_tol;
    j["footprint_tol"] = c.validity.footprint_tol;
    j["facade_min_overlap"] = c.validity.facade_min_overlap;
    j["min_room_width"] = c.validity.min_room_width;
    j["max_aspect"] = c.validity.max_aspect;
    j["passage_half_width"] = c.validity.passage_half_width;
    j["passage_reach_tol"] = c.validity.passage_reach_tol;
    j["door_width"] = c.door_width;
    j["furnishing_grid"] = c.furnish.anchor_step;
    j["furnishing_backtracks"] = c.furnish.max_backtracks;
    j["multiplier"] = c.multiplier;
    j["mode"] = c.mode == RetentionMode::ratio_retain ? "ratio" : "area";
    j["rank_by"] = c.rank_by == RankKey::delta_r ? "delta_r" : "d_tot";
    return j;
}

PipelineConfig config_from_json(const json& j) {
    const Field f(j, "");
    check_header(f, "hyperplan.config", {{"length", "m"}, {"area", "m2"}});
    PipelineConfig c;
    const std::map<std::string, double*> numbers{
        {"delta_max", &c.validity.delta_max},
        {"facade_ratio_tol", &c.validity.facade_ratio_tol},
        {"footprint_tol", &c.validity.footprint_tol},
        {"facade_min_overlap", &c.validity.facade_min_overlap},
        {"min_room_width", &c.validity.min_room_width},
        {"max_aspect", &c.validity.max_aspect},
        {"passage_half_width", &c.validity.passage_half_width},
        {"passage_reach_tol", &c.validity.passage_reach_tol},
        {"door_width", &c.door_width},
        {"furnishing_grid", &c.furnish.anchor_step},
        {"multiplier", &c.multiplier},
    };
    for (const auto& [key, value] : j.items()) {
        const Field v(value, key);
        if (key == "format" || key == "version" || key == "units" || key == "notes") continue;
        if (auto it = numbers.find(key); it != numbers.end()) {
            *it->second = v.number();
            if (!(*it->second >= 0.0)) v.fail("must be non-negative");
        } else if (key == "furnishing_backtracks") {
            c.furnish.max_backtracks = v.integer();
        } else if (key == "mode") {
            const std::string m = v.str();
            if (m != "ratio" && m != "area") v.fail("expected ratio or area");
            c.mode = m == "ratio" ? RetentionMode::ratio_retain : RetentionMode::area_retain;
        } else if (key == "rank_by") {
            const std::string r = v.str();
            if (r != "delta_r" && r != "d_tot") v.fail("expected delta_r or d_tot");
            c.rank_by = r == "delta_r" ? RankKey::delta_r : RankKey::d_tot;
        } else {
            v.fail("unknown setting");
        }
    }
    if (!(c.furnish.anchor_step > 0.0)) throw Error(ErrorCode::ParseError, "furnishing_grid must be positive");
    if (c.door_width < kDoorWidthMin) throw Error(ErrorCode::ParseError, "door_width below the minimum");
    return c;
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
        const std::size_t column = last_nl == std::string::npos ? upto + 1 : upto - last_nl;
        throw Error(ErrorCode::ParseError,
                    path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
    }
}

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidRecord, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
    std::vector<fs::path> out;
    if (!fs::is_directory(dir)) return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
auto with_file(const fs::path& p, F&& f) -> decltype(f(json())) {
    const json j = read_json_file(p);
    try {
        return f(j);
    } catch (const Error& e) {
        throw Error(e.code(), p.filename().string() + ": " + e.detail());
    }
}

void sort_by_id(std::vector<Hypergraph>& hgs) {
    std::sort(hgs.begin(), hgs.end(), [](const Hypergraph& a, const Hypergraph& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < hgs.size(); ++i) {
        if (hgs[i].id == hgs[i - 1].id) throw Error(ErrorCode::InvalidRecord, "duplicate hypergraph id " + hgs[i].id);
    }
}

}  // namespace

CorpusBundle load_corpus(const fs::path& dir) {
    const fs::path manifest = dir / "manifest.json";
    if (!fs::exists(manifest)) throw Error(ErrorCode::ParseError, "no manifest.json in " + dir.string());
    CorpusBundle bundle;
    bundle.root = dir;
    with_file(manifest, [&](const json& j) {
        const Field f(j, "");
        check_header(f, "hyperplan.corpus", kHypergraphUnits);
        bundle.provenance = f.has("provenance") ? f.at("provenance").str() : "";
        return 0;
    });
    for (const fs::path& p : json_files(dir / "plans")) {
        FloorPlan plan = with_file(p, plan_from_json);
        const std::string id = plan.id;
        if (!bundle.plans.emplace(id, std::move(plan)).second) {
            throw Error(ErrorCode::InvalidRecord, "duplicate plan id " + id);
        }
    }
    for (const fs::path& p : json_files(dir / "hypergraphs")) bundle.hypergraphs.push_back(with_file(p, hypergraph_from_json));
    sort_by_id(bundle.hypergraphs);
    for (const Hypergraph& hg : bundle.hypergraphs) {
        if (!bundle.plans.count(hg.source.plan_id) && hg.source.citation.empty()) {
            throw Error(ErrorCode::InvalidRecord,
                        "hypergraph " + hg.id + " cites plan " + hg.source.plan_id + " which is not in the corpus");
        }
    }
    bundle.catalog = fs::exists(dir / "catalog.json") ? with_file(dir / "catalog.json", catalog_from_json)
                                                      : default_catalog();
    bundle.profiles = fs::exists(dir / "profiles.json") ? with_file(dir / "profiles.json", profiles_from_json)
                                                        : builtin_profiles();
    if (fs::exists(dir / "performance.json")) {
        for (PerformanceRecord& r : with_file(dir / "performance.json", performance_from_json)) {
            const std::string id = r.apartment_id;
            bundle.performance.emplace(id, std::move(r));
        }
    }
    return bundle;
}

Library load_library(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "library " + dir.string() + " is not a directory");
    Library lib;
    if (fs::exists(dir / "manifest.json")) {
        CorpusBundle bundle = load_corpus(dir);
        lib.hypergraphs = std::move(bundle.hypergraphs);
        lib.plans = std::move(bundle.plans);
    } else {
        for (const fs::path& p : json_files(dir)) {
            const json j = read_json_file(p);
            const std::string format = record_format(j);
            if (format == "hyperplan.hypergraph") {
                lib.hypergraphs.push_back(with_file(p, hypergraph_from_json));
            } else if (format == "hyperplan.plan") {
                FloorPlan plan = with_file(p, plan_from_json);
                const std::string id = plan.id;
                lib.plans.emplace(id, std::move(plan));
            }
        }
        sort_by_id(lib.hypergraphs);
    }
    if (lib.hypergraphs.empty()) throw Error(ErrorCode::EmptyLibrary, dir.string());
    return lib;
}

}  // namespace hyperplan

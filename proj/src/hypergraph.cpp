#include "hyperplan/hypergraph.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace hyperplan {

namespace {

void collect_leaves(const SubdivNode& n, std::vector<const SubdivNode*>& out) {
    if (n.is_leaf()) {
        out.push_back(&n);
        return;
    }
    for (const SubdivNode& c : n.children) collect_leaves(c, out);
}

}  // namespace

std::vector<const SubdivNode*> Hypergraph::leaves() const {
    std::vector<const SubdivNode*> out;
    collect_leaves(root, out);
    return out;
}

std::size_t Hypergraph::room_count() const { return leaves().size(); }

double Hypergraph::leaf_area_sum() const {
    double sum = 0.0;
    for (const SubdivNode* leaf : leaves()) sum += leaf->area_abs;
    return sum;
}

namespace {

void validate_node(const SubdivNode& n, std::set<std::string>& node_ids) {
    if (n.id.empty() || !node_ids.insert(n.id).second) {
        throw Error(ErrorCode::InvalidRecord, "missing or duplicate node id '" + n.id + "'");
    }
    if (!(n.area_abs > 0.0) || !std::isfinite(n.area_abs)) {
        throw Error(ErrorCode::InvalidRecord, "node " + n.id + " has non-positive area");
    }
    if (!(n.area_ratio > 0.0 && n.area_ratio <= 1.0)) {
        throw Error(ErrorCode::InvalidRecord, "node " + n.id + " area ratio outside (0, 1]");
    }
    if (n.is_leaf()) {
        if (!n.program || n.room_id.empty()) throw Error(ErrorCode::InvalidRecord, "leaf " + n.id + " lacks a room");
        return;
    }
    if (n.children.size() != 2) throw Error(ErrorCode::InvalidRecord, "node " + n.id + " must have two children");
    if (n.program || !n.room_id.empty()) throw Error(ErrorCode::InvalidRecord, "internal node " + n.id + " has a room");
    if (!std::isfinite(n.angle)) throw Error(ErrorCode::InvalidRecord, "node " + n.id + " angle");
    const double ratio_sum = n.children[0].area_ratio + n.children[1].area_ratio;
    if (std::abs(ratio_sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidRecord, "children of " + n.id + " have ratios not summing to 1");
    }
    const double area_sum = n.children[0].area_abs + n.children[1].area_abs;
    if (std::abs(area_sum - n.area_abs) > 1e-6 * n.area_abs) {
        throw Error(ErrorCode::InvalidRecord, "children of " + n.id + " do not add up to its area");
    }
    for (const SubdivNode& c : n.children) validate_node(c, node_ids);
}

}  // namespace

void validate_hypergraph(const Hypergraph& hg) {
    if (hg.id.empty()) throw Error(ErrorCode::InvalidRecord, "hypergraph id is empty");
    if (hg.source.plan_id.empty() && hg.source.citation.empty()) {
        throw Error(ErrorCode::InvalidRecord, "hypergraph " + hg.id + " has no source reference");
    }
    std::set<std::string> node_ids;
    validate_node(hg.root, node_ids);
    if (std::abs(hg.root.area_ratio - 1.0) > 1e-12) throw Error(ErrorCode::InvalidRecord, "root ratio must be 1");

    std::set<std::string> rooms;
    for (const SubdivNode* leaf : hg.leaves()) {
        if (leaf->room_id == kEntrance || !rooms.insert(leaf->room_id).second) {
            throw Error(ErrorCode::InvalidRecord, "invalid or duplicate room id " + leaf->room_id);
        }
    }
    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& [a, b] : hg.access_edges) {
        if (a == b || !rooms.count(a) || !rooms.count(b)) {
            throw Error(ErrorCode::InvalidRecord, "access edge " + a + "|" + b + " is invalid");
        }
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    for (const std::string& r : hg.facade_rooms) {
        if (!rooms.count(r)) throw Error(ErrorCode::InvalidRecord, "facade room " + r + " is unknown");
    }
    if (!rooms.count(hg.entrance_room)) {
        throw Error(ErrorCode::InvalidRecord, "entrance room '" + hg.entrance_room + "' is unknown");
    }
    std::set<std::string> seen{hg.entrance_room};
    std::vector<std::string> stack{hg.entrance_room};
    while (!stack.empty()) {
        const std::string cur = stack.back();
        stack.pop_back();
        for (const std::string& next : adjacency[cur]) {
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    if (seen.size() != rooms.size()) throw Error(ErrorCode::AccessDisconnected, "hypergraph " + hg.id);
}

double circulation_frame(const Polygon& boundary, std::span<const Segment> circulation) {
    const Segment* best = nullptr;
    for (const Segment& s : circulation) {
        bool on = false;
        for (std::size_t i = 0; i < boundary.size() && !on; ++i) on = segment_on(s, boundary.edge(i));
        if (!on || s.length() < kEpsPoint) continue;
        if (best == nullptr || s.length() > best->length() + 1e-12) best = &s;
    }
    if (best == nullptr) throw Error(ErrorCode::NoCirculationEdge, "boundary has no circulation segment");
    const Point2 d = best->b - best->a;
    return normalize_angle(std::atan2(d.y, d.x));
}

namespace {

bool past_pi(double rel_angle, double frame) { return rel_angle + frame >= std::numbers::pi; }

struct Candidate {
    CutLine cut;
    double rel_angle = 0.0;
    double balance = 0.0;
    Polygon lower;
    Polygon upper;
    std::vector<const Room*> lower_rooms;
    std::vector<const Room*> upper_rooms;
};

bool better(const Candidate& a, const Candidate& b) {
    if (std::abs(a.balance - b.balance) > 1e-9) return a.balance < b.balance;
    if (std::abs(a.rel_angle - b.rel_angle) > 1e-9) return a.rel_angle < b.rel_angle;
    return a.cut.offset < b.cut.offset;
}

std::string room_list(const std::vector<const Room*>& rooms) {
    std::string out;
    for (const Room* r : rooms) out += (out.empty() ? "" : ",") + r->id;
    return out;
}

class Encoder {
public:
    explicit Encoder(double frame) : frame_(frame) {}

    SubdivNode build(const Polygon& region, const std::vector<const Room*>& rooms, int depth) {
        SubdivNode node;
        node.id = "n" + std::to_string(counter_++);
        node.area_abs = polygon_area(region);
        if (rooms.size() == 1) {
            node.area_abs = polygon_area(rooms.front()->polygon);
            node.program = rooms.front()->program;
            node.room_id = rooms.front()->id;
            return node;
        }
        std::optional<Candidate> best = best_cut(region, rooms);
        if (!best) {
            throw Error(ErrorCode::NotBspRepresentable,
                        "no free cut at depth " + std::to_string(depth) + " among rooms {" + room_list(rooms) + "}");
        }
        node.angle = best->rel_angle;
        // Children are ordered along the frame-relative normal, which points
        // the other way from the absolute one once angle + frame passes pi.
        if (past_pi(node.angle, frame_)) {
            node.children.push_back(build(best->upper, best->upper_rooms, depth + 1));
            node.children.push_back(build(best->lower, best->lower_rooms, depth + 1));
        } else {
            node.children.push_back(build(best->lower, best->lower_rooms, depth + 1));
            node.children.push_back(build(best->upper, best->upper_rooms, depth + 1));
        }
        double lower_sum = node.children[0].area_abs;
        double total = lower_sum + node.children[1].area_abs;
        node.area_abs = total;
        node.children[0].area_ratio = lower_sum / total;
        node.children[1].area_ratio = 1.0 - node.children[0].area_ratio;
        return node;
    }

private:
    std::optional<Candidate> best_cut(const Polygon& region, const std::vector<const Room*>& rooms) const {
        const double region_area = polygon_area(region);
        std::vector<CutLine> tried;
        std::optional<Candidate> best;
        for (const Room* room : rooms) {
            for (std::size_t i = 0; i < room->polygon.size(); ++i) {
                const Segment e = room->polygon.edge(i);
                const Point2 d = e.b - e.a;
                const CutLine cut = CutLine::through(std::atan2(d.y, d.x), e.a);
                const bool dup = std::any_of(tried.begin(), tried.end(), [&](const CutLine& c) {
                    return std::abs(c.angle - cut.angle) < 1e-9 && std::abs(c.offset - cut.offset) < 1e-7;
                });
                if (dup) continue;
                tried.push_back(cut);
                if (auto cand = evaluate(region, region_area, rooms, cut)) {
                    if (!best || better(*cand, *best)) best = std::move(cand);
                }
            }
        }
        return best;
    }

    std::optional<Candidate> evaluate(const Polygon& region, double region_area,
                                      const std::vector<const Room*>& rooms, const CutLine& cut) const {
        const Point2 n = cut.normal();
        std::vector<const Room*> lower_rooms;
        std::vector<const Room*> upper_rooms;
        double lower_sum = 0.0;
        for (const Room* r : rooms) {
            double lo = INFINITY;
            double hi = -INFINITY;
            for (const Point2& v : r->polygon.vertices()) {
                const double s = dot(v, n) - cut.offset;
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            if (hi <= kEpsPoint) {
                lower_rooms.push_back(r);
                lower_sum += polygon_area(r->polygon);
            } else if (lo >= -kEpsPoint) {
                upper_rooms.push_back(r);
            } else {
                return std::nullopt;  // the line crosses this room
            }
        }
        if (lower_rooms.empty() || upper_rooms.empty()) return std::nullopt;
        try {
            SplitResult split = split_by_line(region, cut);
            const double lower_area_v = polygon_area(split.lower);
            if (std::abs(lower_area_v - lower_sum) > 1e-6 * region_area) return std::nullopt;
            const double rel = normalize_angle(cut.angle - frame_);
            return Candidate{cut,
                             rel,
                             std::abs(lower_area_v / region_area - 0.5),
                             std::move(split.lower),
                             std::move(split.upper),
                             std::move(lower_rooms),
                             std::move(upper_rooms)};
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    double frame_;
    int counter_ = 0;
};

}  // namespace

Hypergraph encode_plan(const FloorPlan& plan) {
    Hypergraph hg;
    hg.id = plan.id;
    hg.frame_angle = circulation_frame(plan.boundary, plan.circulation_edges);

    std::vector<const Room*> rooms;
    for (const Room& r : plan.rooms) rooms.push_back(&r);
    Encoder encoder(hg.frame_angle);
    hg.root = encoder.build(plan.boundary, rooms, 0);
    hg.root.area_ratio = 1.0;

    hg.access_edges = plan.access_edges();
    hg.entrance_room = plan.entrance_room().value_or("");
    for (const Room& r : plan.rooms) {
        if (!contact_segments(r.polygon, plan.facade_edges).empty()) hg.facade_rooms.push_back(r.id);
    }
    hg.source.plan_id = plan.id;
    hg.source.facade_ratio = facade_ratio(plan);
    return hg;
}

namespace {

class Applier {
public:
    Applier(RetentionMode mode, double frame) : mode_(mode), frame_(frame) {}

    void run(const SubdivNode& node, const Polygon& region, std::vector<Room>& out) const {
        if (node.is_leaf()) {
            out.push_back({node.room_id, *node.program, region});
            return;
        }
        const SubdivNode& first = node.children[0];
        double ratio = first.area_ratio;
        if (mode_ == RetentionMode::area_retain) {
            ratio = first.area_abs / polygon_area(region);
            if (ratio >= 1.0) {
                throw Error(ErrorCode::InsufficientArea, "node " + node.id + " region too small for its first child");
            }
        }
        const bool flip = past_pi(node.angle, frame_);
        RatioSplit split = [&] {
            try {
                return split_at_ratio(region, node.angle + frame_, flip ? 1.0 - ratio : ratio);
            } catch (const Error& e) {
                throw Error(ErrorCode::ApplyFailed, node.id + ": " + e.detail());
            }
        }();
        if (flip) std::swap(split.first, split.second);
        run(first, split.first, out);
        run(node.children[1], split.second, out);
    }

private:
    RetentionMode mode_;
    double frame_;
};

}  // namespace

PlanSkeleton apply(const Hypergraph& hg, const Polygon& boundary, RetentionMode mode, double target_frame_angle) {
    if (mode == RetentionMode::area_retain) {
        const double need = hg.leaf_area_sum();
        const double have = polygon_area(boundary);
        if (have < need * (1.0 - 1e-9)) {
            throw Error(ErrorCode::InsufficientArea,
                        "boundary has " + std::to_string(have) + " m2, graph needs " + std::to_string(need));
        }
    }
    PlanSkeleton sk{hg.id, boundary, {}, hg.access_edges, hg.entrance_room, {}, {}};
    Applier(mode, target_frame_angle).run(hg.root, boundary, sk.rooms);
    std::sort(sk.rooms.begin(), sk.rooms.end(), [](const Room& a, const Room& b) { return a.id < b.id; });
    return sk;
}

PlanSkeleton apply(const Hypergraph& hg, const BoundarySpec& target, RetentionMode mode) {
    const double frame = circulation_frame(target.polygon, target.circulation_edges);
    PlanSkeleton sk = apply(hg, target.polygon, mode, frame);
    sk.id = target.id + "/" + hg.id + (hg.source.mirrored ? "~m" : "");
    sk.facade_edges = target.facade_edges;
    sk.circulation_edges = target.circulation_edges;
    return sk;
}

namespace {

void mirror_node(SubdivNode& n) {
    if (n.is_leaf()) return;
    // Reflecting x -> -x in the frame sends angle a to pi - a. The reflected
    // normal either matches the new normal or points the other way, in which
    // case the lower and upper sides trade places.
    const double a = n.angle;
    const double b = normalize_angle(std::numbers::pi - a);
    const Point2 reflected{std::sin(a), std::cos(a)};
    const Point2 fresh{-std::sin(b), std::cos(b)};
    n.angle = b;
    if (dot(reflected, fresh) < 0.0) {
        std::swap(n.children[0], n.children[1]);
    }
    for (SubdivNode& c : n.children) mirror_node(c);
}

}  // namespace

Hypergraph mirror(const Hypergraph& hg) {
    Hypergraph out = hg;
    mirror_node(out.root);
    out.source.mirrored = !hg.source.mirrored;
    return out;
}

}  // namespace hyperplan

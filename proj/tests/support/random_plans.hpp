#pragma once

#include "builders.hpp"

#include "hyperplan/error.hpp"
#include "hyperplan/floorplan.hpp"

#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace testing {

// Guillotine partition of a w x h box into n rectangles, programs assigned by
// size, doors along a breadth-first spanning tree from the corridor room.
inline std::optional<FloorPlan> random_bsp_plan(std::mt19937_64& rng, const std::string& id, double w, double h,
                                                int n_rooms) {
    struct R {
        double x0, y0, x1, y1;
        double area() const { return (x1 - x0) * (y1 - y0); }
    };
    std::uniform_real_distribution<double> ratio(0.35, 0.65);
    std::vector<R> regions{{0, 0, w, h}};
    while (static_cast<int>(regions.size()) < n_rooms) {
        auto it = std::max_element(regions.begin(), regions.end(),
                                   [](const R& a, const R& b) { return a.area() < b.area(); });
        const R r = *it;
        regions.erase(it);
        const double t = std::round(ratio(rng) * 10.0) / 10.0;
        if (r.x1 - r.x0 >= r.y1 - r.y0) {
            const double x = std::round((r.x0 + t * (r.x1 - r.x0)) * 10.0) / 10.0;
            regions.push_back({r.x0, r.y0, x, r.y1});
            regions.push_back({x, r.y0, r.x1, r.y1});
        } else {
            const double y = std::round((r.y0 + t * (r.y1 - r.y0)) * 10.0) / 10.0;
            regions.push_back({r.x0, r.y0, r.x1, y});
            regions.push_back({r.x0, y, r.x1, r.y1});
        }
    }
    std::sort(regions.begin(), regions.end(), [](const R& a, const R& b) { return a.area() > b.area(); });

    std::vector<RoomSpec> rooms;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        RoomProgram prog = RoomProgram::bedroom;
        if (i == 0) prog = RoomProgram::living;
        else if (i + 1 == regions.size()) prog = RoomProgram::bath;
        else if (i + 2 == regions.size()) prog = RoomProgram::kitchen;
        const R& r = regions[i];
        rooms.push_back({"room" + std::to_string(i), prog, rect(r.x0, r.y0, r.x1, r.y1)});
    }

    std::string entrance;
    double frontage = 0.0;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i].y0 == 0.0 && regions[i].x1 - regions[i].x0 > frontage) {
            frontage = regions[i].x1 - regions[i].x0;
            entrance = rooms[i].id;
        }
    }
    if (frontage < 1.0) return std::nullopt;

    std::map<std::string, std::vector<std::string>> adj;
    for (std::size_t i = 0; i < rooms.size(); ++i) {
        for (std::size_t j = i + 1; j < rooms.size(); ++j) {
            double longest = 0.0;
            for (const Segment& s : shared_walls(rooms[i].polygon, rooms[j].polygon)) longest = std::max(longest, s.length());
            if (longest >= 1.0) {
                adj[rooms[i].id].push_back(rooms[j].id);
                adj[rooms[j].id].push_back(rooms[i].id);
            }
        }
    }
    std::vector<AccessEdge> access;
    std::set<std::string> seen{entrance};
    std::deque<std::string> queue{entrance};
    while (!queue.empty()) {
        const std::string cur = queue.front();
        queue.pop_front();
        for (const std::string& next : adj[cur]) {
            if (seen.insert(next).second) {
                access.push_back({cur, next});
                queue.push_back(next);
            }
        }
    }
    if (seen.size() != rooms.size()) return std::nullopt;
    auto [facade, circ] = box_annotations(w, h);
    try {
        return make_plan(id, rect(0, 0, w, h), rooms, facade, circ, access, entrance);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace testing

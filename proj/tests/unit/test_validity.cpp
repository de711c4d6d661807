#include "builders.hpp"

#include "hyperplan/error.hpp"
#include "hyperplan/validity.hpp"

#include <doctest.h>

using namespace hyperplan;
using namespace testing;

namespace {

std::set<ValidityFlag> only(FlagKind kind, const std::string& room) { return {ValidityFlag{kind, room}}; }

}  // namespace

TEST_CASE("perimeter difference is zero for similar shapes and asymmetric otherwise") {
    const Polygon sq = rect(0, 0, 1, 1);
    CHECK(perimeter_diff(sq, rect(5, 5, 8, 8)) == doctest::Approx(0.0));
    CHECK(perimeter_diff(sq, rotated(sq, 0.4)) == doctest::Approx(0.0));
    const Polygon bar = rect(0, 0, 4, 1);  // perimeter / (4 sqrt(area)) = 1.25
    CHECK(perimeter_diff(sq, bar) == doctest::Approx(0.25));
    CHECK(perimeter_diff(bar, sq) == doctest::Approx(0.2));
}

TEST_CASE("room and plan scores match rooms by id") {
    const FloorPlan a = two_room_plan(8, 5);
    const FloorPlan b = two_room_plan(8, 5);
    CHECK(plan_perimeter_diff(a, b) == doctest::Approx(0.0));
    const auto scores = room_perimeter_diffs(two_room_plan(10, 5), a);
    REQUIRE(scores.size() == 2);
    CHECK(scores.at("a") == doctest::Approx(perimeter_diff(rect(0, 0, 8, 2.5), rect(0, 0, 10, 2.5))));
    try {
        room_perimeter_diffs(single_room_plan(), a);
        FAIL("expected a mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RoomSetMismatch);
    }
}

TEST_CASE("report averages room scores and passes below the threshold") {
    const ValidityReport ok = make_report({{"a", 0.05}, {"b", 0.1}}, {});
    CHECK(ok.delta_r == doctest::Approx(0.075));
    CHECK(ok.passed);
    const ValidityReport high = make_report({{"a", 0.3}, {"b", 0.1}}, {});
    CHECK_FALSE(high.passed);
    const ValidityReport flagged = make_report({{"a", 0.0}}, only(FlagKind::FacadeBlocked, "a"));
    CHECK_FALSE(flagged.passed);
    CHECK(flagged.flags.begin()->to_string() == "FacadeBlocked(a)");
}

TEST_CASE("well-formed plans raise no flags") {
    CHECK(check_plan(two_room_plan()).empty());
    for (const std::string& id : golden_plan_ids()) {
        CAPTURE(id);
        CHECK(check_plan(golden_plan(id)).empty());
    }
}

TEST_CASE("each failure fixture raises exactly its flag") {
    CHECK(check_plan(blocked_bedroom_plan()) == only(FlagKind::FacadeBlocked, "bed"));
    CHECK(check_plan(thin_foyer_plan()) == only(FlagKind::PassageTooThin, "foyer"));
    CHECK(check_plan(sliver_room_plan()) == only(FlagKind::BadRoomGeometry, "living"));
}

TEST_CASE("thresholds come from the configuration") {
    ValidityConfig loose;
    loose.max_aspect = 7.0;
    CHECK(check_plan(sliver_room_plan(), loose).empty());
    ValidityConfig narrow;
    narrow.passage_half_width = 0.3;
    CHECK(check_plan(thin_foyer_plan(), narrow).empty());
}

TEST_CASE("fit filter compares footprint and facade ratio") {
    const Hypergraph hg = encode_plan(two_room_plan(10, 5));  // 50 m2, facade 20 / 30
    auto target = [](double w, double h) {
        auto [facade, circ] = box_annotations(w, h);
        return BoundarySpec{"t", rect(0, 0, w, h), facade, circ};
    };
    CHECK(fit_filter(hg, target(11.6, 5)));   // 58 m2
    CHECK_FALSE(fit_filter(hg, target(13, 5)));  // 65 m2
    BoundarySpec dark = target(10, 5);
    dark.facade_edges.resize(1);  // right side only: 5 / 30
    CHECK_FALSE(fit_filter(hg, dark));
}

#include "hyperplan/carbon.hpp"

#include "hyperplan/error.hpp"

#include <algorithm>
#include <cmath>

namespace hyperplan {

const std::vector<CityProfile>& builtin_profiles() {
    static const std::vector<CityProfile> profiles = [] {
        const Envelope standard{0.3, 0.6, "DoublePaneClr"};
        const Envelope high{0.1, 0.6, "Triple Pane LoE"};
        const std::string hvac = "Standard Electric HP";
        return std::vector<CityProfile>{
            {"new_york", 0.55, standard, high, hvac, 3.3},
            {"singapore", 0.4057, standard, high, hvac, 3.3},
            {"zurich", 0.128, standard, high, hvac, 3.3},
        };
    }();
    return profiles;
}

const CityProfile& find_profile(std::span<const CityProfile> profiles, const std::string& name) {
    for (const CityProfile& p : profiles) {
        if (p.name == name) return p;
    }
    throw Error(ErrorCode::InvalidRecord, "unknown city profile " + name);
}

void validate_record(const PerformanceRecord& record) {
    if (record.apartment_id.empty()) throw Error(ErrorCode::InvalidRecord, "performance record without apartment id");
    if (!std::isfinite(record.eui_standard) || !std::isfinite(record.eui_high) || record.eui_high < 0.0 ||
        record.eui_standard < record.eui_high) {
        throw Error(ErrorCode::InvalidRecord,
                    record.apartment_id + ": need EUI_s >= EUI_hp >= 0, got " + std::to_string(record.eui_standard) +
                        " / " + std::to_string(record.eui_high));
    }
    for (const auto& [room, v] : record.sda) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorCode::InvalidRecord, record.apartment_id + ": sDA of " + room + " outside [0, 1]");
        }
    }
}

double daylight_score(const FloorPlan& plan, const PerformanceRecord& record) {
    double weighted = 0.0;
    double total = 0.0;
    for (const Room& r : plan.rooms) {
        if (!is_daylit(r.program)) continue;
        auto it = record.sda.find(r.id);
        if (it == record.sda.end()) throw Error(ErrorCode::MissingRoomScore, plan.id + " room " + r.id);
        const double a = polygon_area(r.polygon);
        weighted += it->second * a;
        total += a;
    }
    if (total <= 0.0) throw Error(ErrorCode::MissingRoomScore, plan.id + " has no daylit rooms");
    return weighted / total;
}

double excess_area(double apartment_area, double f_tot, double multiplier) {
    return apartment_area - f_tot * multiplier;
}

double excess_carbon(double a_e, double eui_standard, double grid_carbon) {
    return std::max(a_e, 0.0) * eui_standard * grid_carbon;
}

double emission_delta(double area, double a_e, double eui_standard, double eui_high, double grid_carbon) {
    return excess_carbon(a_e, eui_standard, grid_carbon) - area * (eui_standard - eui_high) * grid_carbon;
}

CarbonReport carbon_report(const FloorPlan& plan, double f_tot, const PerformanceRecord& record,
                           const CityProfile& profile, double multiplier) {
    validate_record(record);
    if (record.apartment_id != plan.id) {
        throw Error(ErrorCode::IdMismatch, "plan " + plan.id + " vs performance record " + record.apartment_id);
    }
    CarbonReport r;
    r.apartment_id = plan.id;
    r.city = profile.name;
    r.grid_carbon = profile.grid_carbon;
    r.area = polygon_area(plan.boundary);
    r.f_tot = f_tot;
    r.a_e = excess_area(r.area, f_tot, multiplier);
    r.c_e = excess_carbon(r.a_e, record.eui_standard, profile.grid_carbon);
    r.delta_e = emission_delta(r.area, r.a_e, record.eui_standard, record.eui_high, profile.grid_carbon);
    r.d_tot = daylight_score(plan, record);
    return r;
}

CohortSummary cohort_summary(std::span<const CarbonReport> reports) {
    if (reports.empty()) throw Error(ErrorCode::EmptyCohort, "no reports");
    CohortSummary s;
    s.count = reports.size();
    std::size_t positive = 0;
    std::size_t positive_valid = 0;
    std::vector<double> c_e;
    double sum_c = 0.0;
    double sum_d = 0.0;
    for (const CarbonReport& r : reports) {
        if (r.delta_e > 0.0) {
            ++positive;
            if (r.valid) ++positive_valid;
        }
        if (r.valid) ++s.valid_count;
        c_e.push_back(r.c_e);
        sum_c += r.c_e;
        sum_d += r.d_tot;
    }
    const double n = static_cast<double>(s.count);
    s.share_positive = static_cast<double>(positive) / n;
    s.share_positive_valid =
        s.valid_count == 0 ? 0.0 : static_cast<double>(positive_valid) / static_cast<double>(s.valid_count);
    s.mean_c_e = sum_c / n;
    s.mean_d_tot = sum_d / n;
    std::sort(c_e.begin(), c_e.end());
    const std::size_t mid = c_e.size() / 2;
    s.median_c_e = c_e.size() % 2 == 1 ? c_e[mid] : 0.5 * (c_e[mid - 1] + c_e[mid]);
    return s;
}

}  // namespace hyperplan

#pragma once

#include "hyperplan/floorplan.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace hyperplan {

inline constexpr double kFurnitureMultiplier = 1.6;

struct Envelope {
    double u_value = 0.0;  // W/m2K
    double wwr = 0.0;
    std::string window;
};

// Carbon intensity and simulation setup of one city. The envelope and HVAC
// entries are descriptive; they document how the EUI inputs were produced.
struct CityProfile {
    std::string name;
    double grid_carbon = 0.0;  // kgCO2e/kWh
    Envelope standard;
    Envelope high_performance;
    std::string hvac;
    double hvac_cop = 0.0;
};

const std::vector<CityProfile>& builtin_profiles();  // new_york, singapore, zurich
const CityProfile& find_profile(std::span<const CityProfile> profiles, const std::string& name);

struct PerformanceRecord {
    std::string apartment_id;
    double eui_standard = 0.0;  // kWh/m2/yr
    double eui_high = 0.0;      // kWh/m2/yr
    std::map<std::string, double> sda;  // per room id, in [0, 1]
    std::string provenance;
};

// Rejects records where the upgrade would raise the EUI or sDA leaves [0, 1].
void validate_record(const PerformanceRecord& record);

// Area-weighted sDA over living, kitchen, bedroom and foyer rooms.
double daylight_score(const FloorPlan& plan, const PerformanceRecord& record);

double excess_area(double apartment_area, double f_tot, double multiplier = kFurnitureMultiplier);
// Compact apartments (negative excess area) emit no excess carbon.
double excess_carbon(double a_e, double eui_standard, double grid_carbon);
double emission_delta(double area, double a_e, double eui_standard, double eui_high, double grid_carbon);

struct CarbonReport {
    std::string apartment_id;
    std::string city;
    double grid_carbon = 0.0;
    double area = 0.0;
    double f_tot = 0.0;
    double a_e = 0.0;
    double c_e = 0.0;
    double delta_e = 0.0;
    double d_tot = 0.0;
    bool valid = true;  // furnishing feasible and validity checks passed
};

CarbonReport carbon_report(const FloorPlan& plan, double f_tot, const PerformanceRecord& record,
                           const CityProfile& profile, double multiplier = kFurnitureMultiplier);

struct CohortSummary {
    std::size_t count = 0;
    std::size_t valid_count = 0;
    double share_positive = 0.0;        // over all reports
    double share_positive_valid = 0.0;  // over valid reports; 0 when there are none
    double mean_c_e = 0.0;
    double median_c_e = 0.0;
    double mean_d_tot = 0.0;
};

CohortSummary cohort_summary(std::span<const CarbonReport> reports);

}  // namespace hyperplan

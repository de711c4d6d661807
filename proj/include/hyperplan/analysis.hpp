#pragma once

#include "hyperplan/floorplan.hpp"
#include "hyperplan/hypergraph.hpp"

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <vector>

namespace hyperplan {

// Bump whenever the entries or their order change.
inline constexpr int kFeatureSetVersion = 1;
inline constexpr std::size_t kFeatureCount = 10;

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "n_rooms",          "n_bedrooms",      "total_area_m2",        "access_edges_per_room", "mean_access_degree",
    "max_split_depth", "mean_leaf_depth", "leaf_depth_variance", "facade_room_fraction",  "compactness",
};

using FeatureVector = std::array<double, kFeatureCount>;

// The mean access degree counts the entrance link, so a room that opens onto
// the building corridor has one more connection than its door count inside.
FeatureVector features(const Hypergraph& hg, const FloorPlan& plan);

struct PcaModel {
    Eigen::VectorXd mean;
    Eigen::VectorXd stddev;       // population; 0 marks a constant column
    Eigen::MatrixXd components;   // one component per column, descending variance
    Eigen::VectorXd eigenvalues;  // of the standardized covariance, descending
    Eigen::VectorXd explained;    // fractions; all zero when degenerate
    bool degenerate = false;      // no variance at all

    Eigen::MatrixXd standardize(const Eigen::MatrixXd& x) const;
    Eigen::MatrixXd project(const Eigen::MatrixXd& x) const;
};

PcaModel pca_fit(const Eigen::MatrixXd& x);

// Adjacency spectra, sorted descending.
std::vector<double> subdivision_spectrum(const Hypergraph& hg);
std::vector<double> access_spectrum(const Hypergraph& hg);

struct SpectralDistance {
    double subdivision = 0.0;
    double access = 0.0;
};

// Euclidean distance between descending spectra, the shorter one extended
// with trailing zeros.
double spectrum_distance(std::vector<double> a, std::vector<double> b);
SpectralDistance hypergraph_distance(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperplan

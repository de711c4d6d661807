#include "hyperplan/analysis.hpp"

#include "hyperplan/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace hyperplan {

namespace {

void leaf_depths(const SubdivNode& n, int depth, std::vector<int>& out) {
    if (n.is_leaf()) {
        out.push_back(depth);
        return;
    }
    for (const SubdivNode& c : n.children) leaf_depths(c, depth + 1, out);
}

}  // namespace

FeatureVector features(const Hypergraph& hg, const FloorPlan& plan) {
    std::set<std::string> hg_rooms;
    for (const SubdivNode* leaf : hg.leaves()) hg_rooms.insert(leaf->room_id);
    std::set<std::string> plan_rooms;
    for (const Room& r : plan.rooms) plan_rooms.insert(r.id);
    if (hg_rooms != plan_rooms) throw Error(ErrorCode::InconsistentPair, hg.id + " vs plan " + plan.id);

    const double n = static_cast<double>(plan.rooms.size());
    std::vector<int> depths;
    leaf_depths(hg.root, 0, depths);
    double mean_depth = 0.0;
    for (int d : depths) mean_depth += d;
    mean_depth /= static_cast<double>(depths.size());
    double var_depth = 0.0;
    for (int d : depths) var_depth += (d - mean_depth) * (d - mean_depth);
    var_depth /= static_cast<double>(depths.size());

    int facade_rooms = 0;
    for (const Room& r : plan.rooms) {
        if (!contact_segments(r.polygon, plan.facade_edges).empty()) ++facade_rooms;
    }
    const double edges = static_cast<double>(hg.access_edges.size());
    const double area = polygon_area(plan.boundary);

    return {n,
            static_cast<double>(plan.occupancy()),
            area,
            edges / n,
            (2.0 * edges + 1.0) / n,
            static_cast<double>(*std::max_element(depths.begin(), depths.end())),
            mean_depth,
            var_depth,
            facade_rooms / n,
            4.0 * std::sqrt(area) / polygon_perimeter(plan.boundary)};
}

Eigen::MatrixXd PcaModel::standardize(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd z = x.rowwise() - mean.transpose();
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
        if (stddev(j) > 0.0) {
            z.col(j) /= stddev(j);
        } else {
            z.col(j).setZero();
        }
    }
    return z;
}

Eigen::MatrixXd PcaModel::project(const Eigen::MatrixXd& x) const { return standardize(x) * components; }

PcaModel pca_fit(const Eigen::MatrixXd& x) {
    if (x.rows() < 2) throw Error(ErrorCode::TooFewSamples, std::to_string(x.rows()) + " rows");
    if (!x.allFinite()) throw Error(ErrorCode::InvalidRecord, "feature matrix has non-finite entries");
    const double n = static_cast<double>(x.rows());
    PcaModel m;
    m.mean = x.colwise().mean().transpose();
    m.stddev.resize(x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double var = (x.col(j).array() - m.mean(j)).square().sum() / n;
        // Columns that only vary by rounding noise are treated as constant.
        const double scale = std::max(1.0, std::abs(m.mean(j)));
        m.stddev(j) = var > 1e-24 * scale * scale ? std::sqrt(var) : 0.0;
    }
    const Eigen::MatrixXd z = m.standardize(x);
    const Eigen::MatrixXd cov = (z.transpose() * z) / n;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::DegenerateGeometry, "eigen decomposition failed");
    const Eigen::Index k = cov.rows();
    m.eigenvalues.resize(k);
    m.components.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index src = k - 1 - i;
        m.eigenvalues(i) = std::max(solver.eigenvalues()(src), 0.0);
        Eigen::VectorXd v = solver.eigenvectors().col(src);
        Eigen::Index big = 0;
        for (Eigen::Index r = 1; r < k; ++r) {
            if (std::abs(v(r)) > std::abs(v(big)) + 1e-12) big = r;
        }
        if (v(big) < 0.0) v = -v;
        m.components.col(i) = v;
    }
    const double total = m.eigenvalues.sum();
    m.degenerate = total <= 1e-12;
    m.explained = m.degenerate ? Eigen::VectorXd::Zero(k) : Eigen::VectorXd(m.eigenvalues / total);
    return m;
}

namespace {

std::vector<double> spectrum(const Eigen::MatrixXd& adjacency) {
    if (adjacency.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

std::vector<double> subdivision_spectrum(const Hypergraph& hg) {
    std::vector<std::pair<int, int>> links;
    int count = 0;
    std::function<int(const SubdivNode&)> walk = [&](const SubdivNode& n) {
        const int self = count++;
        for (const SubdivNode& c : n.children) links.emplace_back(self, walk(c));
        return self;
    };
    walk(hg.root);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(count, count);
    for (auto [p, c] : links) a(p, c) = a(c, p) = 1.0;
    return spectrum(a);
}

std::vector<double> access_spectrum(const Hypergraph& hg) {
    std::map<std::string, int> index;
    for (const SubdivNode* leaf : hg.leaves()) index.emplace(leaf->room_id, 0);
    int i = 0;
    for (auto& [id, k] : index) k = i++;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(i, i);
    for (const auto& [x, y] : hg.access_edges) a(index.at(x), index.at(y)) = a(index.at(y), index.at(x)) = 1.0;
    return spectrum(a);
}

double spectrum_distance(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum);
}

SpectralDistance hypergraph_distance(const Hypergraph& a, const Hypergraph& b) {
    return {spectrum_distance(subdivision_spectrum(a), subdivision_spectrum(b)),
            spectrum_distance(access_spectrum(a), access_spectrum(b))};
}

}  // namespace hyperplan

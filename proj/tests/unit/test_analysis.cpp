#include "builders.hpp"
#include "oracles.hpp"

#include "hyperplan/analysis.hpp"
#include "hyperplan/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hyperplan;
using namespace testing;

namespace {

std::vector<double> oracle_spectrum(int n, const std::vector<std::pair<int, int>>& links) {
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (auto [i, j] : links) a[i][j] = a[j][i] = 1.0;
    return oracle::jacobi_eigen(a).values;
}

}  // namespace

TEST_CASE("features of a single-room studio") {
    const FloorPlan plan = single_room_plan(6);
    const FeatureVector f = features(encode_plan(plan), plan);
    CHECK(f[0] == 1.0);
    CHECK(f[1] == 0.0);
    CHECK(f[2] == doctest::Approx(36.0));
    CHECK(f[3] == 0.0);
    CHECK(f[4] == doctest::Approx(1.0));  // the entrance link only
    CHECK(f[5] == 0.0);
    CHECK(f[6] == 0.0);
    CHECK(f[7] == 0.0);
    CHECK(f[8] == 1.0);
    CHECK(f[9] == doctest::Approx(1.0));
}

TEST_CASE("features of two stacked rooms") {
    const FloorPlan plan = two_room_plan(8, 5);
    const FeatureVector f = features(encode_plan(plan), plan);
    CHECK(f[0] == 2.0);
    CHECK(f[1] == 1.0);
    CHECK(f[3] == doctest::Approx(0.5));
    CHECK(f[4] == doctest::Approx(1.5));
    CHECK(f[5] == 1.0);
    CHECK(f[6] == doctest::Approx(1.0));
    CHECK(f[7] == doctest::Approx(0.0));
    CHECK(f[9] == doctest::Approx(4.0 * std::sqrt(40.0) / 26.0));
}

TEST_CASE("staged tree depths") {
    const FloorPlan plan = staged_plan();
    const FeatureVector f = features(encode_plan(plan), plan);
    CHECK(f[0] == 5.0);
    CHECK(f[5] >= 2.0);
    CHECK(f[7] >= 0.0);
}

TEST_CASE("features require the graph and plan to describe the same rooms") {
    try {
        features(encode_plan(two_room_plan()), single_room_plan());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentPair);
    }
}

TEST_CASE("feature names and version") {
    CHECK(kFeatureNames.size() == kFeatureCount);
    CHECK(kFeatureNames[0] == "n_rooms");
    CHECK(kFeatureSetVersion == 1);
}

TEST_CASE("PCA of two points puts all variance on one axis") {
    Eigen::MatrixXd x(2, 3);
    x << 0, 1, 2, 2, 3, 0;
    const PcaModel m = pca_fit(x);
    CHECK_FALSE(m.degenerate);
    CHECK(m.explained(0) == doctest::Approx(1.0));
    CHECK(m.explained.sum() == doctest::Approx(1.0));
}

TEST_CASE("PCA degenerate and malformed inputs") {
    Eigen::MatrixXd same(3, 2);
    same << 1, 2, 1, 2, 1, 2;
    const PcaModel m = pca_fit(same);
    CHECK(m.degenerate);
    CHECK(m.explained.isZero());
    CHECK_THROWS_AS(pca_fit(Eigen::MatrixXd::Ones(1, 3)), Error);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(3, 2);
    bad(1, 1) = std::nan("");
    CHECK_THROWS_AS(pca_fit(bad), Error);
}

TEST_CASE("PCA agrees with a Jacobi solver on standardized data") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd x(30, 5);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = g(rng) * (j + 1) + (j == 2 ? x(i, 0) : 0.0);
    const PcaModel m = pca_fit(x);

    const Eigen::Index n = x.rows(), k = x.cols();
    std::vector<std::vector<double>> cov(k, std::vector<double>(k, 0.0));
    std::vector<double> mu(k, 0.0), sd(k, 0.0);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) mu[j] += x(i, j) / n;
        for (Eigen::Index i = 0; i < n; ++i) sd[j] += (x(i, j) - mu[j]) * (x(i, j) - mu[j]) / n;
        sd[j] = std::sqrt(sd[j]);
    }
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
            for (Eigen::Index i = 0; i < n; ++i)
                cov[a][b] += (x(i, a) - mu[a]) / sd[a] * (x(i, b) - mu[b]) / sd[b] / n;
    const auto ref = oracle::jacobi_eigen(cov);
    for (Eigen::Index i = 0; i < k; ++i) {
        CHECK(m.eigenvalues(i) == doctest::Approx(ref.values[i]).epsilon(1e-10));
        double dot = 0.0;
        for (Eigen::Index r = 0; r < k; ++r) dot += m.components(r, i) * ref.vectors[i][r];
        CHECK(std::abs(dot) == doctest::Approx(1.0).epsilon(1e-8));
    }
    const Eigen::MatrixXd proj = m.project(x);
    CHECK(proj.col(0).mean() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectral distance pads with zeros and is zero under mirroring") {
    CHECK(spectrum_distance({1, 0, -1}, {1, 0, -1}) == 0.0);
    CHECK(spectrum_distance({2}, {2, 1}) == doctest::Approx(1.0));
    CHECK(spectrum_distance({}, {3, 4}) == doctest::Approx(5.0));
    for (const std::string& id : golden_plan_ids()) {
        CAPTURE(id);
        const Hypergraph hg = encode_plan(golden_plan(id));
        const SpectralDistance d = hypergraph_distance(hg, mirror(hg));
        CHECK(d.subdivision == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(d.access == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("tree and access spectra match an independent solver") {
    const Hypergraph two = encode_plan(two_room_plan());
    const auto s2 = subdivision_spectrum(two);
    const auto o2 = oracle_spectrum(3, {{0, 1}, {0, 2}});
    REQUIRE(s2.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(s2[i] == doctest::Approx(o2[i]).epsilon(1e-12));
    CHECK(s2[0] == doctest::Approx(std::sqrt(2.0)));

    // staged: any three-level tree with five leaves has nine nodes
    const Hypergraph staged = encode_plan(staged_plan());
    CHECK(subdivision_spectrum(staged).size() == 9);
    const auto a = access_spectrum(staged);
    // access tree d1-d2, d1-c1, c1-c2, d2-b1: a path of five rooms
    const auto o = oracle_spectrum(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    REQUIRE(a.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(a[i] == doctest::Approx(o[i]).epsilon(1e-12));

    const SpectralDistance d = hypergraph_distance(two, staged);
    auto padded = o2;
    padded.resize(9, 0.0);
    double sum = 0.0;
    const auto s9 = subdivision_spectrum(staged);
    for (int i = 0; i < 9; ++i) sum += (padded[i] - s9[i]) * (padded[i] - s9[i]);
    CHECK(d.subdivision == doctest::Approx(std::sqrt(sum)));
}

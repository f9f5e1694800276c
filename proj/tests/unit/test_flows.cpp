#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "teflow/error.hpp"
#include "teflow/flows.hpp"

using namespace teflow;

namespace {

TEMatrix random_te(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    TEMatrix m(std::move(labels), MatrixKind::TransferEntropy);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = static_cast<double>(rng() % 100000) / 99999.0;
    return m;
}

} // namespace

TEST_CASE("zero matrix gives zero flows") {
    const auto s = flow_summary(TEMatrix({"a", "b", "c"}, MatrixKind::TransferEntropy));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(s.f_out[i] == 0.0);
        CHECK(s.f_in[i] == 0.0);
        CHECK(s.delta_f[i] == 0.0);
    }
}

TEST_CASE("two-sector flows") {
    TEMatrix te({"a", "b"}, MatrixKind::TransferEntropy);
    te.at(0, 1) = 0.4;
    te.at(1, 0) = 0.1;
    const auto s = flow_summary(te);
    CHECK(s.f_out[0] == 0.4);
    CHECK(s.f_out[1] == 0.1);
    CHECK(s.f_in[0] == 0.1);
    CHECK(s.f_in[1] == 0.4);
    CHECK(s.delta_f[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(s.delta_f[1] == doctest::Approx(-0.3).epsilon(1e-15));
}

TEST_CASE("three-sector flows match independent summation") {
    TEMatrix te({"a", "b", "c"}, MatrixKind::TransferEntropy);
    const double v[3][3] = {{0.0, 0.12, 0.34}, {0.05, 0.0, 0.27}, {0.41, 0.09, 0.0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) te.at(i, j) = v[i][j];

    const auto s = flow_summary(te);
    CHECK(std::fabs(s.f_out[0] - (0.12 + 0.34) / 2.0) < 1e-12);
    CHECK(std::fabs(s.f_out[1] - (0.05 + 0.27) / 2.0) < 1e-12);
    CHECK(std::fabs(s.f_out[2] - (0.41 + 0.09) / 2.0) < 1e-12);
    CHECK(std::fabs(s.f_in[0] - (0.05 + 0.41) / 2.0) < 1e-12);
    CHECK(std::fabs(s.f_in[1] - (0.12 + 0.09) / 2.0) < 1e-12);
    CHECK(std::fabs(s.f_in[2] - (0.34 + 0.27) / 2.0) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i) CHECK(s.delta_f[i] == s.f_out[i] - s.f_in[i]);
}

TEST_CASE("flow conservation on random matrices") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 25; ++rep) {
        const auto s = flow_summary(random_te(2 + rng() % 10, rng));
        double out_total = 0.0, in_total = 0.0, delta_total = 0.0;
        for (std::size_t i = 0; i < s.n(); ++i) {
            out_total += s.f_out[i];
            in_total += s.f_in[i];
            delta_total += s.delta_f[i];
        }
        CHECK(std::fabs(out_total - in_total) <= 1e-12);
        CHECK(std::fabs(delta_total) / s.n() <= 1e-12);
    }
}

TEST_CASE("symmetric matrix has zero net flow") {
    std::mt19937_64 rng(11);
    TEMatrix te = random_te(5, rng);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) te.at(j, i) = te.at(i, j);
    const auto s = flow_summary(te);
    for (std::size_t i = 0; i < 5; ++i) CHECK(s.delta_f[i] == 0.0);
}

TEST_CASE("flow_summary rejects wrong kinds and tiny matrices") {
    TEMatrix asym({"a", "b"}, MatrixKind::Asymmetry);
    CHECK_THROWS_AS(flow_summary(asym), ContractError);
    CHECK_THROWS_AS(flow_summary(TEMatrix({"a"}, MatrixKind::TransferEntropy)),
                    InsufficientDataError);
}

TEST_CASE("ranking: source first, sink last") {
    FlowSummary s;
    s.labels = {"sink", "source"};
    s.f_out = {0.1, 0.4};
    s.f_in = {0.4, 0.1};
    s.delta_f = {-0.3, 0.3};
    const auto ranked = rank_by_net_flow(s);
    CHECK(ranked[0].first == "source");
    CHECK(ranked[1].first == "sink");
}

TEST_CASE("ranking ties break alphabetically") {
    FlowSummary s;
    s.labels = {"c", "a", "b"};
    s.f_out = {0.2, 0.2, 0.2};
    s.f_in = {0.2, 0.2, 0.2};
    s.delta_f = {0.0, 0.0, 0.0};
    const auto ranked = rank_by_net_flow(s);
    CHECK(ranked[0].first == "a");
    CHECK(ranked[1].first == "b");
    CHECK(ranked[2].first == "c");
}

TEST_CASE("ranking extremes agree with a naive scan") {
    std::mt19937_64 rng(2718);
    for (int rep = 0; rep < 20; ++rep) {
        const auto s = flow_summary(random_te(3 + rng() % 8, rng));
        const auto ranked = rank_by_net_flow(s);

        std::size_t argmax = 0, argmin = 0;
        for (std::size_t i = 1; i < s.n(); ++i) {
            if (s.delta_f[i] > s.delta_f[argmax]) argmax = i;
            if (s.delta_f[i] < s.delta_f[argmin]) argmin = i;
        }
        CHECK(ranked.front().second == s.delta_f[argmax]);
        CHECK(ranked.back().second == s.delta_f[argmin]);
    }
}

TEST_CASE("regression recovers an exact line") {
    FlowSummary s;
    for (int i = 0; i < 10; ++i) {
        s.labels.push_back("s" + std::to_string(i));
        const double x = 0.05 + 0.01 * i;
        s.f_in.push_back(x);
        s.f_out.push_back(2.0 * x + 1.0);
        s.delta_f.push_back(s.f_out.back() - s.f_in.back());
    }
    const auto r = ols_outflow_on_inflow(s);
    CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.intercept == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.r2_adjusted == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.p_slope < 1e-10);
    CHECK(r.n_points == 10);
}

TEST_CASE("regression on a seeded noisy fixture matches the independent route") {
    std::mt19937_64 rng(1234);
    auto unit = [&] { return static_cast<double>(rng() % 1000000) / 999999.0; };

    FlowSummary s;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        s.labels.push_back("s" + std::to_string(i));
        s.f_in.push_back(unit());
        s.f_out.push_back(0.3 + 0.05 * (unit() - 0.5)); // noise, no real slope
        s.delta_f.push_back(s.f_out.back() - s.f_in.back());
    }
    const auto r = ols_outflow_on_inflow(s);

    // Independent OLS: correlation-based slope and quadrature-based p-values.
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += s.f_in[i];
        my += s.f_out[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (s.f_in[i] - mx) * (s.f_in[i] - mx);
        syy += (s.f_out[i] - my) * (s.f_out[i] - my);
        sxy += (s.f_in[i] - mx) * (s.f_out[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    const double corr = sxy / std::sqrt(sxx * syy);
    const double r2 = corr * corr;

    CHECK(r.slope == doctest::Approx(slope).epsilon(1e-12));
    CHECK(r.intercept == doctest::Approx(intercept).epsilon(1e-12));
    CHECK(r.r2 == doctest::Approx(r2).epsilon(1e-10));
    CHECK(r.r2_adjusted == doctest::Approx(1.0 - (1.0 - r2) * (n - 1) / (n - 2)).epsilon(1e-10));
    CHECK(r.r2_adjusted <= r.r2);
    CHECK(r.r2 <= 1.0);

    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double resid = s.f_out[i] - intercept - slope * s.f_in[i];
        rss += resid * resid;
    }
    const double se_slope = std::sqrt(rss / (n - 2) / sxx);
    const double t_slope = slope / se_slope;
    const double p_expected = 2.0 * (1.0 - testsupport::simpson_t_cdf(std::fabs(t_slope), n - 2));
    CHECK(std::fabs(r.p_slope - p_expected) < 1e-8);
    CHECK(r.p_slope > 0.05); // uncorrelated noise: no significant slope

    CHECK(r.p_slope >= 0.0);
    CHECK(r.p_slope <= 1.0);
    CHECK(r.p_intercept >= 0.0);
    CHECK(r.p_intercept <= 1.0);
}

TEST_CASE("adding a constant to f_in shifts only the intercept") {
    std::mt19937_64 rng(55);
    FlowSummary s;
    for (int i = 0; i < 30; ++i) {
        s.labels.push_back("s" + std::to_string(i));
        s.f_in.push_back(static_cast<double>(rng() % 1000) / 1000.0);
        s.f_out.push_back(0.4 * s.f_in.back() + static_cast<double>(rng() % 100) / 1000.0);
        s.delta_f.push_back(s.f_out.back() - s.f_in.back());
    }
    const auto base = ols_outflow_on_inflow(s);

    FlowSummary shifted = s;
    for (auto& x : shifted.f_in) x += 5.0;
    const auto moved = ols_outflow_on_inflow(shifted);

    CHECK(moved.slope == doctest::Approx(base.slope).epsilon(1e-9));
    CHECK(moved.intercept == doctest::Approx(base.intercept - 5.0 * base.slope).epsilon(1e-9));
}

TEST_CASE("degenerate regressions are rejected") {
    FlowSummary constant_x;
    for (int i = 0; i < 5; ++i) {
        constant_x.labels.push_back("s" + std::to_string(i));
        constant_x.f_in.push_back(0.25);
        constant_x.f_out.push_back(0.1 * i);
        constant_x.delta_f.push_back(constant_x.f_out.back() - 0.25);
    }
    CHECK_THROWS_AS(ols_outflow_on_inflow(constant_x), DegenerateSeriesError);

    FlowSummary two_points;
    two_points.labels = {"a", "b"};
    two_points.f_in = {0.1, 0.2};
    two_points.f_out = {0.3, 0.4};
    two_points.delta_f = {0.2, 0.2};
    CHECK_THROWS_AS(ols_outflow_on_inflow(two_points), InsufficientDataError);
}

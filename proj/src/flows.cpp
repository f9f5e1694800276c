#include "teflow/flows.hpp"

#include <algorithm>
#include <cmath>

#include "teflow/error.hpp"
#include "teflow/stats.hpp"

namespace teflow {

FlowSummary flow_summary(const TEMatrix& te) {
    if (te.kind != MatrixKind::TransferEntropy)
        throw ContractError("flow_summary expects a transfer-entropy matrix");
    const std::size_t n = te.n();
    if (n < 2) throw InsufficientDataError("flow_summary needs n >= 2 sectors");

    FlowSummary s;
    s.labels = te.labels;
    s.f_out.resize(n);
    s.f_in.resize(n);
    s.delta_f.resize(n);
    const double scale = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        double out_sum = 0.0;
        double in_sum = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            if (p == i) continue;
            out_sum += te.at(i, p);
            in_sum += te.at(p, i);
        }
        s.f_out[i] = out_sum * scale;
        s.f_in[i] = in_sum * scale;
        s.delta_f[i] = s.f_out[i] - s.f_in[i];
    }
    return s;
}

std::vector<std::pair<std::string, double>> rank_by_net_flow(const FlowSummary& summary) {
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(summary.n());
    for (std::size_t i = 0; i < summary.n(); ++i)
        ranked.emplace_back(summary.labels[i], summary.delta_f[i]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

RegressionResult ols_outflow_on_inflow(const FlowSummary& summary) {
    const std::size_t n = summary.n();
    if (n < 3)
        throw InsufficientDataError("regression needs at least 3 points, got " +
                                    std::to_string(n));

    const auto& x = summary.f_in;
    const auto& y = summary.f_out;
    const double nn = static_cast<double>(n);

    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= nn;
    y_mean /= nn;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw DegenerateSeriesError("zero variance in f_in; regression is degenerate");

    RegressionResult r;
    r.n_points = static_cast<int>(n);
    r.slope = sxy / sxx;
    r.intercept = y_mean - r.slope * x_mean;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = y[i] - (r.intercept + r.slope * x[i]);
        rss += resid * resid;
    }

    const double df = nn - 2.0;
    const double sigma2 = rss / df;
    const double se_slope = std::sqrt(sigma2 / sxx);
    const double se_intercept = std::sqrt(sigma2 * (1.0 / nn + x_mean * x_mean / sxx));

    // A perfect fit drives the standard errors to zero; the p-value then
    // degenerates to 0 for a nonzero coefficient and 1 for a zero one.
    auto p_value = [&](double coef, double se) {
        if (se == 0.0) return coef == 0.0 ? 1.0 : 0.0;
        return student_t_two_sided_p(coef / se, df);
    };
    r.p_slope = p_value(r.slope, se_slope);
    r.p_intercept = p_value(r.intercept, se_intercept);

    r.r2 = syy == 0.0 ? 1.0 : 1.0 - rss / syy;
    r.r2_adjusted = 1.0 - (1.0 - r.r2) * (nn - 1.0) / df;
    return r;
}

} // namespace teflow

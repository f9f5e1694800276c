#pragma once

#include <string>
#include <utility>
#include <vector>

#include "teflow/entropy.hpp"

namespace teflow {

// Per-sector average outflow/inflow over the other n-1 sectors, in bits.
struct FlowSummary {
    std::vector<std::string> labels;
    std::vector<double> f_out;
    std::vector<double> f_in;
    std::vector<double> delta_f; // f_out - f_in, elementwise

    std::size_t n() const { return labels.size(); }
};

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double p_slope = 1.0;
    double p_intercept = 1.0;
    double r2 = 0.0;
    double r2_adjusted = 0.0;
    int n_points = 0;
};

// f_out[i] = mean of row i off-diagonal, f_in[i] = mean of column i
// off-diagonal. Requires a transfer-entropy matrix with n >= 2.
FlowSummary flow_summary(const TEMatrix& te);

// Descending by net flow; ties broken by ascending label.
std::vector<std::pair<std::string, double>> rank_by_net_flow(const FlowSummary& summary);

// OLS of f_out on f_in with intercept; two-sided p-values from the t
// distribution with n-2 degrees of freedom.
RegressionResult ols_outflow_on_inflow(const FlowSummary& summary);

} // namespace teflow

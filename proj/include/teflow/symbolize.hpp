#pragma once

#include <span>
#include <string>
#include <vector>

#include "teflow/panel.hpp"

namespace teflow {

// Uniform amplitude binning of a scalar series into q intervals of width
// delta = (x_max - x_min) / q. Intervals are half-open except the top one,
// which is closed so that x_max receives symbol q.
struct BinningSpec {
    int q = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double delta = 0.0;

    void validate() const; // throws ValidationError on a degenerate spec
};

struct SymbolSeries {
    std::vector<int> symbols; // each in [1, spec.q]
    BinningSpec spec;
    std::string label;

    std::size_t size() const { return symbols.size(); }
};

BinningSpec fit_bins(std::span<const double> series, int q);

SymbolSeries symbolize(std::span<const double> series, const BinningSpec& spec,
                       std::string label = {});

// One SymbolSeries per column, each with its own independently fitted spec.
// Constant columns are collected and reported in a single error.
std::vector<SymbolSeries> symbolize_panel(const ReturnPanel& panel, int q);

} // namespace teflow

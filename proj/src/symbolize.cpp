#include "teflow/symbolize.hpp"

#include <cmath>
#include <limits>

#include "teflow/error.hpp"

namespace teflow {

void BinningSpec::validate() const {
    if (q < 2) throw ValidationError("bin count q must be >= 2, got " + std::to_string(q));
    if (!(x_max > x_min))
        throw ValidationError("degenerate binning spec: x_max must exceed x_min");
    if (!(delta > 0.0)) throw ValidationError("degenerate binning spec: delta must be positive");
}

BinningSpec fit_bins(std::span<const double> series, int q) {
    if (q < 2) throw ValidationError("bin count q must be >= 2, got " + std::to_string(q));
    if (series.empty()) throw ValidationError("cannot fit bins on an empty series");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : series) {
        if (!std::isfinite(v)) throw DomainError("non-finite value in series");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi)
        throw DegenerateSeriesError("constant series (min == max == " + std::to_string(lo) +
                                    ") cannot be binned");

    return BinningSpec{q, lo, hi, (hi - lo) / q};
}

SymbolSeries symbolize(std::span<const double> series, const BinningSpec& spec,
                       std::string label) {
    spec.validate();

    SymbolSeries out;
    out.spec = spec;
    out.label = std::move(label);
    out.symbols.reserve(series.size());

    for (std::size_t i = 0; i < series.size(); ++i) {
        const double v = series[i];
        if (!std::isfinite(v) || v < spec.x_min || v > spec.x_max)
            throw OutOfRangeError("value " + std::to_string(v) + " at index " +
                                  std::to_string(i) + " outside [" + std::to_string(spec.x_min) +
                                  ", " + std::to_string(spec.x_max) + "]");
        // Half-open intervals with the top bin closed: x_max maps to q, and
        // the clamp also absorbs floating-point spill at the last edge.
        int k = static_cast<int>(std::floor((v - spec.x_min) / spec.delta)) + 1;
        if (k > spec.q) k = spec.q;
        if (k < 1) k = 1;
        out.symbols.push_back(k);
    }
    return out;
}

std::vector<SymbolSeries> symbolize_panel(const ReturnPanel& panel, int q) {
    if (q < 2) throw ValidationError("bin count q must be >= 2, got " + std::to_string(q));

    std::vector<SymbolSeries> out;
    out.reserve(panel.cols());
    std::string degenerate;
    for (std::size_t j = 0; j < panel.cols(); ++j) {
        const auto column = panel.column(j);
        try {
            out.push_back(symbolize(column, fit_bins(column, q), panel.labels[j]));
        } catch (const DegenerateSeriesError&) {
            if (!degenerate.empty()) degenerate += ", ";
            degenerate += panel.labels[j];
        }
    }
    if (!degenerate.empty())
        throw DegenerateSeriesError("degenerate (constant) columns: " + degenerate);
    return out;
}

} // namespace teflow

#include "teflow/evolution.hpp"

#include <cmath>

#include "teflow/error.hpp"

namespace teflow {

WindowSpec WindowSpec::calendar_year(int min_observations) {
    WindowSpec s;
    s.scheme = Scheme::CalendarYear;
    s.min_observations = min_observations;
    return s;
}

WindowSpec WindowSpec::fixed_length(int length, int stride, int min_observations) {
    WindowSpec s;
    s.scheme = Scheme::FixedLength;
    s.length = length;
    s.stride = stride;
    s.min_observations = min_observations;
    return s;
}

void WindowSpec::validate() const {
    if (min_observations < 1) throw ValidationError("min_observations must be >= 1");
    if (scheme == Scheme::FixedLength) {
        if (length < min_observations)
            throw ValidationError("fixed window length " + std::to_string(length) +
                                  " is below min_observations " + std::to_string(min_observations));
        if (stride < 1) throw ValidationError("window stride must be >= 1");
    }
}

namespace {

ReturnPanel slice_rows(const ReturnPanel& panel, std::size_t begin, std::size_t end) {
    ReturnPanel out;
    out.labels = panel.labels;
    out.dates.assign(panel.dates.begin() + begin, panel.dates.begin() + end);
    out.returns.assign(panel.returns.begin() + begin, panel.returns.begin() + end);
    return out;
}

} // namespace

WindowSplit split_windows(const ReturnPanel& panel, const WindowSpec& spec) {
    spec.validate();

    WindowSplit split;
    const std::size_t rows = panel.rows();
    const std::size_t min_obs = static_cast<std::size_t>(spec.min_observations);

    if (spec.scheme == WindowSpec::Scheme::CalendarYear) {
        std::size_t begin = 0;
        while (begin < rows) {
            const int year = panel.dates[begin].year;
            std::size_t end = begin;
            while (end < rows && panel.dates[end].year == year) ++end;
            const std::string label = std::to_string(year);
            if (end - begin >= min_obs)
                split.windows.emplace_back(label, slice_rows(panel, begin, end));
            else
                split.warnings.push_back(
                    {label, "below min_observations (" + std::to_string(spec.min_observations) + ")",
                     end - begin});
            begin = end;
        }
    } else {
        const std::size_t w = static_cast<std::size_t>(spec.length);
        const std::size_t s = static_cast<std::size_t>(spec.stride);
        for (std::size_t start = 0; start + w <= rows; start += s)
            split.windows.emplace_back(panel.dates[start].iso(),
                                       slice_rows(panel, start, start + w));
    }

    if (split.windows.empty())
        throw NoValidWindowsError("no window satisfies min_observations=" +
                                  std::to_string(spec.min_observations));
    return split;
}

EvolutionSeries windowed_te(const ReturnPanel& panel, const WindowSpec& spec,
                            const EstimatorConfig& cfg, BinningMode binning,
                            bool keep_matrices) {
    cfg.validate();
    WindowSplit split = split_windows(panel, spec);

    // Full-sample mode fits one spec per column on the whole panel and reuses
    // it inside every window; window values always lie within the fitted range.
    std::vector<BinningSpec> global_specs;
    if (binning == BinningMode::FullSample) {
        global_specs.reserve(panel.cols());
        for (std::size_t j = 0; j < panel.cols(); ++j)
            global_specs.push_back(fit_bins(panel.column(j), cfg.q));
    }

    EvolutionSeries series;
    series.warnings = std::move(split.warnings);

    for (auto& [label, window] : split.windows) {
        std::vector<SymbolSeries> symbols;
        try {
            if (binning == BinningMode::PerWindow) {
                symbols = symbolize_panel(window, cfg.q);
            } else {
                symbols.reserve(window.cols());
                for (std::size_t j = 0; j < window.cols(); ++j)
                    symbols.push_back(
                        symbolize(window.column(j), global_specs[j], window.labels[j]));
            }
            TEMatrix te = te_matrix(symbols, cfg);
            TEMatrix dte = asymmetry_matrix(te);
            series.window_labels.push_back(label);
            series.mean_te.push_back(mean_te_of_matrix(te));
            series.mean_abs_asymmetry.push_back(mean_abs_asymmetry(dte));
            series.n_observations.push_back(window.rows());
            if (keep_matrices) series.matrices.push_back(std::move(te));
        } catch (const DegenerateSeriesError& e) {
            series.warnings.push_back({label, e.what(), window.rows()});
        } catch (const InsufficientDataError& e) {
            series.warnings.push_back({label, e.what(), window.rows()});
        }
    }

    if (series.window_labels.empty())
        throw NoValidWindowsError("every window was skipped (degenerate or too short)");
    return series;
}

double mean_te_of_matrix(const TEMatrix& te) {
    if (te.kind != MatrixKind::TransferEntropy)
        throw ContractError("mean_te_of_matrix expects a transfer-entropy matrix");
    const std::size_t n = te.n();
    if (n < 2) throw InsufficientDataError("matrix mean needs n >= 2");

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += te.at(i, j);
    return sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double mean_abs_asymmetry(const TEMatrix& dte) {
    if (dte.kind != MatrixKind::Asymmetry)
        throw ContractError("mean_abs_asymmetry expects an asymmetry matrix");
    const std::size_t n = dte.n();
    if (n < 2) throw InsufficientDataError("matrix mean needs n >= 2");

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sum += std::fabs(dte.at(i, j));
    return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::vector<QScanRow> scan_q(const ReturnPanel& panel, int q_min, int q_max,
                             const EstimatorConfig& cfg_template) {
    if (q_min < 2 || q_max > 64 || q_min > q_max)
        throw ValidationError("q range must satisfy 2 <= q_min <= q_max <= 64, got [" +
                              std::to_string(q_min) + ", " + std::to_string(q_max) + "]");

    std::vector<QScanRow> rows;
    rows.reserve(static_cast<std::size_t>(q_max - q_min + 1));
    for (int q = q_min; q <= q_max; ++q) {
        EstimatorConfig cfg = cfg_template;
        cfg.q = q;
        const auto symbols = symbolize_panel(panel, q);
        const TEMatrix te = te_matrix(symbols, cfg);
        rows.push_back({q, mean_te_of_matrix(te), mean_abs_asymmetry(asymmetry_matrix(te))});
    }
    return rows;
}

} // namespace teflow

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "teflow/entropy.hpp"
#include "teflow/panel.hpp"

namespace teflow {

struct WindowSpec {
    enum class Scheme { CalendarYear, FixedLength };
    Scheme scheme = Scheme::CalendarYear;
    int length = 0; // fixed-length only
    int stride = 0; // fixed-length only
    int min_observations = 50;

    static WindowSpec calendar_year(int min_observations = 50);
    static WindowSpec fixed_length(int length, int stride, int min_observations = 50);
    void validate() const;
};

struct WindowWarning {
    std::string window_label;
    std::string reason;
    std::size_t n_observations = 0;
};

struct WindowSplit {
    std::vector<std::pair<std::string, ReturnPanel>> windows;
    std::vector<WindowWarning> warnings;
};

enum class BinningMode { PerWindow, FullSample };

// Per-window market-wide averages; all per-window vectors share one length.
struct EvolutionSeries {
    std::vector<std::string> window_labels;
    std::vector<double> mean_te;
    std::vector<double> mean_abs_asymmetry;
    std::vector<std::size_t> n_observations;
    std::vector<TEMatrix> matrices; // filled only when requested
    std::vector<WindowWarning> warnings;

    std::size_t size() const { return window_labels.size(); }
};

// Calendar-year windows group return rows by the year of each return date
// (each return belongs to the year of its later price observation). Windows
// below min_observations are dropped with a warning record.
WindowSplit split_windows(const ReturnPanel& panel, const WindowSpec& spec);

// Symbolizes each window (refitting bins per window, or reusing full-sample
// bins), computes the TE and asymmetry matrices, and reduces them to the
// market-wide means. Windows with degenerate columns are skipped with a
// warning rather than failing the run.
EvolutionSeries windowed_te(const ReturnPanel& panel, const WindowSpec& spec,
                            const EstimatorConfig& cfg, BinningMode binning,
                            bool keep_matrices = false);

// Off-diagonal mean: sum over i != j of te(i,j) / (n(n-1)).
double mean_te_of_matrix(const TEMatrix& te);

// Strict-upper-triangle mean of |dte|: 2 / (n(n-1)) * sum_{i<j} |dte(i,j)|.
double mean_abs_asymmetry(const TEMatrix& dte);

struct QScanRow {
    int q = 0;
    double mean_te = 0.0;
    double mean_abs_asymmetry = 0.0;
};

// Full-sample means per bin count q in [q_min, q_max] (bounds within [2, 64]).
std::vector<QScanRow> scan_q(const ReturnPanel& panel, int q_min, int q_max,
                             const EstimatorConfig& cfg_template);

} // namespace teflow

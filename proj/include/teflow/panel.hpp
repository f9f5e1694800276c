#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "teflow/date.hpp"

namespace teflow {

struct PanelFormat {
    char delimiter = ',';
    std::string date_pattern = "%Y-%m-%d";
};

struct AlignmentPolicy {
    enum class Kind { DropIncompleteRows, ForwardFill };
    Kind kind = Kind::DropIncompleteRows;
    int max_gap = 0; // forward-fill only: longest run of missing cells that may be carried

    static AlignmentPolicy drop() { return {Kind::DropIncompleteRows, 0}; }
    static AlignmentPolicy forward_fill(int max_gap) { return {Kind::ForwardFill, max_gap}; }
};

// Date-aligned matrix of closing prices, one column per labeled sector.
// Missing cells are NaN until align_panel() has run; present values are
// strictly positive and finite, dates strictly increasing.
struct PricePanel {
    std::vector<Date> dates;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> prices; // rows() x cols(), row-major

    std::size_t rows() const { return dates.size(); }
    std::size_t cols() const { return labels.size(); }
    bool complete() const;
};

// Log returns of a complete price panel: row t holds ln P[t+1] - ln P[t]
// and carries the date of the later observation.
struct ReturnPanel {
    std::vector<Date> dates;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> returns;

    std::size_t rows() const { return dates.size(); }
    std::size_t cols() const { return labels.size(); }
    std::vector<double> column(std::size_t j) const;
};

struct AlignmentReport {
    std::size_t rows_before = 0;
    std::size_t rows_dropped = 0;
    std::size_t cells_filled = 0;
};

// Reads a delimited panel: header row of `date` plus one column per sector
// label, then one row per day. Empty cells and NA/NaN mark missing prices.
// Rows are returned sorted by date; duplicate dates and labels are rejected.
PricePanel load_price_panel(std::istream& in, const PanelFormat& format = {});

// Removes or fills missing cells so that every remaining row is complete.
PricePanel align_panel(const PricePanel& panel, const AlignmentPolicy& policy,
                       AlignmentReport* report = nullptr);

ReturnPanel compute_log_returns(const PricePanel& panel);

} // namespace teflow

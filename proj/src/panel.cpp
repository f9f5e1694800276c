#include "teflow/panel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <set>

#include "teflow/error.hpp"

namespace teflow {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t end = line.find(delim, start);
        if (end == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return cells;
}

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i])) ++i;
    return s.substr(i);
}

bool is_missing_token(const std::string& cell) {
    if (cell.empty()) return true;
    std::string lower;
    lower.reserve(cell.size());
    for (char c : cell) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return lower == "na" || lower == "nan" || lower == "null";
}

double parse_price(const std::string& cell, std::size_t line_no) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("line " + std::to_string(line_no) + ": cannot parse price '" + cell + "'");
    return value;
}

} // namespace

bool PricePanel::complete() const {
    for (const auto& row : prices)
        for (double v : row)
            if (std::isnan(v)) return false;
    return true;
}

std::vector<double> ReturnPanel::column(std::size_t j) const {
    std::vector<double> out(rows());
    for (std::size_t t = 0; t < rows(); ++t) out[t] = returns[t][j];
    return out;
}

PricePanel load_price_panel(std::istream& in, const PanelFormat& format) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("line 1: empty input, expected a header row");

    auto header = split(trim(line), format.delimiter);
    if (header.size() < 2)
        throw SchemaError("header must contain a date column plus at least one sector label");

    PricePanel panel;
    panel.labels.assign(header.begin() + 1, header.end());
    for (auto& l : panel.labels) l = trim(l);

    std::set<std::string> seen;
    for (const auto& l : panel.labels) {
        if (l.empty()) throw SchemaError("empty sector label in header");
        if (!seen.insert(l).second) throw SchemaError("duplicate sector label '" + l + "'");
    }

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        auto cells = split(line, format.delimiter);
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(cells.size()));

        Date date;
        try {
            date = Date::parse(trim(cells[0]), format.date_pattern);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }

        std::vector<double> row(panel.cols(), kMissing);
        for (std::size_t j = 0; j < panel.cols(); ++j) {
            const std::string cell = trim(cells[j + 1]);
            if (is_missing_token(cell)) continue;
            const double value = parse_price(cell, line_no);
            if (!std::isfinite(value) || value <= 0.0)
                throw DomainError("non-positive price " + cell + " for label '" +
                                  panel.labels[j] + "' at " + date.iso());
            row[j] = value;
        }
        panel.dates.push_back(date);
        panel.prices.push_back(std::move(row));
    }

    // Sort rows by date, then reject duplicates.
    std::vector<std::size_t> order(panel.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return panel.dates[a] < panel.dates[b]; });

    PricePanel sorted;
    sorted.labels = panel.labels;
    sorted.dates.reserve(panel.rows());
    sorted.prices.reserve(panel.rows());
    for (std::size_t idx : order) {
        sorted.dates.push_back(panel.dates[idx]);
        sorted.prices.push_back(std::move(panel.prices[idx]));
    }
    for (std::size_t t = 1; t < sorted.rows(); ++t)
        if (sorted.dates[t] == sorted.dates[t - 1])
            throw SchemaError("duplicate date " + sorted.dates[t].iso());

    return sorted;
}

PricePanel align_panel(const PricePanel& panel, const AlignmentPolicy& policy,
                       AlignmentReport* report) {
    if (policy.kind == AlignmentPolicy::Kind::ForwardFill && policy.max_gap < 1)
        throw ValidationError("forward-fill requires max_gap >= 1");

    // A label with zero observations can never be aligned.
    for (std::size_t j = 0; j < panel.cols(); ++j) {
        bool any = false;
        for (std::size_t t = 0; t < panel.rows() && !any; ++t)
            any = !std::isnan(panel.prices[t][j]);
        if (!any && panel.rows() > 0)
            throw EmptyColumnError("column '" + panel.labels[j] + "' has no observations");
    }

    AlignmentReport rep;
    rep.rows_before = panel.rows();

    std::vector<std::vector<double>> filled = panel.prices;
    if (policy.kind == AlignmentPolicy::Kind::ForwardFill) {
        for (std::size_t j = 0; j < panel.cols(); ++j) {
            std::size_t t = 0;
            while (t < panel.rows()) {
                if (!std::isnan(filled[t][j])) { ++t; continue; }
                std::size_t run_end = t;
                while (run_end < panel.rows() && std::isnan(filled[run_end][j])) ++run_end;
                const std::size_t run_len = run_end - t;
                // Whole runs fill or none of it does; a run longer than
                // max_gap (or with no prior observation) stays missing.
                if (t > 0 && run_len <= static_cast<std::size_t>(policy.max_gap)) {
                    for (std::size_t k = t; k < run_end; ++k) {
                        filled[k][j] = filled[t - 1][j];
                        ++rep.cells_filled;
                    }
                }
                t = run_end;
            }
        }
    }

    PricePanel out;
    out.labels = panel.labels;
    for (std::size_t t = 0; t < panel.rows(); ++t) {
        const bool complete = std::none_of(filled[t].begin(), filled[t].end(),
                                           [](double v) { return std::isnan(v); });
        if (complete) {
            out.dates.push_back(panel.dates[t]);
            out.prices.push_back(filled[t]);
        } else {
            ++rep.rows_dropped;
        }
    }

    if (report) *report = rep;
    return out;
}

ReturnPanel compute_log_returns(const PricePanel& panel) {
    if (panel.rows() < 2)
        throw InsufficientDataError("need at least 2 price rows to compute returns");
    if (!panel.complete())
        throw DomainError("panel contains missing cells; align it first");

    ReturnPanel out;
    out.labels = panel.labels;
    out.dates.assign(panel.dates.begin() + 1, panel.dates.end());
    out.returns.resize(panel.rows() - 1, std::vector<double>(panel.cols()));
    for (std::size_t t = 0; t + 1 < panel.rows(); ++t)
        for (std::size_t j = 0; j < panel.cols(); ++j)
            out.returns[t][j] = std::log(panel.prices[t + 1][j]) - std::log(panel.prices[t][j]);
    return out;
}

} // namespace teflow

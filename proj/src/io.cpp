#include "teflow/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "teflow/error.hpp"
#include "teflow/sector_codes.hpp"

namespace teflow::io {

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round_sig12(double v) {
    const std::string s = format_sig12(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t end = line.find(',', start);
        if (end == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r')
        cells.back().pop_back();
    return cells;
}

double parse_double(const std::string& cell, const std::string& context) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("cannot parse number '" + cell + "' in " + context);
    return v;
}

} // namespace

void write_te_matrix_csv(std::ostream& out, const TEMatrix& m) {
    out << "label";
    for (const auto& l : m.labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < m.n(); ++i) {
        out << m.labels[i];
        for (std::size_t j = 0; j < m.n(); ++j) out << ',' << format_sig12(m.at(i, j));
        out << '\n';
    }
}

TEMatrix read_te_matrix_csv(std::istream& in, MatrixKind kind) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix CSV is empty");
    auto header = split_csv(line);
    if (header.size() < 3 || header[0] != "label")
        throw SchemaError("matrix CSV must start with 'label' plus at least two labels");

    TEMatrix m(std::vector<std::string>(header.begin() + 1, header.end()), kind);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw ParseError("matrix row " + std::to_string(row + 1) + " has " +
                             std::to_string(cells.size()) + " fields, expected " +
                             std::to_string(header.size()));
        if (row >= m.n()) throw ShapeError("matrix CSV has more rows than labels");
        if (cells[0] != m.labels[row])
            throw SchemaError("matrix row label '" + cells[0] + "' does not match column '" +
                              m.labels[row] + "'");
        for (std::size_t j = 0; j < m.n(); ++j)
            m.at(row, j) = parse_double(cells[j + 1], "matrix row " + std::to_string(row + 1));
        ++row;
    }
    if (row != m.n()) throw ShapeError("matrix CSV has fewer rows than labels");
    return m;
}

void write_flows_csv(std::ostream& out, const FlowSummary& summary) {
    const auto ranked = rank_by_net_flow(summary);
    std::vector<std::size_t> rank(summary.n(), 0);
    for (std::size_t pos = 0; pos < ranked.size(); ++pos)
        for (std::size_t i = 0; i < summary.n(); ++i)
            if (summary.labels[i] == ranked[pos].first) rank[i] = pos + 1;

    out << "label,f_out,f_in,delta_f,rank,name\n";
    for (std::size_t i = 0; i < summary.n(); ++i) {
        out << summary.labels[i] << ',' << format_sig12(summary.f_out[i]) << ','
            << format_sig12(summary.f_in[i]) << ',' << format_sig12(summary.delta_f[i]) << ','
            << rank[i] << ',' << sector_display_name(summary.labels[i]).value_or("") << '\n';
    }
}

FlowSummary read_flows_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("flows CSV is empty");
    auto header = split_csv(line);

    auto column_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw SchemaError("flows CSV is missing column '" + name + "'");
    };
    const std::size_t c_label = column_of("label");
    const std::size_t c_out = column_of("f_out");
    const std::size_t c_in = column_of("f_in");
    const std::size_t c_delta = column_of("delta_f");

    FlowSummary s;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw ParseError("flows row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " fields, expected " +
                             std::to_string(header.size()));
        s.labels.push_back(cells[c_label]);
        s.f_out.push_back(parse_double(cells[c_out], "flows row " + std::to_string(row)));
        s.f_in.push_back(parse_double(cells[c_in], "flows row " + std::to_string(row)));
        s.delta_f.push_back(parse_double(cells[c_delta], "flows row " + std::to_string(row)));
    }
    return s;
}

void write_evolution_csv(std::ostream& out, const EvolutionSeries& series) {
    out << "window_label,mean_te,mean_abs_asymmetry,n_observations\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << series.window_labels[i] << ',' << format_sig12(series.mean_te[i]) << ','
            << format_sig12(series.mean_abs_asymmetry[i]) << ',' << series.n_observations[i]
            << '\n';
    }
}

void write_qscan_csv(std::ostream& out, const std::vector<QScanRow>& rows) {
    out << "q,mean_te,mean_abs_asymmetry\n";
    for (const auto& r : rows)
        out << r.q << ',' << format_sig12(r.mean_te) << ',' << format_sig12(r.mean_abs_asymmetry)
            << '\n';
}

void write_price_panel_csv(std::ostream& out, const PricePanel& panel) {
    out << "date";
    for (const auto& l : panel.labels) out << ',' << l;
    out << '\n';
    for (std::size_t t = 0; t < panel.rows(); ++t) {
        out << panel.dates[t].iso();
        for (double v : panel.prices[t]) out << ',' << format_sig12(v);
        out << '\n';
    }
}

void write_heatmap_grid_csv(std::ostream& out, const TEMatrix& m) {
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (j) out << ',';
            out << format_sig12(m.at(i, j));
        }
        out << '\n';
    }
}

void write_heatmap_labels(std::ostream& out, const TEMatrix& m) {
    for (const auto& l : m.labels) out << l << '\n';
}

} // namespace teflow::io

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "teflow/entropy.hpp"
#include "teflow/evolution.hpp"
#include "teflow/flows.hpp"
#include "teflow/panel.hpp"

namespace teflow::io {

// All numeric artifact output is printed with 12 significant digits so that
// reruns diff cleanly and fixtures stay stable.
std::string format_sig12(double v);
double round_sig12(double v);

// FNV-1a 64-bit content digest, used in run manifests to fingerprint inputs
// and outputs (change detection, not cryptography).
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Matrix CSV: header "label,<l1>,...,<ln>", one row per source label; cell
// (row i, col j) is the flow i -> j.
void write_te_matrix_csv(std::ostream& out, const TEMatrix& m);
TEMatrix read_te_matrix_csv(std::istream& in, MatrixKind kind);

// flows CSV columns: label,f_out,f_in,delta_f,rank,name. Rank 1 is the
// largest net source; name comes from the bundled sector-code table and is
// empty for unknown labels.
void write_flows_csv(std::ostream& out, const FlowSummary& summary);
FlowSummary read_flows_csv(std::istream& in);

void write_evolution_csv(std::ostream& out, const EvolutionSeries& series);
void write_qscan_csv(std::ostream& out, const std::vector<QScanRow>& rows);
void write_price_panel_csv(std::ostream& out, const PricePanel& panel);

// Bare numeric grid plus a one-label-per-line sidecar, for external plotters.
void write_heatmap_grid_csv(std::ostream& out, const TEMatrix& m);
void write_heatmap_labels(std::ostream& out, const TEMatrix& m);

} // namespace teflow::io

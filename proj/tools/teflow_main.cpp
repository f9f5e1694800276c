// teflow command-line tool: batch driver for panel ingestion, pairwise
// transfer-entropy matrices, flow analytics, windowed evolution, q scans and
// synthetic panel generation. Every run writes a manifest recording the
// parameters, input digest and output digests so results can be reproduced.

#include <algorithm>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teflow/entropy.hpp"
#include "teflow/error.hpp"
#include "teflow/evolution.hpp"
#include "teflow/flows.hpp"
#include "teflow/io.hpp"
#include "teflow/panel.hpp"
#include "teflow/symbolize.hpp"
#include "teflow/synthetic.hpp"
#include "teflow/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Artifact {
    std::string name;
    std::string content;
};

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json digest_entry(const Artifact& artifact) {
    return {{"file", artifact.name},
            {"bytes", artifact.content.size()},
            {"fnv1a64", teflow::io::fnv1a64_hex(artifact.content)}};
}

// Artifacts are assembled fully in memory and written in one pass; a failure
// while flushing removes everything written so far, so no partial run output
// survives a nonzero exit.
void flush_artifacts(const fs::path& out_dir, std::vector<Artifact> artifacts,
                     json manifest_base) {
    fs::create_directories(out_dir);

    manifest_base["outputs"] = json::array();
    for (const auto& a : artifacts) manifest_base["outputs"].push_back(digest_entry(a));
    manifest_base["timestamp_utc"] = utc_timestamp();
    artifacts.push_back({"run_manifest.json", manifest_base.dump(2) + "\n"});

    std::vector<fs::path> written;
    try {
        for (const auto& a : artifacts) {
            const fs::path path = out_dir / a.name;
            teflow::io::write_file(path, a.content);
            written.push_back(path);
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
}

json manifest_base(const std::string& command, json parameters) {
    return {{"tool", teflow::kToolName},
            {"version", teflow::kVersion},
            {"command", command},
            {"parameters", std::move(parameters)}};
}

double round12(double v) { return teflow::io::round_sig12(v); }

json regression_json(const teflow::RegressionResult& r) {
    return {{"slope", round12(r.slope)},
            {"intercept", round12(r.intercept)},
            {"p_slope", round12(r.p_slope)},
            {"p_intercept", round12(r.p_intercept)},
            {"r2", round12(r.r2)},
            {"r2_adjusted", round12(r.r2_adjusted)},
            {"n_points", r.n_points}};
}

teflow::AlignmentPolicy parse_align(const std::string& text) {
    if (text == "drop") return teflow::AlignmentPolicy::drop();
    if (text.rfind("ffill:", 0) == 0) {
        const int gap = std::stoi(text.substr(6));
        return teflow::AlignmentPolicy::forward_fill(gap);
    }
    throw CLI::ValidationError("--align", "expected 'drop' or 'ffill:<max-gap>'");
}

teflow::WindowSpec parse_window(const std::string& text, int min_observations) {
    if (text == "calendar-year") return teflow::WindowSpec::calendar_year(min_observations);
    if (text.rfind("fixed:", 0) == 0) {
        const std::string rest = text.substr(6);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--window", "expected 'fixed:<length>,<stride>'");
        const int w = std::stoi(rest.substr(0, comma));
        const int s = std::stoi(rest.substr(comma + 1));
        return teflow::WindowSpec::fixed_length(w, s, min_observations);
    }
    throw CLI::ValidationError("--window", "expected 'calendar-year' or 'fixed:<length>,<stride>'");
}

struct LoadedPanel {
    teflow::ReturnPanel returns;
    json input_record;
    json alignment_record;
};

LoadedPanel load_returns(const std::string& input, const teflow::PanelFormat& format,
                         const teflow::AlignmentPolicy& align) {
    const std::string bytes = teflow::io::read_file(input);
    std::istringstream stream(bytes);
    const teflow::PricePanel raw = teflow::load_price_panel(stream, format);
    teflow::AlignmentReport report;
    const teflow::PricePanel aligned = teflow::align_panel(raw, align, &report);

    LoadedPanel out;
    out.returns = teflow::compute_log_returns(aligned);
    out.input_record = {{"path", input},
                        {"bytes", bytes.size()},
                        {"fnv1a64", teflow::io::fnv1a64_hex(bytes)}};
    out.alignment_record = {{"rows_before", report.rows_before},
                            {"rows_dropped", report.rows_dropped},
                            {"cells_filled", report.cells_filled}};
    return out;
}

json warnings_json(const std::vector<teflow::WindowWarning>& warnings) {
    json arr = json::array();
    for (const auto& w : warnings)
        arr.push_back({{"window", w.window_label},
                       {"reason", w.reason},
                       {"n_observations", w.n_observations}});
    return arr;
}

template <typename Fn>
std::string render(Fn&& fn) {
    std::ostringstream out;
    fn(out);
    return out.str();
}

int fail(const char* type, const std::exception& e) {
    const json err = {{"error", {{"type", type}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 1;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const teflow::ParseError& e) {
        return fail("parse", e);
    } catch (const teflow::SchemaError& e) {
        return fail("schema", e);
    } catch (const teflow::DomainError& e) {
        return fail("domain", e);
    } catch (const teflow::ShapeError& e) {
        return fail("shape", e);
    } catch (const teflow::InsufficientDataError& e) {
        return fail("insufficient-data", e);
    } catch (const teflow::DegenerateSeriesError& e) {
        return fail("degenerate-series", e);
    } catch (const teflow::OutOfRangeError& e) {
        return fail("out-of-range", e);
    } catch (const teflow::EmptyColumnError& e) {
        return fail("empty-column", e);
    } catch (const teflow::ContractError& e) {
        return fail("contract", e);
    } catch (const teflow::ValidationError& e) {
        return fail("validation", e);
    } catch (const teflow::NoValidWindowsError& e) {
        return fail("no-valid-windows", e);
    } catch (const teflow::Error& e) {
        return fail("error", e);
    } catch (const std::exception& e) {
        return fail("internal", e);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"teflow: directed information flow between the columns of a price panel"};
    app.set_version_flag("--version", std::string(teflow::kVersion));
    app.require_subcommand(1);

    // Options shared by the panel-consuming subcommands.
    struct PanelOpts {
        std::string input;
        std::string out;
        int q = 15;
        std::string delimiter = ",";
        std::string date_format = "%Y-%m-%d";
        std::string align = "drop";
    };

    auto add_panel_opts = [](CLI::App* cmd, PanelOpts& o) {
        cmd->add_option("--input", o.input, "panel CSV (date column + one column per sector)")
            ->required();
        cmd->add_option("--out", o.out, "output directory")->required();
        cmd->add_option("--q", o.q, "number of uniform bins")->check(CLI::Range(2, 64));
        cmd->add_option("--delimiter", o.delimiter, "field delimiter (single character)");
        cmd->add_option("--date-format", o.date_format, "date pattern, e.g. %Y-%m-%d");
        cmd->add_option("--align", o.align, "missing-data policy: drop | ffill:<max-gap>");
    };

    auto panel_format = [](const PanelOpts& o) {
        if (o.delimiter.size() != 1)
            throw CLI::ValidationError("--delimiter", "must be a single character");
        return teflow::PanelFormat{o.delimiter[0], o.date_format};
    };

    auto panel_params = [](const PanelOpts& o) {
        return json{{"input", o.input}, {"q", o.q},         {"delimiter", o.delimiter},
                    {"date_format", o.date_format},         {"align", o.align}};
    };

    int exit_code = 0;

    // ---- compute ---------------------------------------------------------
    auto compute_opts = std::make_shared<PanelOpts>();
    auto compute_emit = std::make_shared<std::vector<std::string>>(
        std::vector<std::string>{"matrices", "flows", "regression"});
    CLI::App* compute = app.add_subcommand(
        "compute", "full-sample TE matrix, asymmetry matrix, flows and regression");
    add_panel_opts(compute, *compute_opts);
    compute
        ->add_option("--emit", *compute_emit,
                     "artifacts to write: matrices,flows,regression,heatmap-data")
        ->delimiter(',')
        ->check(CLI::IsMember({"matrices", "flows", "regression", "heatmap-data"}));

    compute->callback([&, compute_opts, compute_emit] {
        const auto format = panel_format(*compute_opts);
        exit_code = guarded([&] {
            const auto loaded =
                load_returns(compute_opts->input, format, parse_align(compute_opts->align));
            const auto symbols = teflow::symbolize_panel(loaded.returns, compute_opts->q);
            teflow::EstimatorConfig cfg;
            cfg.q = compute_opts->q;
            const auto te = teflow::te_matrix(symbols, cfg);
            const auto dte = teflow::asymmetry_matrix(te);

            auto emitted = [&](const char* what) {
                return std::find(compute_emit->begin(), compute_emit->end(), what) !=
                       compute_emit->end();
            };

            std::vector<Artifact> artifacts;
            if (emitted("matrices")) {
                artifacts.push_back({"te_matrix.csv",
                                     render([&](auto& s) { teflow::io::write_te_matrix_csv(s, te); })});
                artifacts.push_back(
                    {"asymmetry_matrix.csv",
                     render([&](auto& s) { teflow::io::write_te_matrix_csv(s, dte); })});
            }
            if (emitted("flows") || emitted("regression")) {
                const auto summary = teflow::flow_summary(te);
                if (emitted("flows"))
                    artifacts.push_back(
                        {"flows.csv",
                         render([&](auto& s) { teflow::io::write_flows_csv(s, summary); })});
                if (emitted("regression"))
                    artifacts.push_back(
                        {"regression.json",
                         regression_json(teflow::ols_outflow_on_inflow(summary)).dump(2) + "\n"});
            }
            if (emitted("heatmap-data")) {
                artifacts.push_back(
                    {"heatmap_te.csv",
                     render([&](auto& s) { teflow::io::write_heatmap_grid_csv(s, te); })});
                artifacts.push_back(
                    {"heatmap_asymmetry.csv",
                     render([&](auto& s) { teflow::io::write_heatmap_grid_csv(s, dte); })});
                artifacts.push_back(
                    {"heatmap_labels.txt",
                     render([&](auto& s) { teflow::io::write_heatmap_labels(s, te); })});
            }

            json params = panel_params(*compute_opts);
            params["emit"] = *compute_emit;
            json manifest = manifest_base("compute", params);
            manifest["input"] = loaded.input_record;
            manifest["alignment"] = loaded.alignment_record;
            flush_artifacts(compute_opts->out, std::move(artifacts), std::move(manifest));
            return 0;
        });
    });

    // ---- evolve ----------------------------------------------------------
    auto evolve_opts = std::make_shared<PanelOpts>();
    auto evolve_window = std::make_shared<std::string>("calendar-year");
    auto evolve_min_obs = std::make_shared<int>(50);
    auto evolve_binning = std::make_shared<std::string>("per-window");
    auto evolve_matrices = std::make_shared<bool>(false);
    CLI::App* evolve =
        app.add_subcommand("evolve", "windowed market-wide average TE and |asymmetry|");
    add_panel_opts(evolve, *evolve_opts);
    evolve->add_option("--window", *evolve_window,
                       "window scheme: calendar-year | fixed:<length>,<stride>");
    evolve->add_option("--min-observations", *evolve_min_obs,
                       "smallest window kept (calendar scheme)")
        ->check(CLI::PositiveNumber);
    evolve->add_option("--binning", *evolve_binning, "bin fit: per-window | full-sample")
        ->check(CLI::IsMember({"per-window", "full-sample"}));
    evolve->add_flag("--per-window-matrices", *evolve_matrices,
                     "also write one TE matrix file per window");

    evolve->callback([&, evolve_opts, evolve_window, evolve_min_obs, evolve_binning,
                      evolve_matrices] {
        const auto format = panel_format(*evolve_opts);
        const auto window_spec = parse_window(*evolve_window, *evolve_min_obs);
        exit_code = guarded([&] {
            const auto loaded =
                load_returns(evolve_opts->input, format, parse_align(evolve_opts->align));
            teflow::EstimatorConfig cfg;
            cfg.q = evolve_opts->q;
            const auto mode = *evolve_binning == "per-window" ? teflow::BinningMode::PerWindow
                                                              : teflow::BinningMode::FullSample;
            const auto series =
                teflow::windowed_te(loaded.returns, window_spec, cfg, mode, *evolve_matrices);

            std::vector<Artifact> artifacts;
            artifacts.push_back(
                {"evolution.csv",
                 render([&](auto& s) { teflow::io::write_evolution_csv(s, series); })});
            if (*evolve_matrices)
                for (std::size_t i = 0; i < series.matrices.size(); ++i)
                    artifacts.push_back(
                        {"te_matrix_" + series.window_labels[i] + ".csv",
                         render([&](auto& s) {
                             teflow::io::write_te_matrix_csv(s, series.matrices[i]);
                         })});

            json params = panel_params(*evolve_opts);
            params["window"] = *evolve_window;
            params["min_observations"] = *evolve_min_obs;
            params["binning"] = *evolve_binning;
            params["per_window_matrices"] = *evolve_matrices;
            json manifest = manifest_base("evolve", params);
            manifest["input"] = loaded.input_record;
            manifest["alignment"] = loaded.alignment_record;
            manifest["warnings"] = warnings_json(series.warnings);
            flush_artifacts(evolve_opts->out, std::move(artifacts), std::move(manifest));
            return 0;
        });
    });

    // ---- scan-q ----------------------------------------------------------
    auto scan_opts = std::make_shared<PanelOpts>();
    auto scan_qmin = std::make_shared<int>(2);
    auto scan_qmax = std::make_shared<int>(22);
    CLI::App* scan = app.add_subcommand("scan-q", "full-sample means for a range of bin counts");
    add_panel_opts(scan, *scan_opts);
    scan->add_option("--q-min", *scan_qmin, "smallest bin count")->check(CLI::Range(2, 64));
    scan->add_option("--q-max", *scan_qmax, "largest bin count")->check(CLI::Range(2, 64));

    scan->callback([&, scan_opts, scan_qmin, scan_qmax] {
        if (*scan_qmax < *scan_qmin)
            throw CLI::ValidationError("--q-max", "must be >= --q-min");
        const auto format = panel_format(*scan_opts);
        exit_code = guarded([&] {
            const auto loaded =
                load_returns(scan_opts->input, format, parse_align(scan_opts->align));
            teflow::EstimatorConfig cfg;
            const auto rows = teflow::scan_q(loaded.returns, *scan_qmin, *scan_qmax, cfg);

            std::vector<Artifact> artifacts;
            artifacts.push_back(
                {"qscan.csv", render([&](auto& s) { teflow::io::write_qscan_csv(s, rows); })});

            json params = panel_params(*scan_opts);
            params.erase("q");
            params["q_min"] = *scan_qmin;
            params["q_max"] = *scan_qmax;
            json manifest = manifest_base("scan-q", params);
            manifest["input"] = loaded.input_record;
            manifest["alignment"] = loaded.alignment_record;
            flush_artifacts(scan_opts->out, std::move(artifacts), std::move(manifest));
            return 0;
        });
    });

    // ---- synth -----------------------------------------------------------
    auto synth_kind = std::make_shared<std::string>("coupled-binary");
    auto synth_epsilon = std::make_shared<double>(0.1);
    auto synth_alphabet = std::make_shared<int>(2);
    auto synth_length = std::make_shared<std::int64_t>(10000);
    auto synth_seed = std::make_shared<std::uint64_t>(0);
    auto synth_start = std::make_shared<std::string>("2000-01-03");
    auto synth_out = std::make_shared<std::string>();
    CLI::App* synth =
        app.add_subcommand("synth", "generate a coupled synthetic price panel (columns X, Y)");
    synth->add_option("--kind", *synth_kind, "coupled-binary | lagged-copy | independent")
        ->check(CLI::IsMember({"coupled-binary", "lagged-copy", "independent"}));
    synth->add_option("--epsilon", *synth_epsilon, "coupled-binary flip probability");
    synth->add_option("--alphabet", *synth_alphabet, "alphabet size (lagged-copy, independent)");
    synth->add_option("--length", *synth_length, "number of returns to generate")->required();
    synth->add_option("--seed", *synth_seed, "generator seed");
    synth->add_option("--start-date", *synth_start, "first price date (ISO)");
    synth->add_option("--out", *synth_out, "output directory")->required();

    synth->callback([&, synth_kind, synth_epsilon, synth_alphabet, synth_length, synth_seed,
                     synth_start, synth_out] {
        exit_code = guarded([&] {
            teflow::CoupledProcessSpec spec;
            if (*synth_kind == "coupled-binary")
                spec.kind = teflow::CoupledProcessSpec::Kind::CoupledBinary;
            else if (*synth_kind == "lagged-copy")
                spec.kind = teflow::CoupledProcessSpec::Kind::LaggedCopy;
            else
                spec.kind = teflow::CoupledProcessSpec::Kind::Independent;
            spec.epsilon = *synth_epsilon;
            spec.alphabet = *synth_alphabet;
            spec.length = *synth_length;
            spec.seed = *synth_seed;

            const teflow::Date start = teflow::Date::parse(*synth_start, "%Y-%m-%d");
            const auto panel = teflow::generate_price_panel(spec, start);

            std::vector<Artifact> artifacts;
            artifacts.push_back(
                {"panel.csv",
                 render([&](auto& s) { teflow::io::write_price_panel_csv(s, panel); })});

            const json params = {{"kind", *synth_kind},     {"epsilon", *synth_epsilon},
                                 {"alphabet", *synth_alphabet}, {"length", *synth_length},
                                 {"seed", *synth_seed},     {"start_date", *synth_start}};
            flush_artifacts(*synth_out, std::move(artifacts), manifest_base("synth", params));
            return 0;
        });
    });

    // ---- flows -----------------------------------------------------------
    auto flows_matrix = std::make_shared<std::string>();
    auto flows_out = std::make_shared<std::string>();
    CLI::App* flows = app.add_subcommand("flows", "per-sector flows from an existing TE matrix");
    flows->add_option("--matrix", *flows_matrix, "te_matrix.csv produced by compute")->required();
    flows->add_option("--out", *flows_out, "output directory")->required();

    flows->callback([&, flows_matrix, flows_out] {
        exit_code = guarded([&] {
            const std::string bytes = teflow::io::read_file(*flows_matrix);
            std::istringstream stream(bytes);
            const auto te =
                teflow::io::read_te_matrix_csv(stream, teflow::MatrixKind::TransferEntropy);
            const auto summary = teflow::flow_summary(te);

            std::vector<Artifact> artifacts;
            artifacts.push_back(
                {"flows.csv",
                 render([&](auto& s) { teflow::io::write_flows_csv(s, summary); })});

            json manifest = manifest_base("flows", {{"matrix", *flows_matrix}});
            manifest["input"] = {{"path", *flows_matrix},
                                 {"bytes", bytes.size()},
                                 {"fnv1a64", teflow::io::fnv1a64_hex(bytes)}};
            flush_artifacts(*flows_out, std::move(artifacts), std::move(manifest));
            return 0;
        });
    });

    // ---- regress ---------------------------------------------------------
    auto regress_flows = std::make_shared<std::string>();
    auto regress_out = std::make_shared<std::string>();
    CLI::App* regress =
        app.add_subcommand("regress", "outflow-on-inflow OLS from an existing flows table");
    regress->add_option("--flows", *regress_flows, "flows.csv produced by compute or flows")
        ->required();
    regress->add_option("--out", *regress_out, "output directory")->required();

    regress->callback([&, regress_flows, regress_out] {
        exit_code = guarded([&] {
            const std::string bytes = teflow::io::read_file(*regress_flows);
            std::istringstream stream(bytes);
            const auto summary = teflow::io::read_flows_csv(stream);
            const auto result = teflow::ols_outflow_on_inflow(summary);

            std::vector<Artifact> artifacts;
            artifacts.push_back({"regression.json", regression_json(result).dump(2) + "\n"});

            json manifest = manifest_base("regress", {{"flows", *regress_flows}});
            manifest["input"] = {{"path", *regress_flows},
                                 {"bytes", bytes.size()},
                                 {"fnv1a64", teflow::io::fnv1a64_hex(bytes)}};
            flush_artifacts(*regress_out, std::move(artifacts), std::move(manifest));
            return 0;
        });
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}

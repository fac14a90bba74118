// dmopbench: run single dynamic runs, full frequency x severity sweeps, heatmaps and
// ground-truth dumps from the command line.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dmop/harness.hpp"
#include "dmop/io.hpp"
#include "dmop/metrics.hpp"
#include "dmop/problems.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

class RuntimeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string default_output_dir()
{
    if (const char* env = std::getenv(dmop::kOutputDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

void ensure_dir(const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw RuntimeFailure("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) {
        throw RuntimeFailure("cannot write '" + path.string() + "'");
    }
}

dmop::ReferencePoint parse_ref(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw dmop::ConfigError("--ref: expected r1,r2");
    }
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw dmop::ConfigError("--ref: expected r1,r2");
    }
}

struct RunOptions {
    std::string problem = "dMOP1";
    std::string algorithm = "NSGA-II";
    std::string response = "DR0";
    std::size_t nt = 0;
    double severity = 0.0;
    std::size_t tau = 10;
    std::size_t changes = 30;
    double t0 = 0.0;
    std::size_t delay = 0;
    std::size_t pop = dmop::kDefaultPopulationSize;
    std::size_t n = dmop::kDefaultNumVariables;
    std::uint64_t seed = 1;
    std::string ref = "2,2";
    std::string csv;
    std::string out_dir;
};

int cmd_run(const RunOptions& o)
{
    dmop::RunSpec spec;
    spec.problem = dmop::parse_problem_id(o.problem);
    spec.algorithm = dmop::parse_algorithm_id(o.algorithm);
    spec.response.kind = dmop::parse_response_id(o.response);
    if (o.nt > 0 && o.severity > 0.0) {
        throw dmop::ConfigError("--nt and --severity are mutually exclusive");
    }
    spec.schedule.step = o.nt > 0 ? 1.0 / static_cast<double>(o.nt) : (o.severity > 0.0 ? o.severity : 0.1);
    spec.schedule.tau = o.tau;
    spec.schedule.num_changes = o.changes;
    spec.schedule.t0 = o.t0;
    spec.schedule.onset_delay = o.delay;
    spec.pop_size = o.pop;
    spec.num_variables = o.n;
    spec.seed = o.seed;
    spec.ref = parse_ref(o.ref);
    spec.validate();

    const auto records = dmop::run_instance(spec);
    std::printf("%-9s %-12s %-14s %-14s %-14s\n", "interval", "t", "achieved_hv", "optimal_hv", "hvd");
    for (const auto& r : records) {
        std::printf("%-9zu %-12.6g %-14.8g %-14.8g %-14.8g\n", r.interval_index, r.t, r.achieved_hv, r.optimal_hv,
                    r.hvd);
    }

    fs::path path;
    if (!o.csv.empty()) {
        path = o.csv;
    } else {
        const fs::path dir = o.out_dir.empty() ? default_output_dir() : o.out_dir;
        ensure_dir(dir);
        path = dir / ("run_" + o.problem + "_" + o.algorithm + "_" + o.response + "_seed" + std::to_string(o.seed) +
                      ".csv");
    }
    write_file(path, dmop::results_csv(dmop::result_rows(spec, records), spec.response));
    std::fprintf(stderr, "wrote %s\n", path.string().c_str());
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override, std::size_t parallelism,
              const std::string& dump_default)
{
    if (!dump_default.empty()) {
        dmop::ExperimentConfig cfg;
        write_file(dump_default, dmop::materialize(cfg).dump(2) + "\n");
        std::fprintf(stderr, "wrote %s\n", dump_default.c_str());
        return 0;
    }
    if (config_path.empty()) {
        throw dmop::ConfigError("sweep: --config is required");
    }
    dmop::ExperimentConfig cfg = dmop::load_config(config_path);
    if (!out_override.empty()) {
        cfg.output_dir = out_override;
    }
    const fs::path dir = cfg.output_dir;
    ensure_dir(dir);
    write_file(dir / "config.json", dmop::materialize(cfg).dump(2) + "\n");

    std::fprintf(stderr, "sweep: %zu runs on %zu thread(s)\n", cfg.sweep.total_runs(), parallelism);
    const auto result = dmop::run_sweep(cfg.sweep, parallelism);
    write_file(dir / "results.csv", dmop::results_csv(dmop::result_rows(result), cfg.sweep.response));
    write_file(dir / "cells.json", dmop::cells_json(result, cfg).dump(2) + "\n");
    std::fprintf(stderr, "wrote %s/{results.csv,cells.json,config.json}\n", dir.string().c_str());
    return 0;
}

int cmd_plot(const std::string& results_path, const std::string& out_dir)
{
    std::ifstream in(results_path);
    if (!in) {
        throw dmop::ConfigError("plot: cannot open results table '" + results_path + "'");
    }
    const auto rows = dmop::read_results_csv(in);
    const fs::path dir = out_dir.empty() ? default_output_dir() : out_dir;
    ensure_dir(dir);
    for (const auto& grid : dmop::heatmaps_from_rows(rows)) {
        const fs::path path = dir / dmop::heatmap_filename(grid);
        write_file(path, dmop::write_heatmap_svg(grid));
        std::fprintf(stderr, "wrote %s\n", path.string().c_str());
    }
    return 0;
}

int cmd_truth(const std::string& problem_name, double t, std::size_t k, std::size_t n, const std::string& out_dir)
{
    const auto problem = dmop::make_problem(dmop::parse_problem_id(problem_name), n);
    const fs::path dir = out_dir.empty() ? default_output_dir() : out_dir;
    ensure_dir(dir);

    const std::string tag = problem_name + "_t" + dmop::format_real(t);
    std::string pos = "x1";
    for (std::size_t i = 2; i <= problem.n; ++i) {
        pos += ",x" + std::to_string(i);
    }
    pos += '\n';
    for (const auto& x : dmop::pos_sample(problem, t, k)) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            pos += (i ? "," : "") + dmop::format_real(x[i]);
        }
        pos += '\n';
    }
    std::string pof = "f1,f2\n";
    for (const auto& f : dmop::pof_sample(problem, t, k)) {
        pof += dmop::format_real(f[0]) + "," + dmop::format_real(f[1]) + "\n";
    }
    write_file(dir / ("truth_pos_" + tag + ".csv"), pos);
    write_file(dir / ("truth_pof_" + tag + ".csv"), pof);
    std::fprintf(stderr, "wrote %s/truth_{pos,pof}_%s.csv\n", dir.string().c_str(), tag.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dynamic multi-objective benchmarking: runs, sweeps, heatmaps and ground truth"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run one problem/algorithm/response combination");
    run_cmd->add_option("--problem", run.problem, "dMOP1, dMOP2, DIMP2 or HE1")->capture_default_str();
    run_cmd->add_option("--algorithm", run.algorithm, "NSGA-II, NSGA-III, MOEAD or SPEA2")->capture_default_str();
    run_cmd->add_option("--response", run.response, "DR0, DR1, DR2 or DR3")->capture_default_str();
    run_cmd->add_option("--nt", run.nt, "Severity n_t (t step 1/n_t)");
    run_cmd->add_option("--severity", run.severity, "Step 1/n_t as a real (alternative to --nt)");
    run_cmd->add_option("--taut", run.tau, "Frequency tau_t (generations per interval)")->capture_default_str();
    run_cmd->add_option("--changes", run.changes, "Number of intervals measured")->capture_default_str();
    run_cmd->add_option("--t0", run.t0, "Initial t")->capture_default_str();
    run_cmd->add_option("--delay", run.delay, "Generations before the first change")->capture_default_str();
    run_cmd->add_option("--pop", run.pop, "Population size")->capture_default_str();
    run_cmd->add_option("--n", run.n, "Number of decision variables")->capture_default_str();
    run_cmd->add_option("--seed", run.seed, "Run seed")->capture_default_str();
    run_cmd->add_option("--ref", run.ref, "Hypervolume reference point r1,r2")->capture_default_str();
    run_cmd->add_option("--csv", run.csv, "Output CSV path");
    run_cmd->add_option("--out", run.out_dir, std::string("Output directory (default $") + dmop::kOutputDirEnv + ")");

    std::string config_path;
    std::string sweep_out;
    std::string dump_default;
    std::size_t parallelism = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a frequency x severity sweep from a JSON config");
    sweep_cmd->add_option("--config", config_path, "Experiment config (JSON)");
    sweep_cmd->add_option("--out", sweep_out, "Override the config's output_dir");
    sweep_cmd->add_option("-j,--parallelism", parallelism, "Worker threads")->capture_default_str();
    sweep_cmd->add_option("--write-default-config", dump_default, "Write the default config to this path and exit");

    std::string results_path;
    std::string plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "Render one SVG heatmap per problem/algorithm/response");
    plot_cmd->add_option("--results", results_path, "Results table written by run or sweep")->required();
    plot_cmd->add_option("--out", plot_out, "Output directory");

    std::string truth_problem = "dMOP1";
    double truth_t = 0.0;
    std::size_t truth_k = dmop::kDefaultPopulationSize;
    std::size_t truth_n = dmop::kDefaultNumVariables;
    std::string truth_out;
    auto* truth_cmd = app.add_subcommand("truth", "Dump Pareto-optimal set and front samples");
    truth_cmd->add_option("--problem", truth_problem)->capture_default_str();
    truth_cmd->add_option("--t", truth_t)->capture_default_str();
    truth_cmd->add_option("--k", truth_k, "Samples")->capture_default_str();
    truth_cmd->add_option("--n", truth_n, "Number of decision variables")->capture_default_str();
    truth_cmd->add_option("--out", truth_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run_cmd) {
            return cmd_run(run);
        }
        if (*sweep_cmd) {
            return cmd_sweep(config_path, sweep_out, parallelism, dump_default);
        }
        if (*plot_cmd) {
            return cmd_plot(results_path, plot_out);
        }
        if (*truth_cmd) {
            return cmd_truth(truth_problem, truth_t, truth_k, truth_n, truth_out);
        }
    } catch (const dmop::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const dmop::SweepError& e) {
        std::fprintf(stderr, "error: %s\nreproduce with:\n  %s\n", e.what(), e.reproduction_command().c_str());
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return 0;
}

#ifndef DMOP_IO_HPP
#define DMOP_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmop/harness.hpp"

namespace dmop {

inline constexpr int kSchemaVersion = 1;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "DMOPBENCH_OUTPUT_DIR";

/// Sweep configuration as stored on disk (JSON).
///
/// Keys: schema_version, problems, algorithms, responses, severity_values,
/// frequency_values, repeats, master_seed, num_changes, pop_size, num_variables, t0,
/// onset_delay, reference_point, variation{crossover_prob, crossover_index,
/// mutation_prob ("1/n" or a number), mutation_index}, response{replace_fraction,
/// dr2_mutation_prob, dr2_mutation_index}, output_dir. Missing keys take defaults;
/// unknown keys are rejected.
struct ExperimentConfig {
    SweepSpec sweep = SweepSpec::defaults();
    std::string output_dir = "out";
};

/// Throws ConfigError naming the offending key.
[[nodiscard]] ExperimentConfig parse_config(const nlohmann::json& doc);
[[nodiscard]] ExperimentConfig load_config(const std::string& path);
/// Every field written out, defaults included.
[[nodiscard]] nlohmann::json materialize(const ExperimentConfig& config);

/// One row of the results table.
struct ResultRow {
    std::string problem;
    std::string algorithm;
    std::string response;
    double one_over_nt = 0.0;
    std::size_t tau_t = 0;
    std::size_t repeat = 0;
    Seed seed = 0;
    std::size_t interval_index = 0;
    double t = 0.0;
    double achieved_hv = 0.0;
    double optimal_hv = 0.0;
    double hvd = 0.0;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline constexpr const char* kResultsHeader =
    "problem,algorithm,response,one_over_nt,tau_t,repeat,seed,interval_index,t,achieved_hv,optimal_hv,hvd";

/// Rows of a sweep in canonical key order.
[[nodiscard]] std::vector<ResultRow> result_rows(const SweepResult& result);
/// Rows of a single run (repeat 0).
[[nodiscard]] std::vector<ResultRow> result_rows(const RunSpec& spec, const std::vector<IntervalRecord>& records);

/// CSV with a leading `#` metadata line (schema version and response parameters), then the
/// header and one row per record. Reals use 17 significant digits.
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows, const ResponseConfig& response);
[[nodiscard]] std::string results_csv(const std::vector<ResultRow>& rows, const ResponseConfig& response);
/// Reads a table written by write_results_csv. Throws DataError on malformed input.
[[nodiscard]] std::vector<ResultRow> read_results_csv(std::istream& in);

/// Per-cell aggregates plus the materialised config.
[[nodiscard]] nlohmann::json cells_json(const SweepResult& result, const ExperimentConfig& config);

/// Mean HVD grid for one (problem, algorithm, response) panel.
struct HeatmapGrid {
    std::string problem;
    std::string algorithm;
    std::string response;
    std::vector<double> x_values; ///< tau_t, left to right
    std::vector<double> y_values; ///< 1/n_t, bottom to top
    std::vector<double> values;   ///< row-major, values[y * x_values.size() + x]; NaN marks a missing cell
};

/// Groups rows into one grid per (problem, algorithm, response), in first-seen order.
/// Cell value is the mean hvd over every row in that cell.
[[nodiscard]] std::vector<HeatmapGrid> heatmaps_from_rows(const std::vector<ResultRow>& rows);

/// Deterministic SVG heatmap. Colours ramp linearly in RGB from #fff7ec (grid minimum)
/// to #7f0000 (grid maximum); NaN cells are drawn in #808080 and noted in the legend.
[[nodiscard]] std::string write_heatmap_svg(const HeatmapGrid& grid);

/// Ramp position in [0, 1] of `value` within [lo, hi] (0 when the range is empty).
[[nodiscard]] double ramp_position(double value, double lo, double hi) noexcept;

/// File-name-safe panel name, e.g. "heatmap_dMOP2_NSGA-II_DR3.svg".
[[nodiscard]] std::string heatmap_filename(const HeatmapGrid& grid);

} // namespace dmop

#endif // DMOP_IO_HPP

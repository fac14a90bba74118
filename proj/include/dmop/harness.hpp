#ifndef DMOP_HARNESS_HPP
#define DMOP_HARNESS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmop/algorithms.hpp"
#include "dmop/metrics.hpp"
#include "dmop/problems.hpp"
#include "dmop/random.hpp"
#include "dmop/responses.hpp"
#include "dmop/variation.hpp"

namespace dmop {

/// Everything needed to reproduce one dynamic run.
struct RunSpec {
    ProblemId problem = ProblemId::dMOP1;
    std::size_t num_variables = kDefaultNumVariables;
    AlgorithmId algorithm = AlgorithmId::NSGA2;
    ResponseConfig response;
    DynamicsSchedule schedule;
    std::size_t pop_size = kDefaultPopulationSize;
    Seed seed = 0;
    ReferencePoint ref = kDefaultReference;
    VariationConfig variation;

    void validate() const;
};

/// Drives one run and returns exactly schedule.num_changes records.
///
/// Generation g (1-based) runs at time_at(g - 1), so every interval holds tau
/// generations (plus the onset delay for the first one). When the interval changes
/// between two generations, the outgoing interval is measured at its old t first,
/// then the response is applied at the new t. The last interval is measured after
/// the final generation.
[[nodiscard]] std::vector<IntervalRecord> run_instance(const RunSpec& spec, OptimalHvCache* cache = nullptr);

/// Same loop, starting from an already-initialised algorithm (evaluated at schedule.t0).
[[nodiscard]] std::vector<IntervalRecord> run_instance(const RunSpec& spec, Algorithm& algorithm,
                                                       OptimalHvCache* cache = nullptr);

struct SweepSpec {
    std::vector<ProblemId> problems;
    std::vector<AlgorithmId> algorithms;
    std::vector<ResponseId> responses;
    /// 1/n_t values.
    std::vector<double> severities;
    /// tau_t values.
    std::vector<std::size_t> frequencies;
    std::size_t repeats = 5;
    Seed master_seed = 1;
    std::size_t num_changes = 30;
    std::size_t pop_size = kDefaultPopulationSize;
    std::size_t num_variables = kDefaultNumVariables;
    double t0 = 0.0;
    std::size_t onset_delay = 0;
    ReferencePoint ref = kDefaultReference;
    VariationConfig variation;
    /// Response parameters shared by every response id (the kind is filled per run).
    ResponseConfig response;

    /// 21 severities uniformly spaced over [0.01, 0.5], tau_t = 1..30, all four problems,
    /// algorithms and responses, 5 repeats of 30 changes.
    [[nodiscard]] static SweepSpec defaults();

    [[nodiscard]] std::size_t runs_per_repeat_per_problem() const noexcept;
    [[nodiscard]] std::size_t total_runs() const noexcept;

    void validate() const;
};

/// Canonical run order: problem, algorithm, response, severity, frequency, repeat.
[[nodiscard]] std::vector<RunKey> enumerate_runs(const SweepSpec& spec);

[[nodiscard]] RunSpec make_run_spec(const SweepSpec& spec, const RunKey& key);

struct CellKey {
    std::uint32_t problem = 0;
    std::uint32_t algorithm = 0;
    std::uint32_t response = 0;
    std::uint32_t severity = 0;
    std::uint32_t frequency = 0;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

[[nodiscard]] inline CellKey cell_of(const RunKey& k) noexcept
{
    return {k.problem, k.algorithm, k.response, k.severity, k.frequency};
}

struct CellStats {
    double mean_hvd = 0.0;
    /// Sample standard deviation (n - 1 denominator); 0 for a single record.
    double std_hvd = 0.0;
    std::size_t count = 0;
};

struct RunResult {
    RunKey key;
    Seed seed = 0;
    std::vector<IntervalRecord> records;
};

struct SweepResult {
    SweepSpec spec;
    /// In canonical run order.
    std::vector<RunResult> runs;
    std::map<CellKey, CellStats> cells;
};

/// A run failed inside a sweep; the message names the run and a command reproducing it.
class SweepError : public std::runtime_error {
public:
    SweepError(const std::string& what, std::string repro) : std::runtime_error(what), repro_(std::move(repro)) {}
    [[nodiscard]] const std::string& reproduction_command() const noexcept { return repro_; }

private:
    std::string repro_;
};

/// Command line that re-runs a single sweep member.
[[nodiscard]] std::string reproduction_command(const RunSpec& spec);

/// Keyed reduction of run records into per-cell mean/std, summed in canonical order.
[[nodiscard]] std::map<CellKey, CellStats> aggregate(const std::vector<RunResult>& runs);

/// Reference implementation: runs every member in canonical order on the calling thread.
[[nodiscard]] SweepResult run_sweep_serial(const SweepSpec& spec);

/// Runs the sweep on `parallelism` OpenMP threads. Output is identical to
/// run_sweep_serial for any parallelism.
[[nodiscard]] SweepResult run_sweep(const SweepSpec& spec, std::size_t parallelism);

} // namespace dmop

#endif // DMOP_HARNESS_HPP

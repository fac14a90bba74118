#include "dmop/harness.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <sstream>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace dmop {

void RunSpec::validate() const
{
    schedule.validate();
    variation.validate();
    response.validate(pop_size);
    if (pop_size < 4 || pop_size % 2 != 0) {
        throw ConfigError("pop_size must be even and at least 4");
    }
    if (num_variables < 2) {
        throw ConfigError("num_variables must be at least 2");
    }
    if (!std::isfinite(ref[0]) || !std::isfinite(ref[1])) {
        throw ConfigError("reference point must be finite");
    }
}

std::vector<IntervalRecord> run_instance(const RunSpec& spec, OptimalHvCache* cache)
{
    spec.validate();
    const Problem problem = make_problem(spec.problem, spec.num_variables);
    auto algorithm = make_algorithm(spec.algorithm, problem, spec.schedule.t0, spec.pop_size, spec.variation,
                                    RandomSource(spec.seed));
    return run_instance(spec, *algorithm, cache);
}

std::vector<IntervalRecord> run_instance(const RunSpec& spec, Algorithm& algorithm, OptimalHvCache* cache)
{
    spec.validate();
    const Problem problem = make_problem(spec.problem, spec.num_variables);
    const DynamicsSchedule& schedule = spec.schedule;

    std::vector<IntervalRecord> records;
    records.reserve(schedule.num_changes);
    auto measure = [&](std::size_t interval) {
        const double t = interval_time(schedule, interval);
        const auto front = extract_front(algorithm);
        const auto v = hvd(front, problem, t, spec.ref, spec.pop_size, cache);
        records.push_back(IntervalRecord{interval, t, v.achieved_hv, v.optimal_hv, v.hvd});
    };

    const std::size_t generations = schedule.onset_delay + schedule.num_changes * schedule.tau;
    std::size_t interval = 0;
    for (std::size_t g = 1; g <= generations; ++g) {
        const std::size_t current = schedule.changes_before(g - 1);
        if (current != interval) {
            measure(interval);
            interval = current;
            apply_response(algorithm, spec.response, problem, interval_time(schedule, interval));
        }
        algorithm.step(problem, interval_time(schedule, interval));
    }
    measure(interval);
    return records;
}

SweepSpec SweepSpec::defaults()
{
    SweepSpec s;
    s.problems.assign(all_problems().begin(), all_problems().end());
    s.algorithms.assign(all_algorithms().begin(), all_algorithms().end());
    s.responses.assign(all_responses().begin(), all_responses().end());
    constexpr std::size_t kSeverityCount = 21;
    for (std::size_t i = 0; i < kSeverityCount; ++i) {
        s.severities.push_back(0.01 + (0.5 - 0.01) * static_cast<double>(i) / static_cast<double>(kSeverityCount - 1));
    }
    for (std::size_t tau = 1; tau <= 30; ++tau) {
        s.frequencies.push_back(tau);
    }
    return s;
}

std::size_t SweepSpec::runs_per_repeat_per_problem() const noexcept
{
    return severities.size() * frequencies.size() * algorithms.size() * responses.size();
}

std::size_t SweepSpec::total_runs() const noexcept
{
    return runs_per_repeat_per_problem() * problems.size() * repeats;
}

void SweepSpec::validate() const
{
    if (problems.empty() || algorithms.empty() || responses.empty()) {
        throw ConfigError("sweep: problems, algorithms and responses must be non-empty");
    }
    if (severities.empty() || frequencies.empty()) {
        throw ConfigError("sweep: severity and frequency grids must be non-empty");
    }
    if (repeats == 0) {
        throw ConfigError("sweep: repeats must be positive");
    }
    for (std::size_t tau : frequencies) {
        if (tau == 0) {
            throw ConfigError("sweep: frequency values must be positive");
        }
    }
    for (double s : severities) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw ConfigError("sweep: severity values must be positive");
        }
    }
    // Representative run catches the remaining parameter errors up front.
    make_run_spec(*this, RunKey{}).validate();
    for (ResponseId r : responses) {
        ResponseConfig rc = response;
        rc.kind = r;
        rc.validate(pop_size);
    }
}

std::vector<RunKey> enumerate_runs(const SweepSpec& spec)
{
    std::vector<RunKey> keys;
    keys.reserve(spec.total_runs());
    const auto u32 = [](std::size_t v) { return static_cast<std::uint32_t>(v); };
    for (std::size_t p = 0; p < spec.problems.size(); ++p) {
        for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
            for (std::size_t r = 0; r < spec.responses.size(); ++r) {
                for (std::size_t s = 0; s < spec.severities.size(); ++s) {
                    for (std::size_t f = 0; f < spec.frequencies.size(); ++f) {
                        for (std::size_t k = 0; k < spec.repeats; ++k) {
                            keys.push_back(RunKey{u32(p), u32(a), u32(r), u32(s), u32(f), u32(k)});
                        }
                    }
                }
            }
        }
    }
    return keys;
}

RunSpec make_run_spec(const SweepSpec& spec, const RunKey& key)
{
    RunSpec run;
    run.problem = spec.problems.at(key.problem);
    run.num_variables = spec.num_variables;
    run.algorithm = spec.algorithms.at(key.algorithm);
    run.response = spec.response;
    run.response.kind = spec.responses.at(key.response);
    run.schedule.step = spec.severities.at(key.severity);
    run.schedule.tau = spec.frequencies.at(key.frequency);
    run.schedule.t0 = spec.t0;
    run.schedule.onset_delay = spec.onset_delay;
    run.schedule.num_changes = spec.num_changes;
    run.pop_size = spec.pop_size;
    run.seed = derive_seed(spec.master_seed, key);
    run.ref = spec.ref;
    run.variation = spec.variation;
    return run;
}

std::string reproduction_command(const RunSpec& spec)
{
    std::ostringstream os;
    os << "dmopbench run --problem " << to_string(spec.problem) << " --algorithm " << to_string(spec.algorithm)
       << " --response " << to_string(spec.response.kind) << " --severity " << format_real(spec.schedule.step)
       << " --taut " << spec.schedule.tau << " --changes " << spec.schedule.num_changes << " --t0 "
       << format_real(spec.schedule.t0) << " --delay " << spec.schedule.onset_delay << " --pop " << spec.pop_size
       << " --n " << spec.num_variables << " --seed " << spec.seed << " --ref " << format_real(spec.ref[0]) << ","
       << format_real(spec.ref[1]);
    return os.str();
}

std::map<CellKey, CellStats> aggregate(const std::vector<RunResult>& runs)
{
    std::map<CellKey, std::vector<double>> values;
    for (const auto& run : runs) {
        auto& v = values[cell_of(run.key)];
        for (const auto& rec : run.records) {
            v.push_back(rec.hvd);
        }
    }
    std::map<CellKey, CellStats> cells;
    for (const auto& [key, v] : values) {
        CellStats stats;
        stats.count = v.size();
        double sum = 0.0;
        for (double x : v) {
            sum += x;
        }
        stats.mean_hvd = sum / static_cast<double>(v.size());
        if (v.size() > 1) {
            double ss = 0.0;
            for (double x : v) {
                ss += (x - stats.mean_hvd) * (x - stats.mean_hvd);
            }
            stats.std_hvd = std::sqrt(ss / static_cast<double>(v.size() - 1));
        }
        cells.emplace(key, stats);
    }
    return cells;
}

namespace {

std::string describe(const RunKey& key, const RunSpec& spec)
{
    std::ostringstream os;
    os << "run (problem=" << to_string(spec.problem) << ", algorithm=" << to_string(spec.algorithm)
       << ", response=" << to_string(spec.response.kind) << ", one_over_nt=" << format_real(spec.schedule.step)
       << ", tau_t=" << spec.schedule.tau << ", repeat=" << key.repeat << ", seed=" << spec.seed << ")";
    return os.str();
}

SweepResult finish(const SweepSpec& spec, std::vector<RunKey>& keys, std::vector<RunResult>& runs,
                   std::vector<std::optional<std::string>>& errors)
{
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (errors[i]) {
            const RunSpec run = make_run_spec(spec, keys[i]);
            throw SweepError(describe(keys[i], run) + " failed: " + *errors[i], reproduction_command(run));
        }
    }
    SweepResult result;
    result.spec = spec;
    result.runs = std::move(runs);
    result.cells = aggregate(result.runs);
    return result;
}

void execute_one(const SweepSpec& spec, const RunKey& key, OptimalHvCache& cache, RunResult& out,
                 std::optional<std::string>& error)
{
    try {
        const RunSpec run = make_run_spec(spec, key);
        out.key = key;
        out.seed = run.seed;
        out.records = run_instance(run, &cache);
    } catch (const std::exception& e) {
        error = e.what();
    } catch (...) {
        error = "unknown exception";
    }
}

} // namespace

SweepResult run_sweep_serial(const SweepSpec& spec)
{
    spec.validate();
    auto keys = enumerate_runs(spec);
    std::vector<RunResult> runs(keys.size());
    std::vector<std::optional<std::string>> errors(keys.size());
    OptimalHvCache cache;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        execute_one(spec, keys[i], cache, runs[i], errors[i]);
    }
    return finish(spec, keys, runs, errors);
}

SweepResult run_sweep(const SweepSpec& spec, std::size_t parallelism)
{
    if (parallelism == 0) {
        throw ConfigError("parallelism must be positive");
    }
    if (parallelism == 1) {
        return run_sweep_serial(spec);
    }
    spec.validate();
    auto keys = enumerate_runs(spec);
    std::vector<RunResult> runs(keys.size());
    std::vector<std::optional<std::string>> errors(keys.size());
    OptimalHvCache cache;
    const auto count = static_cast<std::ptrdiff_t>(keys.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(parallelism))
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        execute_one(spec, keys[u], cache, runs[u], errors[u]);
    }
    return finish(spec, keys, runs, errors);
}

} // namespace dmop

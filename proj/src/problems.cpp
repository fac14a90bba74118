#include "dmop/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dmop/metrics.hpp"

namespace dmop {

namespace {

constexpr std::array<ProblemId, 4> kAllProblems{ProblemId::dMOP1, ProblemId::dMOP2, ProblemId::DIMP2,
                                                ProblemId::HE1};

double dmop_h(double f1, double g, double t) { return 1.0 - std::pow(f1 / g, timefn::H(t)); }

} // namespace

std::string_view to_string(ProblemId id) noexcept
{
    switch (id) {
    case ProblemId::dMOP1: return "dMOP1";
    case ProblemId::dMOP2: return "dMOP2";
    case ProblemId::DIMP2: return "DIMP2";
    case ProblemId::HE1: return "HE1";
    }
    return "?";
}

std::string_view to_string(DynamicsType type) noexcept
{
    switch (type) {
    case DynamicsType::I: return "I";
    case DynamicsType::II: return "II";
    case DynamicsType::III: return "III";
    }
    return "?";
}

ProblemId parse_problem_id(std::string_view name)
{
    for (ProblemId id : kAllProblems) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown problem id '" + std::string(name) + "'");
}

std::span<const ProblemId> all_problems() noexcept { return kAllProblems; }

Problem make_problem(ProblemId id, std::size_t n)
{
    if (n < 2) {
        throw ConfigError("problem needs at least 2 decision variables, got " + std::to_string(n));
    }
    Problem p;
    p.id = id;
    p.n = n;
    p.bounds.assign(n, Bound{0.0, 1.0});
    switch (id) {
    case ProblemId::dMOP1: p.dynamics_type = DynamicsType::III; break;
    case ProblemId::dMOP2: p.dynamics_type = DynamicsType::II; break;
    case ProblemId::DIMP2:
        p.dynamics_type = DynamicsType::I;
        std::fill(p.bounds.begin() + 1, p.bounds.end(), Bound{-2.0, 2.0});
        break;
    case ProblemId::HE1: p.dynamics_type = DynamicsType::III; break;
    default: throw ConfigError("unknown problem id");
    }
    return p;
}

namespace timefn {

double H(double t) noexcept { return 0.75 * std::sin(0.5 * t) + 1.25; }

double G(double t) noexcept { return std::sin(0.5 * std::numbers::pi * t); }

double G_i(double t, std::size_t i, std::size_t n) noexcept
{
    const double s = std::sin(0.5 * std::numbers::pi * t +
                              2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n + 1));
    return s * s;
}

} // namespace timefn

ObjectivePoint evaluate(const Problem& problem, std::span<const double> x, double t)
{
    if (x.size() != problem.n) {
        throw PreconditionError("evaluate: expected " + std::to_string(problem.n) + " variables, got " +
                                std::to_string(x.size()));
    }
    if (!within_bounds(x, problem.bounds)) {
        throw PreconditionError("evaluate: decision vector out of bounds for " +
                                std::string(to_string(problem.id)));
    }

    const double f1 = x[0];
    const auto tail = x.subspan(1);
    double f2 = 0.0;
    switch (problem.id) {
    case ProblemId::dMOP1: {
        double s = 0.0;
        for (double xi : tail) {
            s += xi * xi;
        }
        const double g = 1.0 + 9.0 * s;
        f2 = g * dmop_h(f1, g, t);
        break;
    }
    case ProblemId::dMOP2: {
        const double shift = timefn::G(t);
        double s = 0.0;
        for (double xi : tail) {
            s += (xi - shift) * (xi - shift);
        }
        const double g = 1.0 + 9.0 * s;
        f2 = g * dmop_h(f1, g, t);
        break;
    }
    case ProblemId::DIMP2: {
        const double n = static_cast<double>(problem.n);
        double s = 0.0;
        for (std::size_t k = 0; k < tail.size(); ++k) {
            const double d = tail[k] - timefn::G_i(t, k + 2, problem.n);
            s += d * d - 2.0 * std::cos(3.0 * std::numbers::pi * d);
        }
        const double g = 1.0 + 2.0 * (n - 1.0) + s;
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
    }
    case ProblemId::HE1: {
        double s = 0.0;
        for (double xi : tail) {
            s += xi;
        }
        const double g = 1.0 + 9.0 / static_cast<double>(problem.n - 1) * s;
        const double r = f1 / g;
        f2 = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * std::numbers::pi * t * f1));
        break;
    }
    default: throw ConfigError("evaluate: unknown problem id");
    }
    return {f1, f2};
}

DynamicsSchedule DynamicsSchedule::from_severity(std::size_t n_t, std::size_t tau)
{
    if (n_t == 0) {
        throw ConfigError("severity n_t must be positive");
    }
    DynamicsSchedule s;
    s.step = 1.0 / static_cast<double>(n_t);
    s.tau = tau;
    return s;
}

std::size_t DynamicsSchedule::changes_before(std::size_t generation) const noexcept
{
    if (generation < onset_delay) {
        return 0;
    }
    return (generation - onset_delay) / tau;
}

void DynamicsSchedule::validate() const
{
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("schedule: 1/n_t must be a positive finite real");
    }
    if (tau == 0) {
        throw ConfigError("schedule: tau_t must be positive");
    }
    if (num_changes == 0) {
        throw ConfigError("schedule: num_changes must be positive");
    }
    if (!std::isfinite(t0)) {
        throw ConfigError("schedule: t0 must be finite");
    }
}

double time_at(const DynamicsSchedule& schedule, std::size_t generation) noexcept
{
    return interval_time(schedule, schedule.changes_before(generation));
}

double interval_time(const DynamicsSchedule& schedule, std::size_t k) noexcept
{
    return schedule.t0 + schedule.step * static_cast<double>(k);
}

double optimal_g(const Problem& problem, double t)
{
    if (problem.id == ProblemId::dMOP2) {
        const double shift = timefn::G(t);
        const double gap = std::clamp(shift, 0.0, 1.0) - shift;
        return 1.0 + 9.0 * static_cast<double>(problem.n - 1) * gap * gap;
    }
    return 1.0;
}

std::vector<double> pos_tail(const Problem& problem, double t)
{
    std::vector<double> tail(problem.n - 1, 0.0);
    switch (problem.id) {
    case ProblemId::dMOP1:
    case ProblemId::HE1: break;
    case ProblemId::dMOP2: std::fill(tail.begin(), tail.end(), std::clamp(timefn::G(t), 0.0, 1.0)); break;
    case ProblemId::DIMP2:
        for (std::size_t k = 0; k < tail.size(); ++k) {
            tail[k] = timefn::G_i(t, k + 2, problem.n);
        }
        break;
    }
    return tail;
}

std::vector<DecisionVector> pos_sample(const Problem& problem, double t, std::size_t k)
{
    if (k < 2) {
        throw ConfigError("pos_sample: k must be at least 2");
    }
    const auto tail = pos_tail(problem, t);
    std::vector<DecisionVector> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        DecisionVector x;
        x.reserve(problem.n);
        x.push_back(static_cast<double>(i) / static_cast<double>(k - 1));
        x.insert(x.end(), tail.begin(), tail.end());
        out.push_back(std::move(x));
    }
    return out;
}

double front_f2(const Problem& problem, double t, double f1)
{
    switch (problem.id) {
    case ProblemId::dMOP1:
    case ProblemId::dMOP2: {
        const double g = optimal_g(problem, t);
        return g * dmop_h(f1, g, t);
    }
    case ProblemId::DIMP2: return 1.0 - std::sqrt(f1);
    case ProblemId::HE1: return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * t * f1);
    }
    return 0.0;
}

std::vector<ObjectivePoint> dense_front(const Problem& problem, double t, std::size_t grid_size)
{
    if (grid_size < 2) {
        throw ConfigError("dense_front: grid needs at least 2 points");
    }
    std::vector<ObjectivePoint> grid(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double f1 = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        grid[i] = {f1, front_f2(problem, t, f1)};
    }
    return nondominated_points(grid);
}

std::vector<ObjectivePoint> pof_sample(const Problem& problem, double t, std::size_t k)
{
    if (k < 2) {
        throw ConfigError("pof_sample: k must be at least 2");
    }
    return select_hv_subset(dense_front(problem, t), k, kDefaultReference);
}

} // namespace dmop

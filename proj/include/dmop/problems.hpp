#ifndef DMOP_PROBLEMS_HPP
#define DMOP_PROBLEMS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmop/core.hpp"

namespace dmop {

enum class ProblemId : std::uint8_t { dMOP1, dMOP2, DIMP2, HE1 };

/// Farina classification: I moves the POS only, II both, III the POF only.
enum class DynamicsType : std::uint8_t { I, II, III };

[[nodiscard]] std::string_view to_string(ProblemId id) noexcept;
[[nodiscard]] std::string_view to_string(DynamicsType type) noexcept;
/// Parses the canonical ids "dMOP1", "dMOP2", "DIMP2", "HE1"; throws ConfigError otherwise.
[[nodiscard]] ProblemId parse_problem_id(std::string_view name);
[[nodiscard]] std::span<const ProblemId> all_problems() noexcept;

struct Problem {
    ProblemId id = ProblemId::dMOP1;
    std::size_t n = kDefaultNumVariables;
    Bounds bounds;
    DynamicsType dynamics_type = DynamicsType::III;
};

/// Builds a problem with its tabulated bounds and dynamics type. n must be >= 2.
[[nodiscard]] Problem make_problem(ProblemId id, std::size_t n = kDefaultNumVariables);

namespace timefn {

/// 0.75 sin(0.5 t) + 1.25, in [0.5, 2].
[[nodiscard]] double H(double t) noexcept;
/// sin(0.5 pi t), in [-1, 1].
[[nodiscard]] double G(double t) noexcept;
/// sin(0.5 pi t + 2 pi i / (n + 1))^2 for 1-based variable index i, in [0, 1].
[[nodiscard]] double G_i(double t, std::size_t i, std::size_t n) noexcept;

} // namespace timefn

/// Objective values of x at time t. Throws PreconditionError when x is out of bounds
/// or has the wrong length.
[[nodiscard]] ObjectivePoint evaluate(const Problem& problem, std::span<const double> x, double t);

/// Maps generation counter to t.
///
/// `step` is 1/n_t stored as a real: sweep grids use 1/n_t values that need not be
/// reciprocals of integers.
struct DynamicsSchedule {
    double step = 0.1;
    std::size_t tau = 10;
    double t0 = 0.0;
    std::size_t onset_delay = 0;
    std::size_t num_changes = 30;

    [[nodiscard]] static DynamicsSchedule from_severity(std::size_t n_t, std::size_t tau);

    /// Number of change events that have happened by generation g.
    [[nodiscard]] std::size_t changes_before(std::size_t generation) const noexcept;

    void validate() const;
};

/// t(g) = t0 + step * floor((g - onset_delay) / tau) for g >= onset_delay, t0 before.
[[nodiscard]] double time_at(const DynamicsSchedule& schedule, std::size_t generation) noexcept;

/// t value of the k-th dynamic interval (k = 0 is the interval before the first change).
[[nodiscard]] double interval_time(const DynamicsSchedule& schedule, std::size_t k) noexcept;

/// Minimum of g over x_II given t (the value g takes everywhere on the clamped POS).
[[nodiscard]] double optimal_g(const Problem& problem, double t);

/// x_II values of the Pareto-optimal set at t (length n - 1).
[[nodiscard]] std::vector<double> pos_tail(const Problem& problem, double t);

/// k decision vectors on the POS at t; x1 is uniformly spaced over [0, 1].
[[nodiscard]] std::vector<DecisionVector> pos_sample(const Problem& problem, double t, std::size_t k);

/// Closed-form front value f2 at a given f1 (before dominance filtering).
[[nodiscard]] double front_f2(const Problem& problem, double t, double f1);

inline constexpr std::size_t kTruthGridSize = 10001;

/// Uniform f1 grid of `grid_size` points pushed through the closed-form front and
/// filtered to the nondominated subset. Sorted by increasing f1.
[[nodiscard]] std::vector<ObjectivePoint> dense_front(const Problem& problem, double t,
                                                      std::size_t grid_size = kTruthGridSize);

/// k points of the true front at t: the dense front reduced by hypervolume-optimal
/// subset selection against the default reference point (2, 2).
[[nodiscard]] std::vector<ObjectivePoint> pof_sample(const Problem& problem, double t, std::size_t k);

} // namespace dmop

#endif // DMOP_PROBLEMS_HPP

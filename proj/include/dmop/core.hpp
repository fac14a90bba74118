#ifndef DMOP_CORE_HPP
#define DMOP_CORE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmop {

/// Invalid configuration: unknown ids, dimension mismatches, bad parameters.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed numeric data (NaN objectives, unreadable tables).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (e.g. evaluating an out-of-bounds vector).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr std::size_t kNumObjectives = 2;

using DecisionVector = std::vector<double>;
using ObjectivePoint = std::array<double, kNumObjectives>;

struct Bound {
    double lower = 0.0;
    double upper = 1.0;

    friend bool operator==(const Bound&, const Bound&) = default;
};

using Bounds = std::vector<Bound>;

struct Individual {
    DecisionVector x;
    ObjectivePoint f{};
    double eval_t = 0.0;
};

using Population = std::vector<Individual>;

inline constexpr std::size_t kDefaultPopulationSize = 100;
inline constexpr std::size_t kDefaultNumVariables = 20;

/// Returns x with every component clamped into its bound.
[[nodiscard]] DecisionVector clamp_to_bounds(std::span<const double> x, const Bounds& bounds);

/// True when every component of x lies inside its bound.
[[nodiscard]] bool within_bounds(std::span<const double> x, const Bounds& bounds);

/// Pareto dominance for minimisation.
[[nodiscard]] constexpr bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) noexcept
{
    bool strictly = false;
    for (std::size_t j = 0; j < kNumObjectives; ++j) {
        if (a[j] > b[j]) {
            return false;
        }
        if (a[j] < b[j]) {
            strictly = true;
        }
    }
    return strictly;
}

/// Indices of the nondominated members of `points`, in input order. Duplicates are all kept.
[[nodiscard]] std::vector<std::size_t> nondominated_indices(std::span<const ObjectivePoint> points);

[[nodiscard]] std::vector<ObjectivePoint> nondominated_points(std::span<const ObjectivePoint> points);

[[nodiscard]] std::vector<ObjectivePoint> objectives_of(const Population& pop);

/// Round-trip exact text form of a double (17 significant digits).
[[nodiscard]] std::string format_real(double v);

} // namespace dmop

#endif // DMOP_CORE_HPP

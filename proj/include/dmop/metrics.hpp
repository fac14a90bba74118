#ifndef DMOP_METRICS_HPP
#define DMOP_METRICS_HPP

#include <cstddef>
#include <future>
#include <map>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include "dmop/core.hpp"
#include "dmop/problems.hpp"

namespace dmop {

/// Upper corner of the hypervolume region. Must lie strictly above every true-front point.
using ReferencePoint = ObjectivePoint;

inline constexpr ReferencePoint kDefaultReference{2.0, 2.0};

/// Exact area dominated by `points` and bounded by `ref`. Points that do not strictly
/// dominate ref contribute nothing; order and duplicates do not matter.
/// Throws DataError on NaN input.
[[nodiscard]] double hypervolume_2d(std::span<const ObjectivePoint> points, const ReferencePoint& ref);

/// The k-subset of `candidates` with maximal hypervolume w.r.t. ref, sorted by f1.
///
/// Exact dynamic program over the f1-sorted nondominated candidates: with the subset
/// i_1 < ... < i_k the area is sum_j (f1[i_{j+1}] - f1[i_j]) (ref2 - f2[i_j]), and each
/// layer's inner maximisation is a max over lines, answered with an upper hull.
/// O(k m log m) for m candidates. When k covers every usable candidate they are all
/// returned.
[[nodiscard]] std::vector<ObjectivePoint> select_hv_subset(std::span<const ObjectivePoint> candidates,
                                                           std::size_t k, const ReferencePoint& ref);

/// Hypervolume-optimal k-point sample of the true front at t.
[[nodiscard]] std::vector<ObjectivePoint> optimal_front_subset(const Problem& problem, double t,
                                                               std::size_t k, const ReferencePoint& ref);

/// hypervolume_2d(optimal_front_subset(...)), uncached.
[[nodiscard]] double optimal_hypervolume(const Problem& problem, double t, std::size_t k,
                                         const ReferencePoint& ref);

/// Thread-safe memo of optimal hypervolumes keyed on (problem, n, t, k, ref) bit patterns.
class OptimalHvCache {
public:
    [[nodiscard]] double get(const Problem& problem, double t, std::size_t k, const ReferencePoint& ref);
    [[nodiscard]] std::size_t size() const;

private:
    using Key = std::tuple<int, std::size_t, std::uint64_t, std::size_t, std::uint64_t, std::uint64_t>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_future<double>> table_;
};

struct IntervalRecord {
    std::size_t interval_index = 0;
    double t = 0.0;
    double achieved_hv = 0.0;
    double optimal_hv = 0.0;
    double hvd = 0.0;
};

struct HvdValues {
    double achieved_hv = 0.0;
    double optimal_hv = 0.0;
    double hvd = 0.0;
};

/// Hypervolume difference: optimal k-point hypervolume at t minus the front's hypervolume.
/// Uses `cache` for the optimal value when given.
[[nodiscard]] HvdValues hvd(std::span<const ObjectivePoint> front, const Problem& problem, double t,
                            const ReferencePoint& ref, std::size_t k, OptimalHvCache* cache = nullptr);

} // namespace dmop

#endif // DMOP_METRICS_HPP

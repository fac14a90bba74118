#ifndef DMOP_SORTING_HPP
#define DMOP_SORTING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dmop/core.hpp"

namespace dmop {

struct NondominatedSort {
    /// fronts[r] lists the indices of rank r, ascending.
    std::vector<std::vector<std::size_t>> fronts;
    /// rank[i] is the front index of point i.
    std::vector<std::size_t> rank;
};

/// Fast nondominated sort (Deb et al.), O(M N^2).
[[nodiscard]] NondominatedSort nondominated_sort(std::span<const ObjectivePoint> points);

/// Crowding distance of each member of `front` (indices into points), in the same order.
/// Boundary members of each objective get +infinity; interior members sum the normalised
/// gap between their sorted neighbours. Objectives with zero range add nothing.
[[nodiscard]] std::vector<double> crowding_distance(std::span<const ObjectivePoint> points,
                                                    std::span<const std::size_t> front);

} // namespace dmop

#endif // DMOP_SORTING_HPP

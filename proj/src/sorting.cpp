#include "dmop/sorting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dmop {

NondominatedSort nondominated_sort(std::span<const ObjectivePoint> points)
{
    const std::size_t n = points.size();
    NondominatedSort out;
    out.rank.assign(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(points[p], points[q])) {
                dominated_by[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(points[q], points[p])) {
                dominated_by[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) {
            current.push_back(p);
        }
    }

    std::size_t r = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            out.rank[p] = r;
            for (std::size_t q : dominated_by[p]) {
                if (--domination_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(current.begin(), current.end());
        out.fronts.push_back(std::move(current));
        current = std::move(next);
        ++r;
    }
    return out;
}

std::vector<double> crowding_distance(std::span<const ObjectivePoint> points, std::span<const std::size_t> front)
{
    const std::size_t m = front.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(m, 0.0);
    if (m <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < kNumObjectives; ++j) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Index tie-break keeps the result independent of the sort implementation.
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double fa = points[front[a]][j];
            const double fb = points[front[b]][j];
            return fa < fb || (fa == fb && a < b);
        });
        const double lo = points[front[order.front()]][j];
        const double hi = points[front[order.back()]][j];
        dist[order.front()] = kInf;
        dist[order.back()] = kInf;
        if (hi <= lo) {
            continue;
        }
        for (std::size_t s = 1; s + 1 < m; ++s) {
            dist[order[s]] += (points[front[order[s + 1]]][j] - points[front[order[s - 1]]][j]) / (hi - lo);
        }
    }
    return dist;
}

} // namespace dmop

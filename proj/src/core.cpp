#include "dmop/core.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace dmop {

DecisionVector clamp_to_bounds(std::span<const double> x, const Bounds& bounds)
{
    if (x.size() != bounds.size()) {
        throw ConfigError("clamp_to_bounds: vector has " + std::to_string(x.size()) +
                          " values but " + std::to_string(bounds.size()) + " bounds");
    }
    DecisionVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (bounds[i].lower > bounds[i].upper) {
            throw ConfigError("clamp_to_bounds: lower > upper for variable " + std::to_string(i));
        }
        out[i] = std::min(bounds[i].upper, std::max(bounds[i].lower, x[i]));
    }
    return out;
}

bool within_bounds(std::span<const double> x, const Bounds& bounds)
{
    if (x.size() != bounds.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= bounds[i].lower && x[i] <= bounds[i].upper)) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectivePoint> points)
{
    // Sort by (f1, f2); a point is dominated iff some earlier point has f2 <= its f2
    // without being an exact duplicate of it.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a] != points[b]) {
            return points[a] < points[b];
        }
        return a < b;
    });

    std::vector<char> keep(points.size(), 0);
    double best_f2 = 0.0;
    bool have_best = false;
    const ObjectivePoint* best = nullptr;
    for (std::size_t idx : order) {
        const ObjectivePoint& p = points[idx];
        if (!have_best) {
            keep[idx] = 1;
            best_f2 = p[1];
            best = &p;
            have_best = true;
            continue;
        }
        if (p == *best) {
            keep[idx] = 1;
        } else if (p[1] < best_f2) {
            keep[idx] = 1;
            best_f2 = p[1];
            best = &p;
        }
    }

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (keep[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<ObjectivePoint> nondominated_points(std::span<const ObjectivePoint> points)
{
    std::vector<ObjectivePoint> out;
    for (std::size_t i : nondominated_indices(points)) {
        out.push_back(points[i]);
    }
    return out;
}

std::vector<ObjectivePoint> objectives_of(const Population& pop)
{
    std::vector<ObjectivePoint> out;
    out.reserve(pop.size());
    for (const auto& ind : pop) {
        out.push_back(ind.f);
    }
    return out;
}

std::string format_real(double v)
{
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(len));
}

} // namespace dmop

#include "dmop/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <exception>
#include <future>
#include <mutex>

namespace dmop {

namespace {

void require_finite(std::span<const ObjectivePoint> points)
{
    for (const auto& p : points) {
        if (std::isnan(p[0]) || std::isnan(p[1])) {
            throw DataError("hypervolume: NaN objective value");
        }
    }
}

// Nondominated, deduplicated candidates strictly inside the reference box,
// sorted by increasing f1 (hence strictly decreasing f2).
std::vector<ObjectivePoint> usable_candidates(std::span<const ObjectivePoint> candidates,
                                              const ReferencePoint& ref)
{
    std::vector<ObjectivePoint> inside;
    for (const auto& p : candidates) {
        if (p[0] < ref[0] && p[1] < ref[1]) {
            inside.push_back(p);
        }
    }
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    std::vector<ObjectivePoint> out;
    for (const auto& p : inside) {
        if (out.empty() || p[1] < out.back()[1]) {
            out.push_back(p);
        }
    }
    return out;
}

struct Line {
    double slope;
    double intercept;
    std::size_t index;

    [[nodiscard]] double at(double a) const { return slope * a + intercept; }
};

// Upper envelope of lines added in strictly decreasing slope order.
class UpperHull {
public:
    void clear() { lines_.clear(); }

    void add(const Line& line)
    {
        while (lines_.size() >= 2) {
            const Line& a = lines_[lines_.size() - 2];
            const Line& b = lines_.back();
            // b is useless once `line` overtakes `a` no later than b does.
            const double lhs = (line.intercept - a.intercept) * (a.slope - b.slope);
            const double rhs = (b.intercept - a.intercept) * (a.slope - line.slope);
            if (lhs >= rhs) {
                lines_.pop_back();
            } else {
                break;
            }
        }
        lines_.push_back(line);
    }

    [[nodiscard]] const Line& best(double a) const
    {
        std::size_t lo = 0;
        std::size_t hi = lines_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (lines_[mid].at(a) < lines_[mid + 1].at(a)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        return lines_[lo];
    }

private:
    std::vector<Line> lines_;
};

} // namespace

double hypervolume_2d(std::span<const ObjectivePoint> points, const ReferencePoint& ref)
{
    require_finite(points);
    std::vector<ObjectivePoint> inside;
    inside.reserve(points.size());
    for (const auto& p : points) {
        if (p[0] < ref[0] && p[1] < ref[1]) {
            inside.push_back(p);
        }
    }
    std::sort(inside.begin(), inside.end());
    double area = 0.0;
    double ceiling = ref[1];
    for (const auto& p : inside) {
        if (p[1] < ceiling) {
            area += (ref[0] - p[0]) * (ceiling - p[1]);
            ceiling = p[1];
        }
    }
    return area;
}

std::vector<ObjectivePoint> select_hv_subset(std::span<const ObjectivePoint> candidates, std::size_t k,
                                             const ReferencePoint& ref)
{
    require_finite(candidates);
    const auto pts = usable_candidates(candidates, ref);
    const std::size_t m = pts.size();
    if (k == 0 || m == 0) {
        return {};
    }
    if (k >= m) {
        return pts;
    }

    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    // value[i]: best area using `layer` points with pts[i] as the leftmost one.
    std::vector<double> value(m, kNegInf);
    std::vector<std::vector<std::size_t>> next(k, std::vector<std::size_t>(m, m));
    for (std::size_t i = 0; i < m; ++i) {
        value[i] = (ref[0] - pts[i][0]) * (ref[1] - pts[i][1]);
    }

    UpperHull hull;
    std::vector<double> layer(m, kNegInf);
    for (std::size_t used = 2; used <= k; ++used) {
        std::fill(layer.begin(), layer.end(), kNegInf);
        hull.clear();
        // Leftmost point i needs used-1 further points to its right.
        const std::size_t last = m - used;
        for (std::size_t i = last + 1; i-- > 0;) {
            const std::size_t j = i + 1;
            hull.add(Line{pts[j][0], value[j], j});
            const double a = ref[1] - pts[i][1];
            const Line& line = hull.best(a);
            layer[i] = line.at(a) - pts[i][0] * a;
            next[used - 1][i] = line.index;
        }
        std::swap(value, layer);
    }

    std::size_t start = 0;
    for (std::size_t i = 1; i < m; ++i) {
        if (value[i] > value[start]) {
            start = i;
        }
    }
    std::vector<ObjectivePoint> chosen;
    chosen.reserve(k);
    std::size_t i = start;
    for (std::size_t used = k; used >= 1; --used) {
        chosen.push_back(pts[i]);
        if (used == 1) {
            break;
        }
        i = next[used - 1][i];
    }
    return chosen;
}

std::vector<ObjectivePoint> optimal_front_subset(const Problem& problem, double t, std::size_t k,
                                                 const ReferencePoint& ref)
{
    if (k < 2) {
        throw ConfigError("optimal_front_subset: k must be at least 2");
    }
    return select_hv_subset(dense_front(problem, t), k, ref);
}

double optimal_hypervolume(const Problem& problem, double t, std::size_t k, const ReferencePoint& ref)
{
    const auto subset = optimal_front_subset(problem, t, k, ref);
    return hypervolume_2d(subset, ref);
}

double OptimalHvCache::get(const Problem& problem, double t, std::size_t k, const ReferencePoint& ref)
{
    const Key key{static_cast<int>(problem.id), problem.n, std::bit_cast<std::uint64_t>(t), k,
                  std::bit_cast<std::uint64_t>(ref[0]), std::bit_cast<std::uint64_t>(ref[1])};
    std::shared_future<double> pending;
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(key); it != table_.end()) {
            pending = it->second;
        }
    }
    if (pending.valid()) {
        return pending.get();
    }

    // First miss computes; concurrent misses on the same key wait for it.
    std::promise<double> promise;
    const std::shared_future<double> mine = promise.get_future().share();
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, mine);
        if (!inserted) {
            pending = it->second;
        }
    }
    if (pending.valid()) {
        return pending.get();
    }
    try {
        promise.set_value(optimal_hypervolume(problem, t, k, ref));
    } catch (...) {
        promise.set_exception(std::current_exception());
    }
    return mine.get();
}

std::size_t OptimalHvCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

HvdValues hvd(std::span<const ObjectivePoint> front, const Problem& problem, double t, const ReferencePoint& ref,
              std::size_t k, OptimalHvCache* cache)
{
    HvdValues out;
    out.achieved_hv = hypervolume_2d(front, ref);
    out.optimal_hv = cache != nullptr ? cache->get(problem, t, k, ref) : optimal_hypervolume(problem, t, k, ref);
    out.hvd = out.optimal_hv - out.achieved_hv;
    return out;
}

} // namespace dmop

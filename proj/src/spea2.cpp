#include <algorithm>
#include <cmath>
#include <limits>

#include "dmop/algorithms.hpp"

namespace dmop {

namespace {

double distance(const ObjectivePoint& a, const ObjectivePoint& b)
{
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

} // namespace

std::vector<double> Spea2::fitness(std::span<const ObjectivePoint> points)
{
    const std::size_t n = points.size();
    std::vector<double> strength(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                strength[i] += 1.0;
            }
        }
    }
    std::vector<double> fit(n, 0.0);
    if (n < 2) {
        return fit;
    }
    const std::size_t k = std::min(n - 1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
    std::vector<double> row;
    row.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        double raw = 0.0;
        row.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            if (dominates(points[j], points[i])) {
                raw += strength[j];
            }
            row.push_back(distance(points[i], points[j]));
        }
        std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k - 1), row.end());
        fit[i] = raw + 1.0 / (row[k - 1] + 2.0);
    }
    return fit;
}

std::vector<std::size_t> Spea2::truncate(std::span<const ObjectivePoint> points, std::size_t keep, RandomSource& rng)
{
    const std::size_t n = points.size();
    std::vector<std::size_t> alive(n);
    for (std::size_t i = 0; i < n; ++i) {
        alive[i] = i;
    }
    if (keep >= n) {
        return alive;
    }

    // sorted[i]: distances from i to every other live member, ascending.
    std::vector<std::vector<double>> sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted[i].reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                sorted[i].push_back(distance(points[i], points[j]));
            }
        }
        std::sort(sorted[i].begin(), sorted[i].end());
    }

    std::vector<char> live(n, 1);
    std::size_t count = n;
    std::vector<std::size_t> ties;
    while (count > keep) {
        ties.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (!live[i]) {
                continue;
            }
            if (ties.empty()) {
                ties.push_back(i);
                continue;
            }
            const auto& best = sorted[ties.front()];
            const auto cmp = std::lexicographical_compare_three_way(sorted[i].begin(), sorted[i].end(), best.begin(),
                                                                    best.end());
            if (cmp < 0) {
                ties.assign(1, i);
            } else if (cmp == 0) {
                ties.push_back(i);
            }
        }
        const std::size_t victim = ties.size() == 1 ? ties.front() : ties[rng.below(ties.size())];
        live[victim] = 0;
        --count;
        for (std::size_t i = 0; i < n; ++i) {
            if (!live[i]) {
                continue;
            }
            auto& row = sorted[i];
            const double d = distance(points[i], points[victim]);
            row.erase(std::lower_bound(row.begin(), row.end(), d));
        }
    }

    std::vector<std::size_t> out;
    out.reserve(keep);
    for (std::size_t i = 0; i < n; ++i) {
        if (live[i]) {
            out.push_back(i);
        }
    }
    return out;
}

Spea2::Spea2(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
             RandomSource rng)
    : Algorithm(pop_size, variation, std::move(rng))
{
    init_population(problem, t);
    environmental_selection(population_);
}

void Spea2::environmental_selection(Population pool)
{
    const auto points = objectives_of(pool);
    const auto fit = fitness(points);

    std::vector<std::size_t> nondominated;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (fit[i] < 1.0) {
            nondominated.push_back(i);
        }
    }

    std::vector<std::size_t> chosen;
    if (nondominated.size() > capacity_) {
        std::vector<ObjectivePoint> sub;
        sub.reserve(nondominated.size());
        for (std::size_t i : nondominated) {
            sub.push_back(points[i]);
        }
        for (std::size_t s : truncate(sub, capacity_, rng_)) {
            chosen.push_back(nondominated[s]);
        }
    } else {
        // Best fitness first, random order among equal fitness.
        auto order = rng_.permutation(pool.size());
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
        order.resize(std::min(capacity_, order.size()));
        chosen = std::move(order);
    }

    Population archive;
    std::vector<double> archive_fit;
    archive.reserve(chosen.size());
    for (std::size_t i : chosen) {
        archive.push_back(std::move(pool[i]));
        archive_fit.push_back(fit[i]);
    }
    archive_ = std::move(archive);
    archive_fitness_ = std::move(archive_fit);
}

void Spea2::step(const Problem& problem, double t)
{
    require_evaluated_at(population_, t);
    require_evaluated_at(archive_, t);

    // Binary tournament on fitness over the archive.
    const std::size_t m = archive_.size();
    std::vector<std::size_t> pool(capacity_);
    for (auto& slot : pool) {
        const std::size_t a = rng_.below(m);
        const std::size_t b = rng_.below(m);
        if (archive_fitness_[a] != archive_fitness_[b]) {
            slot = archive_fitness_[a] < archive_fitness_[b] ? a : b;
        } else {
            slot = rng_.coin(0.5) ? a : b;
        }
    }
    population_ = breed(problem, t, pool, archive_);

    Population union_set = population_;
    union_set.insert(union_set.end(), archive_.begin(), archive_.end());
    environmental_selection(std::move(union_set));
    ++generation_;
}

std::vector<ObjectivePoint> Spea2::front() const
{
    return nondominated_points(objectives_of(archive_));
}

void Spea2::refresh(const Problem& problem, double t, bool reset_memory)
{
    Algorithm::refresh(problem, t, reset_memory);
    if (reset_memory) {
        environmental_selection(population_);
        return;
    }
    evaluate_all(archive_, problem, t);
    Population union_set = population_;
    union_set.insert(union_set.end(), archive_.begin(), archive_.end());
    environmental_selection(std::move(union_set));
}

} // namespace dmop

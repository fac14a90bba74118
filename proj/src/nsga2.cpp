#include <algorithm>

#include "dmop/algorithms.hpp"
#include "dmop/sorting.hpp"

namespace dmop {

namespace {

struct RankCrowding {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

RankCrowding rank_and_crowding(const Population& pop)
{
    const auto points = objectives_of(pop);
    auto sorted = nondominated_sort(points);
    RankCrowding rc{std::move(sorted.rank), std::vector<double>(pop.size(), 0.0)};
    for (const auto& front : sorted.fronts) {
        const auto cd = crowding_distance(points, front);
        for (std::size_t i = 0; i < front.size(); ++i) {
            rc.crowding[front[i]] = cd[i];
        }
    }
    return rc;
}

} // namespace

Nsga2::Nsga2(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
             RandomSource rng)
    : Algorithm(pop_size, variation, std::move(rng))
{
    init_population(problem, t);
}

void Nsga2::step(const Problem& problem, double t)
{
    require_evaluated_at(population_, t);
    const std::size_t n = population_.size();

    // Binary tournament on (rank, crowding distance).
    const auto rc = rank_and_crowding(population_);
    std::vector<std::size_t> pool(n);
    for (auto& slot : pool) {
        const std::size_t a = rng_.below(n);
        const std::size_t b = rng_.below(n);
        if (rc.rank[a] != rc.rank[b]) {
            slot = rc.rank[a] < rc.rank[b] ? a : b;
        } else if (rc.crowding[a] != rc.crowding[b]) {
            slot = rc.crowding[a] > rc.crowding[b] ? a : b;
        } else {
            slot = rng_.coin(0.5) ? a : b;
        }
    }

    Population combined = population_;
    auto offspring = breed(problem, t, pool, population_);
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));

    const auto points = objectives_of(combined);
    const auto sorted = nondominated_sort(points);
    Population next;
    next.reserve(capacity_);
    for (const auto& front : sorted.fronts) {
        if (next.size() + front.size() <= capacity_) {
            for (std::size_t i : front) {
                next.push_back(combined[i]);
            }
            if (next.size() == capacity_) {
                break;
            }
            continue;
        }
        // Last front: largest crowding distance first, random order among equals.
        const auto cd = crowding_distance(points, front);
        auto order = rng_.permutation(front.size());
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
        for (std::size_t s = 0; next.size() < capacity_; ++s) {
            next.push_back(combined[front[order[s]]]);
        }
        break;
    }
    population_ = std::move(next);
    ++generation_;
}

} // namespace dmop

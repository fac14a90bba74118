#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dmop/algorithms.hpp"

namespace dmop {

Moead::Moead(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
             RandomSource rng)
    : Algorithm(pop_size, variation, std::move(rng)), weights_(uniform_weights(pop_size))
{
    const std::size_t n = weights_.size();
    const std::size_t size = std::min(kNeighbourhoodSize, n);
    neighbours_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto d2 = [&](std::size_t j) {
            const double dx = weights_[i][0] - weights_[j][0];
            const double dy = weights_[i][1] - weights_[j][1];
            return dx * dx + dy * dy;
        };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double da = d2(a);
            const double db = d2(b);
            return da < db || (da == db && a < b);
        });
        neighbours_[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
    }
    init_population(problem, t);
    recompute_ideal();
}

double Moead::tchebycheff(const ObjectivePoint& f, const ObjectivePoint& w, const ObjectivePoint& ideal) noexcept
{
    return std::max(w[0] * std::abs(f[0] - ideal[0]), w[1] * std::abs(f[1] - ideal[1]));
}

void Moead::recompute_ideal()
{
    ideal_ = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const auto& ind : population_) {
        ideal_[0] = std::min(ideal_[0], ind.f[0]);
        ideal_[1] = std::min(ideal_[1], ind.f[1]);
    }
}

void Moead::refresh(const Problem& problem, double t, bool reset_memory)
{
    Algorithm::refresh(problem, t, reset_memory);
    recompute_ideal();
}

void Moead::step(const Problem& problem, double t)
{
    require_evaluated_at(population_, t);
    const std::size_t n = population_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& hood = neighbours_[i];
        const auto picks = rng_.sample_without_replacement(hood.size(), 2);
        auto children = make_offspring(population_[hood[picks[0]]].x, population_[hood[picks[1]]].x,
                                       problem.bounds, variation_, rng_);
        Individual child{std::move(children.first), {}, t};
        child.f = evaluate(problem, child.x, t);

        ideal_[0] = std::min(ideal_[0], child.f[0]);
        ideal_[1] = std::min(ideal_[1], child.f[1]);

        std::size_t replaced = 0;
        for (std::size_t s : rng_.permutation(hood.size())) {
            if (replaced == kMaxReplacements) {
                break;
            }
            const std::size_t j = hood[s];
            if (tchebycheff(child.f, weights_[j], ideal_) < tchebycheff(population_[j].f, weights_[j], ideal_)) {
                population_[j] = child;
                ++replaced;
            }
        }
    }
    ++generation_;
}

} // namespace dmop

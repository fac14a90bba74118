#include "dmop/variation.hpp"

#include <algorithm>
#include <cmath>

namespace dmop {

void VariationConfig::validate() const
{
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
        throw ConfigError("variation: crossover_prob must lie in [0, 1]");
    }
    if (!(mutation_prob <= 1.0)) {
        throw ConfigError("variation: mutation_prob must lie in [0, 1] (or be negative for 1/n)");
    }
    if (!(crossover_index > 0.0)) {
        throw ConfigError("variation: crossover_index must be positive");
    }
    if (!(mutation_index > 0.0)) {
        throw ConfigError("variation: mutation_index must be positive");
    }
}

std::pair<DecisionVector, DecisionVector> sbx(std::span<const double> p1, std::span<const double> p2,
                                              const Bounds& bounds, double crossover_prob, double index,
                                              RandomSource& rng)
{
    const std::size_t n = p1.size();
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (!rng.coin(crossover_prob)) {
        return {std::move(c1), std::move(c2)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double mu = rng.uniform();
        double beta = mu <= 0.5 ? std::pow(2.0 * mu, 1.0 / (index + 1.0))
                                : std::pow(2.0 - 2.0 * mu, -1.0 / (index + 1.0));
        if (rng.coin(0.5)) {
            beta = -beta;
        }
        if (rng.coin(0.5)) {
            beta = 1.0;
        }
        const double mid = 0.5 * (p1[i] + p2[i]);
        const double half = 0.5 * (p1[i] - p2[i]);
        c1[i] = mid + beta * half;
        c2[i] = mid - beta * half;
    }
    return {clamp_to_bounds(c1, bounds), clamp_to_bounds(c2, bounds)};
}

void polynomial_mutation(DecisionVector& x, const Bounds& bounds, double prob, double index, RandomSource& rng)
{
    const double power = 1.0 / (index + 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!rng.coin(prob)) {
            continue;
        }
        const double lo = bounds[i].lower;
        const double hi = bounds[i].upper;
        const double range = hi - lo;
        if (range <= 0.0) {
            continue;
        }
        const double mu = rng.uniform();
        double delta = 0.0;
        if (mu < 0.5) {
            const double d1 = (x[i] - lo) / range;
            delta = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(1.0 - d1, index + 1.0), power) - 1.0;
        } else {
            const double d2 = (hi - x[i]) / range;
            delta = 1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(1.0 - d2, index + 1.0), power);
        }
        x[i] = std::min(hi, std::max(lo, x[i] + delta * range));
    }
}

std::pair<DecisionVector, DecisionVector> make_offspring(std::span<const double> p1, std::span<const double> p2,
                                                         const Bounds& bounds, const VariationConfig& cfg,
                                                         RandomSource& rng)
{
    auto children = sbx(p1, p2, bounds, cfg.crossover_prob, cfg.crossover_index, rng);
    const double pm = cfg.mutation_prob_for(bounds.size());
    polynomial_mutation(children.first, bounds, pm, cfg.mutation_index, rng);
    polynomial_mutation(children.second, bounds, pm, cfg.mutation_index, rng);
    return children;
}

DecisionVector random_vector(const Bounds& bounds, RandomSource& rng)
{
    DecisionVector x(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        x[i] = rng.uniform(bounds[i].lower, bounds[i].upper);
    }
    return x;
}

} // namespace dmop

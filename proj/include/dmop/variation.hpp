#ifndef DMOP_VARIATION_HPP
#define DMOP_VARIATION_HPP

#include <span>
#include <utility>

#include "dmop/core.hpp"
#include "dmop/random.hpp"

namespace dmop {

struct VariationConfig {
    double crossover_prob = 1.0;
    double crossover_index = 20.0;
    /// Per-variable mutation probability; negative means 1/n.
    double mutation_prob = -1.0;
    double mutation_index = 20.0;

    [[nodiscard]] double mutation_prob_for(std::size_t n) const
    {
        return mutation_prob < 0.0 ? 1.0 / static_cast<double>(n) : mutation_prob;
    }

    void validate() const;
};

/// Simulated binary crossover (unbounded form, as in PlatEMO's OperatorGA): per variable the
/// spread factor gets a random sign and is reset to 1 with probability 1/2; with probability
/// 1 - crossover_prob the whole pair is copied. Children are clamped to bounds.
[[nodiscard]] std::pair<DecisionVector, DecisionVector> sbx(std::span<const double> p1, std::span<const double> p2,
                                                            const Bounds& bounds, double crossover_prob,
                                                            double index, RandomSource& rng);

/// Bounded polynomial mutation (Deb & Goyal); each variable mutates with probability `prob`.
void polynomial_mutation(DecisionVector& x, const Bounds& bounds, double prob, double index, RandomSource& rng);

/// SBX followed by polynomial mutation on both children.
[[nodiscard]] std::pair<DecisionVector, DecisionVector> make_offspring(std::span<const double> p1,
                                                                       std::span<const double> p2,
                                                                       const Bounds& bounds,
                                                                       const VariationConfig& cfg,
                                                                       RandomSource& rng);

[[nodiscard]] DecisionVector random_vector(const Bounds& bounds, RandomSource& rng);

} // namespace dmop

#endif // DMOP_VARIATION_HPP

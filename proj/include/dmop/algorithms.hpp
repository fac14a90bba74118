#ifndef DMOP_ALGORITHMS_HPP
#define DMOP_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "dmop/core.hpp"
#include "dmop/problems.hpp"
#include "dmop/random.hpp"
#include "dmop/variation.hpp"

namespace dmop {

enum class AlgorithmId : std::uint8_t { NSGA2, NSGA3, MOEAD, SPEA2 };

/// Canonical ids: "NSGA-II", "NSGA-III", "MOEAD", "SPEA2".
[[nodiscard]] std::string_view to_string(AlgorithmId id) noexcept;
[[nodiscard]] AlgorithmId parse_algorithm_id(std::string_view name);
[[nodiscard]] std::span<const AlgorithmId> all_algorithms() noexcept;

/// Evaluates every member of pop at t and stamps eval_t.
void evaluate_all(Population& pop, const Problem& problem, double t);

/// State of one generational MOEA. Owned by exactly one run.
///
/// Every concrete algorithm advances by one generation per step() and keeps its
/// population at a constant size. Tie-breaks draw from the algorithm's own RandomSource.
class Algorithm {
public:
    virtual ~Algorithm() = default;

    [[nodiscard]] virtual AlgorithmId id() const noexcept = 0;
    [[nodiscard]] virtual std::unique_ptr<Algorithm> clone() const = 0;

    /// One generation at time t. Requires every member to be evaluated at t.
    virtual void step(const Problem& problem, double t) = 0;

    /// Nondominated subset of the measured set (the SPEA2 archive, otherwise the
    /// population). Duplicate objective vectors are all kept.
    [[nodiscard]] virtual std::vector<ObjectivePoint> front() const;

    /// Re-evaluates everything at t and rebuilds derived state after the population was
    /// changed from outside. `reset_memory` also discards any elite memory (SPEA2 archive).
    virtual void refresh(const Problem& problem, double t, bool reset_memory);

    [[nodiscard]] Population& population() noexcept { return population_; }
    [[nodiscard]] const Population& population() const noexcept { return population_; }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
    [[nodiscard]] std::size_t generation() const noexcept { return generation_; }
    [[nodiscard]] RandomSource& rng() noexcept { return rng_; }
    [[nodiscard]] const VariationConfig& variation() const noexcept { return variation_; }

protected:
    Algorithm(std::size_t capacity, const VariationConfig& variation, RandomSource rng)
        : capacity_(capacity), variation_(variation), rng_(std::move(rng))
    {
    }

    void require_evaluated_at(const Population& pop, double t) const;
    void init_population(const Problem& problem, double t);
    /// Two children per consecutive pair (pool[2i], pool[2i+1]) of `parents`, evaluated at t.
    Population breed(const Problem& problem, double t, std::span<const std::size_t> pool,
                     const Population& parents);

    std::size_t capacity_;
    VariationConfig variation_;
    RandomSource rng_;
    Population population_;
    std::size_t generation_ = 0;
};

/// Builds an algorithm with a uniform random population evaluated at t.
/// pop_size must be even and >= 4.
[[nodiscard]] std::unique_ptr<Algorithm> make_algorithm(AlgorithmId id, const Problem& problem, double t,
                                                        std::size_t pop_size, const VariationConfig& variation,
                                                        RandomSource rng);

/// Nondominated subset of the algorithm's measured set.
[[nodiscard]] inline std::vector<ObjectivePoint> extract_front(const Algorithm& algorithm)
{
    return algorithm.front();
}

/// Uniformly spaced 2-D weight vectors (i/(count-1), 1 - i/(count-1)); the Das-Dennis
/// lattice with count-1 divisions.
[[nodiscard]] std::vector<ObjectivePoint> uniform_weights(std::size_t count);

class Nsga2 final : public Algorithm {
public:
    Nsga2(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
          RandomSource rng);

    [[nodiscard]] AlgorithmId id() const noexcept override { return AlgorithmId::NSGA2; }
    [[nodiscard]] std::unique_ptr<Algorithm> clone() const override { return std::make_unique<Nsga2>(*this); }
    void step(const Problem& problem, double t) override;
};

class Nsga3 final : public Algorithm {
public:
    Nsga3(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
          RandomSource rng);

    [[nodiscard]] AlgorithmId id() const noexcept override { return AlgorithmId::NSGA3; }
    [[nodiscard]] std::unique_ptr<Algorithm> clone() const override { return std::make_unique<Nsga3>(*this); }
    void step(const Problem& problem, double t) override;

    [[nodiscard]] const std::vector<ObjectivePoint>& reference_points() const noexcept { return reference_; }

private:
    Population select_survivors(Population combined);

    std::vector<ObjectivePoint> reference_;
};

class Moead final : public Algorithm {
public:
    static constexpr std::size_t kNeighbourhoodSize = 20;
    static constexpr std::size_t kMaxReplacements = 2;

    Moead(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
          RandomSource rng);

    [[nodiscard]] AlgorithmId id() const noexcept override { return AlgorithmId::MOEAD; }
    [[nodiscard]] std::unique_ptr<Algorithm> clone() const override { return std::make_unique<Moead>(*this); }
    void step(const Problem& problem, double t) override;
    void refresh(const Problem& problem, double t, bool reset_memory) override;

    [[nodiscard]] const std::vector<ObjectivePoint>& weights() const noexcept { return weights_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& neighbourhoods() const noexcept
    {
        return neighbours_;
    }
    [[nodiscard]] const ObjectivePoint& ideal() const noexcept { return ideal_; }

    /// max_j w_j |f_j - z_j|
    [[nodiscard]] static double tchebycheff(const ObjectivePoint& f, const ObjectivePoint& w,
                                            const ObjectivePoint& ideal) noexcept;

private:
    void recompute_ideal();

    std::vector<ObjectivePoint> weights_;
    std::vector<std::vector<std::size_t>> neighbours_;
    ObjectivePoint ideal_{};
};

class Spea2 final : public Algorithm {
public:
    Spea2(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
          RandomSource rng);

    [[nodiscard]] AlgorithmId id() const noexcept override { return AlgorithmId::SPEA2; }
    [[nodiscard]] std::unique_ptr<Algorithm> clone() const override { return std::make_unique<Spea2>(*this); }
    void step(const Problem& problem, double t) override;
    [[nodiscard]] std::vector<ObjectivePoint> front() const override;
    void refresh(const Problem& problem, double t, bool reset_memory) override;

    [[nodiscard]] const Population& archive() const noexcept { return archive_; }

    /// Raw fitness plus k-th nearest neighbour density, k = floor(sqrt(size)).
    /// Values below 1 mark nondominated members.
    [[nodiscard]] static std::vector<double> fitness(std::span<const ObjectivePoint> points);

    /// Indices of the `keep` members that survive distance-based truncation of `points`:
    /// repeatedly drops the member whose sorted distance list to the others is
    /// lexicographically smallest. Exact ties are broken with rng.
    [[nodiscard]] static std::vector<std::size_t> truncate(std::span<const ObjectivePoint> points,
                                                           std::size_t keep, RandomSource& rng);

private:
    void environmental_selection(Population pool);

    Population archive_;
    std::vector<double> archive_fitness_;
};

} // namespace dmop

#endif // DMOP_ALGORITHMS_HPP

#include "dmop/algorithms.hpp"

#include <array>

namespace dmop {

namespace {

constexpr std::array<AlgorithmId, 4> kAllAlgorithms{AlgorithmId::NSGA2, AlgorithmId::NSGA3, AlgorithmId::MOEAD,
                                                    AlgorithmId::SPEA2};

} // namespace

std::string_view to_string(AlgorithmId id) noexcept
{
    switch (id) {
    case AlgorithmId::NSGA2: return "NSGA-II";
    case AlgorithmId::NSGA3: return "NSGA-III";
    case AlgorithmId::MOEAD: return "MOEAD";
    case AlgorithmId::SPEA2: return "SPEA2";
    }
    return "?";
}

AlgorithmId parse_algorithm_id(std::string_view name)
{
    for (AlgorithmId id : kAllAlgorithms) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown algorithm id '" + std::string(name) + "'");
}

std::span<const AlgorithmId> all_algorithms() noexcept { return kAllAlgorithms; }

void evaluate_all(Population& pop, const Problem& problem, double t)
{
    for (auto& ind : pop) {
        ind.f = evaluate(problem, ind.x, t);
        ind.eval_t = t;
    }
}

std::vector<ObjectivePoint> Algorithm::front() const
{
    return nondominated_points(objectives_of(population_));
}

void Algorithm::refresh(const Problem& problem, double t, bool /*reset_memory*/)
{
    evaluate_all(population_, problem, t);
}

void Algorithm::require_evaluated_at(const Population& pop, double t) const
{
    for (const auto& ind : pop) {
        if (ind.eval_t != t) {
            throw PreconditionError("step: population holds objectives evaluated at a different t");
        }
    }
}

void Algorithm::init_population(const Problem& problem, double t)
{
    population_.clear();
    population_.reserve(capacity_);
    for (std::size_t i = 0; i < capacity_; ++i) {
        Individual ind;
        ind.x = random_vector(problem.bounds, rng_);
        population_.push_back(std::move(ind));
    }
    evaluate_all(population_, problem, t);
}

Population Algorithm::breed(const Problem& problem, double t, std::span<const std::size_t> pool,
                            const Population& parents)
{
    Population offspring;
    offspring.reserve(pool.size());
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
        auto [c1, c2] = make_offspring(parents[pool[i]].x, parents[pool[i + 1]].x, problem.bounds, variation_, rng_);
        offspring.push_back(Individual{std::move(c1), {}, t});
        offspring.push_back(Individual{std::move(c2), {}, t});
    }
    evaluate_all(offspring, problem, t);
    return offspring;
}

std::vector<ObjectivePoint> uniform_weights(std::size_t count)
{
    if (count < 2) {
        throw ConfigError("uniform_weights: need at least 2 vectors");
    }
    std::vector<ObjectivePoint> w(count);
    const double divisions = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double a = static_cast<double>(i) / divisions;
        w[i] = {a, 1.0 - a};
    }
    return w;
}

std::unique_ptr<Algorithm> make_algorithm(AlgorithmId id, const Problem& problem, double t, std::size_t pop_size,
                                          const VariationConfig& variation, RandomSource rng)
{
    if (pop_size < 4 || pop_size % 2 != 0) {
        throw ConfigError("population size must be even and at least 4, got " + std::to_string(pop_size));
    }
    variation.validate();
    switch (id) {
    case AlgorithmId::NSGA2: return std::make_unique<Nsga2>(problem, t, pop_size, variation, std::move(rng));
    case AlgorithmId::NSGA3: return std::make_unique<Nsga3>(problem, t, pop_size, variation, std::move(rng));
    case AlgorithmId::MOEAD:
        if (pop_size < Moead::kNeighbourhoodSize) {
            throw ConfigError("MOEAD needs at least " + std::to_string(Moead::kNeighbourhoodSize) +
                              " weight vectors, got " + std::to_string(pop_size));
        }
        return std::make_unique<Moead>(problem, t, pop_size, variation, std::move(rng));
    case AlgorithmId::SPEA2: return std::make_unique<Spea2>(problem, t, pop_size, variation, std::move(rng));
    }
    throw ConfigError("unknown algorithm id");
}

} // namespace dmop

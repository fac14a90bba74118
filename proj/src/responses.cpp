#include "dmop/responses.hpp"

#include <array>
#include <cmath>

#include "dmop/variation.hpp"

namespace dmop {

namespace {

constexpr std::array<ResponseId, 4> kAllResponses{ResponseId::DR0, ResponseId::DR1, ResponseId::DR2,
                                                  ResponseId::DR3};

} // namespace

std::string_view to_string(ResponseId id) noexcept
{
    switch (id) {
    case ResponseId::DR0: return "DR0";
    case ResponseId::DR1: return "DR1";
    case ResponseId::DR2: return "DR2";
    case ResponseId::DR3: return "DR3";
    }
    return "?";
}

ResponseId parse_response_id(std::string_view name)
{
    for (ResponseId id : kAllResponses) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown response id '" + std::string(name) + "'");
}

std::span<const ResponseId> all_responses() noexcept { return kAllResponses; }

std::size_t ResponseConfig::replace_count(std::size_t pop_size) const
{
    if (!(replace_fraction > 0.0 && replace_fraction <= 1.0)) {
        throw ConfigError("response: replace_fraction must lie in (0, 1]");
    }
    const auto count = static_cast<std::size_t>(std::llround(replace_fraction * static_cast<double>(pop_size)));
    if (count < 1) {
        throw ConfigError("response: replace_fraction * pop_size rounds to zero");
    }
    return count;
}

void ResponseConfig::validate(std::size_t pop_size) const
{
    if (kind == ResponseId::DR1 || kind == ResponseId::DR2) {
        (void)replace_count(pop_size);
    }
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw ConfigError("response: mutation_prob must lie in [0, 1]");
    }
    if (!(mutation_index > 0.0)) {
        throw ConfigError("response: mutation_index must be positive");
    }
}

void apply_response(Algorithm& algorithm, const ResponseConfig& response, const Problem& problem, double t_new)
{
    Population& pop = algorithm.population();
    RandomSource& rng = algorithm.rng();
    switch (response.kind) {
    case ResponseId::DR0: break;
    case ResponseId::DR1: {
        for (std::size_t i : rng.sample_without_replacement(pop.size(), response.replace_count(pop.size()))) {
            pop[i].x = random_vector(problem.bounds, rng);
        }
        break;
    }
    case ResponseId::DR2: {
        // Sources are drawn from the pre-response population so a fresh mutant is never re-mutated.
        const Population before = pop;
        for (std::size_t i : rng.sample_without_replacement(pop.size(), response.replace_count(pop.size()))) {
            DecisionVector x = before[rng.below(before.size())].x;
            polynomial_mutation(x, problem.bounds, response.mutation_prob, response.mutation_index, rng);
            pop[i].x = std::move(x);
        }
        break;
    }
    case ResponseId::DR3: {
        for (auto& ind : pop) {
            ind.x = random_vector(problem.bounds, rng);
        }
        break;
    }
    }
    algorithm.refresh(problem, t_new, response.kind == ResponseId::DR3);
}

} // namespace dmop

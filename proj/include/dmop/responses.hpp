#ifndef DMOP_RESPONSES_HPP
#define DMOP_RESPONSES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "dmop/algorithms.hpp"
#include "dmop/problems.hpp"

namespace dmop {

/// DR0 none, DR1 random solution addition, DR2 mutated solution addition, DR3 random restart.
enum class ResponseId : std::uint8_t { DR0, DR1, DR2, DR3 };

[[nodiscard]] std::string_view to_string(ResponseId id) noexcept;
[[nodiscard]] ResponseId parse_response_id(std::string_view name);
[[nodiscard]] std::span<const ResponseId> all_responses() noexcept;

struct ResponseConfig {
    ResponseId kind = ResponseId::DR0;
    /// Share of the population replaced by DR1/DR2.
    double replace_fraction = 0.2;
    /// Per-variable polynomial mutation probability for DR2 copies.
    double mutation_prob = 0.5;
    double mutation_index = 20.0;

    /// round(replace_fraction * pop_size); throws ConfigError unless it is in [1, pop_size].
    [[nodiscard]] std::size_t replace_count(std::size_t pop_size) const;

    void validate(std::size_t pop_size) const;
};

/// Reacts to a prompted change: modifies the population according to the response kind,
/// then re-evaluates everything at t_new and refreshes the algorithm's derived state.
/// Draws from the algorithm's own random source.
void apply_response(Algorithm& algorithm, const ResponseConfig& response, const Problem& problem, double t_new);

} // namespace dmop

#endif // DMOP_RESPONSES_HPP

#ifndef DMOP_RANDOM_HPP
#define DMOP_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace dmop {

using Seed = std::uint64_t;

/// Deterministic per-run random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so every
/// conversion to doubles and ranges is done here explicitly; the same seed gives
/// the same draws with any compiler or standard library.
class RandomSource {
public:
    explicit RandomSource(Seed seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] Seed seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::size_t below(std::size_t n);

    bool coin(double p) { return uniform() < p; }

    /// Fisher-Yates shuffle of [0, n).
    std::vector<std::size_t> permutation(std::size_t n);

    /// k distinct indices from [0, n), in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    friend bool operator==(const RandomSource& a, const RandomSource& b)
    {
        return a.seed_ == b.seed_ && a.engine_ == b.engine_;
    }

private:
    Seed seed_;
    std::mt19937_64 engine_;
};

/// Identity of one run inside a sweep; every field is an index into the sweep's id lists.
struct RunKey {
    std::uint32_t problem = 0;
    std::uint32_t algorithm = 0;
    std::uint32_t response = 0;
    std::uint32_t severity = 0;
    std::uint32_t frequency = 0;
    std::uint32_t repeat = 0;

    friend auto operator<=>(const RunKey&, const RunKey&) = default;
};

/// SplitMix64 finaliser (Steele, Lea & Flood 2014).
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for one run: h0 = splitmix64(master), then for each key field in order
/// h = splitmix64(h ^ (field + 1) * 0xD1B54A32D192ED03). Each step is a bijection
/// of h for fixed field, so distinct keys only collide by chance.
[[nodiscard]] Seed derive_seed(Seed master, const RunKey& key) noexcept;

} // namespace dmop

#endif // DMOP_RANDOM_HPP

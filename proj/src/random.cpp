#include "dmop/random.hpp"

#include <numeric>
#include <stdexcept>

namespace dmop {

std::size_t RandomSource::below(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("RandomSource::below: empty range");
    }
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t r = engine_();
    while (r >= limit) {
        r = engine_();
    }
    return static_cast<std::size_t>(r % bound);
}

std::vector<std::size_t> RandomSource::permutation(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(p[i - 1], p[below(i)]);
    }
    return p;
}

std::vector<std::size_t> RandomSource::sample_without_replacement(std::size_t n, std::size_t k)
{
    if (k > n) {
        throw std::invalid_argument("sample_without_replacement: k > n");
    }
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(p[i], p[i + below(n - i)]);
    }
    p.resize(k);
    return p;
}

Seed derive_seed(Seed master, const RunKey& key) noexcept
{
    constexpr std::uint64_t kMul = 0xD1B54A32D192ED03ULL;
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t field : {key.problem, key.algorithm, key.response, key.severity,
                                key.frequency, key.repeat}) {
        h = splitmix64(h ^ ((field + 1) * kMul));
    }
    return h;
}

} // namespace dmop

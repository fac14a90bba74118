#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "dmop/algorithms.hpp"
#include "dmop/sorting.hpp"

namespace dmop {

namespace {

constexpr double kTiny = 1e-10;

// Translated and intercept-normalised objectives (Deb & Jain 2014, M = 2).
std::vector<ObjectivePoint> normalise(std::span<const ObjectivePoint> f)
{
    ObjectivePoint ideal{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const auto& p : f) {
        ideal[0] = std::min(ideal[0], p[0]);
        ideal[1] = std::min(ideal[1], p[1]);
    }
    std::vector<ObjectivePoint> shifted(f.size());
    ObjectivePoint worst{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) {
        shifted[i] = {f[i][0] - ideal[0], f[i][1] - ideal[1]};
        worst[0] = std::max(worst[0], shifted[i][0]);
        worst[1] = std::max(worst[1], shifted[i][1]);
    }

    // Extreme point per axis: minimum achievement scalarising function with weight e_j.
    std::array<ObjectivePoint, 2> extreme{};
    for (std::size_t axis = 0; axis < 2; ++axis) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : shifted) {
            const double asf = axis == 0 ? std::max(p[0], p[1] / 1e-6) : std::max(p[0] / 1e-6, p[1]);
            if (asf < best) {
                best = asf;
                extreme[axis] = p;
            }
        }
    }

    // Line through the two extremes: x/a0 + y/a1 = 1.
    ObjectivePoint intercept = worst;
    const double det = extreme[0][0] * extreme[1][1] - extreme[0][1] * extreme[1][0];
    if (std::abs(det) > kTiny) {
        // Solve [e0; e1] * (1/a0, 1/a1)^T = (1, 1)^T.
        const double inv0 = (extreme[1][1] - extreme[0][1]) / det;
        const double inv1 = (extreme[0][0] - extreme[1][0]) / det;
        if (inv0 > kTiny && inv1 > kTiny) {
            const ObjectivePoint a{1.0 / inv0, 1.0 / inv1};
            if (std::isfinite(a[0]) && std::isfinite(a[1]) && a[0] > kTiny && a[1] > kTiny) {
                intercept = a;
            }
        }
    }
    for (auto& a : intercept) {
        if (!(a > kTiny)) {
            a = 1.0;
        }
    }
    for (auto& p : shifted) {
        p[0] /= intercept[0];
        p[1] /= intercept[1];
    }
    return shifted;
}

} // namespace

Nsga3::Nsga3(const Problem& problem, double t, std::size_t pop_size, const VariationConfig& variation,
             RandomSource rng)
    : Algorithm(pop_size, variation, std::move(rng)), reference_(uniform_weights(pop_size))
{
    init_population(problem, t);
}

void Nsga3::step(const Problem& problem, double t)
{
    require_evaluated_at(population_, t);
    const std::size_t n = population_.size();
    std::vector<std::size_t> pool(n);
    for (auto& slot : pool) {
        slot = rng_.below(n);
    }
    Population combined = population_;
    auto offspring = breed(problem, t, pool, population_);
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    population_ = select_survivors(std::move(combined));
    ++generation_;
}

Population Nsga3::select_survivors(Population combined)
{
    const auto points = objectives_of(combined);
    const auto sorted = nondominated_sort(points);

    std::vector<std::size_t> chosen;
    std::vector<std::size_t> last;
    for (const auto& front : sorted.fronts) {
        if (chosen.size() + front.size() <= capacity_) {
            chosen.insert(chosen.end(), front.begin(), front.end());
            if (chosen.size() == capacity_) {
                break;
            }
        } else {
            last = front;
            break;
        }
    }

    if (!last.empty()) {
        // Normalise over chosen + last front, associate each to its nearest reference line.
        const std::size_t base = chosen.size();
        std::vector<std::size_t> members = chosen;
        members.insert(members.end(), last.begin(), last.end());
        std::vector<ObjectivePoint> f;
        f.reserve(members.size());
        for (std::size_t i : members) {
            f.push_back(points[i]);
        }
        const auto normed = normalise(f);

        std::vector<std::size_t> niche(members.size());
        std::vector<double> dist(members.size());
        for (std::size_t m = 0; m < members.size(); ++m) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < reference_.size(); ++r) {
                const auto& w = reference_[r];
                const double ww = w[0] * w[0] + w[1] * w[1];
                const double proj = (normed[m][0] * w[0] + normed[m][1] * w[1]) / ww;
                const double dx = normed[m][0] - proj * w[0];
                const double dy = normed[m][1] - proj * w[1];
                const double d = std::sqrt(dx * dx + dy * dy);
                if (d < best) {
                    best = d;
                    niche[m] = r;
                }
            }
            dist[m] = best;
        }

        std::vector<std::size_t> count(reference_.size(), 0);
        for (std::size_t m = 0; m < base; ++m) {
            ++count[niche[m]];
        }
        std::vector<char> taken(members.size(), 0);
        std::vector<char> excluded(reference_.size(), 0);
        std::size_t remaining = capacity_ - base;
        while (remaining > 0) {
            std::size_t min_count = std::numeric_limits<std::size_t>::max();
            for (std::size_t r = 0; r < reference_.size(); ++r) {
                if (!excluded[r]) {
                    min_count = std::min(min_count, count[r]);
                }
            }
            std::vector<std::size_t> least;
            for (std::size_t r = 0; r < reference_.size(); ++r) {
                if (!excluded[r] && count[r] == min_count) {
                    least.push_back(r);
                }
            }
            const std::size_t r = least[rng_.below(least.size())];

            std::vector<std::size_t> cand;
            for (std::size_t m = base; m < members.size(); ++m) {
                if (!taken[m] && niche[m] == r) {
                    cand.push_back(m);
                }
            }
            if (cand.empty()) {
                excluded[r] = 1;
                continue;
            }
            std::size_t pick = 0;
            if (count[r] == 0) {
                pick = cand.front();
                for (std::size_t m : cand) {
                    if (dist[m] < dist[pick]) {
                        pick = m;
                    }
                }
            } else {
                pick = cand[rng_.below(cand.size())];
            }
            taken[pick] = 1;
            ++count[r];
            chosen.push_back(members[pick]);
            --remaining;
        }
    }

    Population next;
    next.reserve(capacity_);
    for (std::size_t i : chosen) {
        next.push_back(std::move(combined[i]));
    }
    return next;
}

} // namespace dmop

// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers as arguments
// to run a subset; the exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <omp.h>

#include "dmop/algorithms.hpp"
#include "dmop/harness.hpp"
#include "dmop/io.hpp"
#include "dmop/metrics.hpp"
#include "dmop/problems.hpp"
#include "oracles.hpp"

using namespace dmop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// 1. POS samples land on the front; perturbed POS points never dominate it.
Outcome truth_generators()
{
    Outcome out;
    double worst = 0.0;
    std::size_t dominating = 0;
    std::size_t checked = 0;
    RandomSource rng(2024);
    for (auto id : all_problems()) {
        const auto prob = make_problem(id);
        for (int j = 0; j < 25; ++j) {
            // Default schedule spans t in [0, 0.5 * 29].
            const double t = 14.5 * j / 24.0;
            const auto dense = dense_front(prob, t);
            const auto xs = pos_sample(prob, t, kTruthGridSize);
            std::vector<ObjectivePoint> image;
            image.reserve(xs.size());
            for (const auto& x : xs) {
                const auto f = evaluate(prob, x, t);
                worst = std::max(worst, std::abs(f[1] - front_f2(prob, t, f[0])));
                image.push_back(f);
            }
            const auto filtered = nondominated_points(image);
            if (filtered.size() != dense.size()) {
                out.pass = false;
                out.detail += " filtered-size-mismatch(" + std::string(to_string(id)) + ")";
            } else {
                for (std::size_t i = 0; i < dense.size(); ++i) {
                    worst = std::max({worst, std::abs(filtered[i][0] - dense[i][0]),
                                      std::abs(filtered[i][1] - dense[i][1])});
                }
            }
            for (int p = 0; p < 100; ++p) {
                auto x = xs[rng.below(xs.size())];
                for (std::size_t v = 0; v < x.size(); ++v) {
                    x[v] += rng.uniform(-0.1, 0.1);
                }
                x = clamp_to_bounds(x, prob.bounds);
                const auto f = evaluate(prob, x, t);
                ++checked;
                for (const auto& q : dense) {
                    if (dominates(f, q)) {
                        ++dominating;
                        break;
                    }
                }
            }
        }
    }
    out.pass = out.pass && worst <= 1e-9 && dominating == 0;
    out.detail = "max deviation " + fmt("%.3g", worst) + ", dominating perturbations " +
                 std::to_string(dominating) + "/" + std::to_string(checked) + out.detail;
    return out;
}

// 2. Exact hypervolume against Monte-Carlo and hand values.
Outcome hypervolume_oracle()
{
    Outcome out;
    const ObjectivePoint ref{2.0, 2.0};
    RandomSource rng(77);
    double worst_z = 0.0;
    double worst_grid = 0.0;
    std::size_t misses = 0;
    for (int f = 0; f < 100; ++f) {
        std::vector<ObjectivePoint> cloud(2 + rng.below(60));
        for (auto& q : cloud) {
            q = {rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0)};
        }
        const auto front = nondominated_points(cloud);
        const double exact = hypervolume_2d(front, ref);
        worst_grid = std::max(worst_grid, std::abs(exact - oracle::grid_hypervolume(front, ref)));
        const auto mc = oracle::monte_carlo_hypervolume(front, ref, {0.0, 0.0}, 1000000,
                                                        0x9E3779B97F4A7C15ULL + static_cast<unsigned>(f));
        const double z = std::abs(exact - mc.value) / mc.std_error;
        worst_z = std::max(worst_z, z);
        misses += z > 3.0 ? 1 : 0;
    }
    const std::vector<ObjectivePoint> hand{{0, 1}, {0.5, 0.5}, {1, 0}};
    const double hand_err = std::abs(hypervolume_2d(hand, ref) - 3.25);
    const double empty = hypervolume_2d(std::vector<ObjectivePoint>{}, ref);
    const double outside = hypervolume_2d(std::vector<ObjectivePoint>{{3, 3}}, ref);
    out.pass = misses == 0 && hand_err <= 1e-12 && empty == 0.0 && outside == 0.0;
    out.detail = "fronts beyond 3 sigma " + std::to_string(misses) + "/100 (max " + fmt("%.2f", worst_z) +
                 " sigma), exact vs cell-decomposition oracle " + fmt("%.3g", worst_grid) +
                 ", 3.25 case error " + fmt("%.3g", hand_err);
    return out;
}

// 3. Subset selection equals exhaustive search for k = 2, 3.
Outcome subset_oracle()
{
    const ObjectivePoint ref = kDefaultReference;
    double worst = 0.0;
    for (auto id : all_problems()) {
        const auto prob = make_problem(id);
        for (double t : {0.0, 1.3, 2.7, 6.96285912608783, 11.0}) {
            const auto grid = dense_front(prob, t, 101);
            for (std::size_t k : {2u, 3u}) {
                const double got = hypervolume_2d(select_hv_subset(grid, k, ref), ref);
                worst = std::max(worst, std::abs(got - oracle::exhaustive_best_hv(grid, k, ref)));
            }
        }
    }
    return {worst <= 1e-9, "max gap to exhaustive best " + fmt("%.3g", worst)};
}

// 4. The optimal subset measured as an achieved front gives zero HVD.
Outcome zero_case()
{
    double worst = 0.0;
    for (auto id : all_problems()) {
        const auto prob = make_problem(id);
        for (double t : {0.0, 0.5, 3.3, 9.1, 14.5}) {
            const auto opt = optimal_front_subset(prob, t, kDefaultPopulationSize, kDefaultReference);
            worst = std::max(worst, std::abs(hvd(opt, prob, t, kDefaultReference, kDefaultPopulationSize).hvd));
        }
    }
    return {worst <= 1e-9, "max |hvd| " + fmt("%.3g", worst)};
}

// 5. Enumeration and per-cell record counts under the defaults.
Outcome enumeration_counts()
{
    Outcome out;
    const auto defaults = SweepSpec::defaults();
    std::string detail;
    for (auto id : defaults.problems) {
        auto one = defaults;
        one.problems = {id};
        one.repeats = 1;
        const auto n = enumerate_runs(one).size();
        out.pass = out.pass && n == 10080;
        detail += std::string(to_string(id)) + "=" + std::to_string(n) + " ";
    }

    // Every default cell holds `repeats` runs, each run yields num_changes records.
    std::map<CellKey, std::size_t> runs_per_cell;
    for (const auto& k : enumerate_runs(defaults)) {
        ++runs_per_cell[cell_of(k)];
    }
    std::set<std::size_t> cell_counts;
    for (const auto& [cell, runs] : runs_per_cell) {
        cell_counts.insert(runs * defaults.num_changes);
    }

    // A real default-length sweep over one cell per algorithm.
    auto real = defaults;
    real.problems = {ProblemId::dMOP1};
    real.responses = {ResponseId::DR1};
    real.severities = {defaults.severities.back()};
    real.frequencies = {1};
    const auto res = run_sweep(real, static_cast<std::size_t>(omp_get_max_threads()));
    for (const auto& [cell, stats] : res.cells) {
        cell_counts.insert(stats.count);
    }
    out.pass = out.pass && cell_counts == std::set<std::size_t>{150} && runs_per_cell.size() == 4 * 10080;
    out.detail = "runs per repeat per problem: " + detail + "| cell record counts {";
    for (auto c : cell_counts) {
        out.detail += std::to_string(c) + ",";
    }
    out.detail.back() = '}';
    return out;
}

struct SweepOutputs {
    std::string csv;
    std::vector<std::string> svgs;
};

SweepOutputs outputs_of(const SweepResult& r)
{
    SweepOutputs o;
    const auto rows = result_rows(r);
    o.csv = results_csv(rows, r.spec.response);
    for (const auto& g : heatmaps_from_rows(rows)) {
        o.svgs.push_back(write_heatmap_svg(g));
    }
    return o;
}

// 6. Parallel and serial sweeps write identical bytes.
Outcome determinism()
{
    SweepSpec s;
    s.problems = {ProblemId::dMOP2};
    s.algorithms = {AlgorithmId::NSGA2, AlgorithmId::MOEAD};
    s.responses = {ResponseId::DR0, ResponseId::DR3};
    s.severities = {0.1, 0.25, 0.5};
    s.frequencies = {1, 5, 10};
    s.repeats = 2;
    const auto a = outputs_of(run_sweep(s, 1));
    const auto b = outputs_of(run_sweep(s, 8));
    const bool same = a.csv == b.csv && a.svgs == b.svgs;
    return {same && a.svgs.size() == 4,
            std::to_string(a.csv.size()) + " CSV bytes, " + std::to_string(a.svgs.size()) + " SVG panels, " +
                (same ? "identical" : "DIFFERENT")};
}

struct CellSummary {
    double mean_hvd = 0.0;
    double mean_opt = 0.0;
};

using CellTable = std::map<std::tuple<AlgorithmId, ResponseId, double, std::size_t>, CellSummary>;

CellTable scaled_sweep(ProblemId problem, std::vector<AlgorithmId> algorithms, std::vector<ResponseId> responses)
{
    SweepSpec s;
    s.problems = {problem};
    s.algorithms = std::move(algorithms);
    s.responses = std::move(responses);
    s.severities = {0.01, 0.1, 0.25, 0.5};
    s.frequencies = {1, 5, 10, 20, 30};
    s.repeats = 3;
    s.pop_size = 100;
    s.num_changes = 30;
    const auto r = run_sweep(s, static_cast<std::size_t>(omp_get_max_threads()));
    CellTable table;
    std::map<CellKey, std::pair<double, std::size_t>> opt;
    for (const auto& run : r.runs) {
        auto& acc = opt[cell_of(run.key)];
        for (const auto& rec : run.records) {
            acc.first += rec.optimal_hv;
            ++acc.second;
        }
    }
    for (const auto& [key, stats] : r.cells) {
        const auto& o = opt[key];
        table[{s.algorithms[key.algorithm], s.responses[key.response], s.severities[key.severity],
               s.frequencies[key.frequency]}] = {stats.mean_hvd, o.first / static_cast<double>(o.second)};
    }
    return table;
}

double grid_average(const CellTable& t, AlgorithmId a, ResponseId r)
{
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& [k, v] : t) {
        if (std::get<0>(k) == a && std::get<1>(k) == r) {
            sum += v.mean_hvd;
            ++n;
        }
    }
    return sum / static_cast<double>(n);
}

double tau_average(const CellTable& t, AlgorithmId a, std::size_t tau)
{
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& [k, v] : t) {
        if (std::get<0>(k) == a && std::get<1>(k) == ResponseId::DR0 && std::get<3>(k) == tau) {
            sum += v.mean_hvd;
            ++n;
        }
    }
    return sum / static_cast<double>(n);
}

// 7. Ordinal findings on a scaled grid.
std::vector<std::pair<std::string, Outcome>> ordinal_findings()
{
    const std::vector<AlgorithmId> algs(all_algorithms().begin(), all_algorithms().end());
    const auto dmop1 = scaled_sweep(ProblemId::dMOP1, algs, {ResponseId::DR0});
    const auto dimp2 = scaled_sweep(ProblemId::DIMP2, algs, {ResponseId::DR0});
    const auto dmop2 = scaled_sweep(ProblemId::dMOP2, {AlgorithmId::NSGA2},
                                    {ResponseId::DR0, ResponseId::DR1, ResponseId::DR2, ResponseId::DR3});

    std::vector<std::pair<std::string, Outcome>> out;

    {
        Outcome a;
        double worst = 0.0;
        std::string where;
        std::size_t failing = 0;
        for (const auto& [k, v] : dmop1) {
            if (std::get<0>(k) != AlgorithmId::NSGA2 || std::get<3>(k) < 10) {
                continue;
            }
            const double ratio = v.mean_hvd / v.mean_opt;
            if (ratio > 0.05) {
                ++failing;
            }
            if (ratio > worst) {
                worst = ratio;
                where = "1/n_t=" + fmt("%g", std::get<2>(k)) + " tau_t=" + std::to_string(std::get<3>(k));
            }
        }
        a.pass = failing == 0;
        a.detail = "worst cell HVD/optimal " + fmt("%.4f", worst) + " at " + where + ", cells above 5%: " +
                   std::to_string(failing) + "/12";
        out.emplace_back("7a", a);
    }
    {
        Outcome b;
        const double dr0 = grid_average(dmop2, AlgorithmId::NSGA2, ResponseId::DR0);
        const double dr1 = grid_average(dmop2, AlgorithmId::NSGA2, ResponseId::DR1);
        const double dr2 = grid_average(dmop2, AlgorithmId::NSGA2, ResponseId::DR2);
        const double dr3 = grid_average(dmop2, AlgorithmId::NSGA2, ResponseId::DR3);
        b.pass = dr3 > dr0 && dr3 > dr1 && dr3 > dr2;
        b.detail = "DR0 " + fmt("%.4f", dr0) + ", DR1 " + fmt("%.4f", dr1) + ", DR2 " + fmt("%.4f", dr2) +
                   ", DR3 " + fmt("%.4f", dr3);
        out.emplace_back("7b", b);
    }
    {
        Outcome c;
        for (auto a : algs) {
            const double hard = grid_average(dimp2, a, ResponseId::DR0);
            const double easy = grid_average(dmop1, a, ResponseId::DR0);
            c.pass = c.pass && hard >= 5.0 * easy;
            c.detail += std::string(to_string(a)) + " " + fmt("%.3f", hard) + "/" + fmt("%.3f", easy) + "=" +
                        fmt("%.1fx", hard / easy) + " ";
        }
        c.detail = "DIMP2/dMOP1: " + c.detail;
        out.emplace_back("7c", c);
    }
    {
        Outcome d;
        for (auto a : algs) {
            const double t1 = tau_average(dmop1, a, 1);
            const double t30 = tau_average(dmop1, a, 30);
            d.pass = d.pass && t1 > t30;
            d.detail += std::string(to_string(a)) + " " + fmt("%.4f", t1) + ">" + fmt("%.4f", t30) + " ";
        }
        out.emplace_back("7d", d);
    }
    return out;
}

// 8. Static convergence of NSGA-II on dMOP1 at t = 0.
Outcome static_convergence()
{
    const auto prob = make_problem(ProblemId::dMOP1);
    std::vector<double> ratios;
    for (Seed seed = 1; seed <= 5; ++seed) {
        auto alg = make_algorithm(AlgorithmId::NSGA2, prob, 0.0, 100, {}, RandomSource(seed));
        for (int g = 0; g < 200; ++g) {
            alg->step(prob, 0.0);
        }
        const auto v = hvd(alg->front(), prob, 0.0, kDefaultReference, 100);
        ratios.push_back(v.hvd / v.optimal_hv);
    }
    std::sort(ratios.begin(), ratios.end());
    return {ratios[2] < 0.01, "median HVD/optimal " + fmt("%.5f", ratios[2])};
}

void report(const std::string& id, const Outcome& o, double seconds, bool& all)
{
    std::printf("CRITERION %-2s %s  %s  [%.1fs]\n", id.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
    std::fflush(stdout);
    all = all && o.pass;
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    auto wanted = [&](int c) { return selected.empty() || selected.contains(c); };

    const std::vector<std::pair<int, std::function<Outcome()>>> simple{
        {1, truth_generators}, {2, hypervolume_oracle}, {3, subset_oracle},
        {4, zero_case},        {5, enumeration_counts}, {6, determinism},
    };

    bool all = true;
    using clock = std::chrono::steady_clock;
    for (const auto& [num, fn] : simple) {
        if (!wanted(num)) {
            continue;
        }
        const auto start = clock::now();
        const auto o = fn();
        report(std::to_string(num), o, std::chrono::duration<double>(clock::now() - start).count(), all);
    }
    if (wanted(7)) {
        const auto start = clock::now();
        const auto parts = ordinal_findings();
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        for (const auto& [id, o] : parts) {
            report(id, o, secs, all);
        }
    }
    if (wanted(8)) {
        const auto start = clock::now();
        const auto o = static_convergence();
        report("8", o, std::chrono::duration<double>(clock::now() - start).count(), all);
    }
    std::printf("ACCEPTANCE %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

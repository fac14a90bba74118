#include <doctest.h>

#include <cmath>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "dmop/io.hpp"

using namespace dmop;

TEST_CASE("config parse and round-trip")
{
    const auto doc = nlohmann::json::parse(R"({
        "schema_version": 1,
        "problems": ["dMOP2"],
        "algorithms": ["NSGA-II", "SPEA2"],
        "responses": ["DR0", "DR3"],
        "severity_values": [0.1, 0.3],
        "frequency_values": [5, 10],
        "repeats": 2,
        "master_seed": 9,
        "variation": {"mutation_prob": "1/n"},
        "response": {"replace_fraction": 0.3}
    })");
    const auto a = parse_config(doc);
    CHECK(a.sweep.problems == std::vector{ProblemId::dMOP2});
    CHECK(a.sweep.frequencies == std::vector<std::size_t>{5, 10});
    CHECK(a.sweep.master_seed == 9);
    CHECK(a.sweep.response.replace_fraction == 0.3);
    CHECK(a.sweep.num_changes == 30);

    const auto m = materialize(a);
    const auto b = parse_config(m);
    CHECK(materialize(b) == m);
    CHECK(m["variation"]["mutation_prob"] == "1/n");

    auto bad = doc;
    bad["colour"] = "red";
    try {
        (void)parse_config(bad);
        FAIL("unknown key accepted");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
    auto bad2 = doc;
    bad2["repeats"] = "many";
    CHECK_THROWS_AS((void)parse_config(bad2), ConfigError);
    auto bad3 = doc;
    bad3["problems"] = {"FDA1"};
    CHECK_THROWS_AS((void)parse_config(bad3), ConfigError);
    auto bad4 = doc;
    bad4["schema_version"] = 7;
    CHECK_THROWS_AS((void)parse_config(bad4), ConfigError);
}

TEST_CASE("CSV round-trip is bitwise")
{
    std::vector<ResultRow> rows;
    for (int i = 0; i < 20; ++i) {
        ResultRow r;
        r.problem = "DIMP2";
        r.algorithm = "NSGA-III";
        r.response = "DR2";
        r.one_over_nt = 0.01 + 0.49 * i / 20.0;
        r.tau_t = static_cast<std::size_t>(i + 1);
        r.repeat = static_cast<std::size_t>(i % 5);
        r.seed = 0xFFFFFFFFFFFFFFF0ULL - static_cast<Seed>(i);
        r.interval_index = static_cast<std::size_t>(i);
        r.t = r.one_over_nt * i;
        r.achieved_hv = std::sqrt(2.0) / (i + 1);
        r.optimal_hv = 3.0 + 1.0 / 3.0;
        r.hvd = r.optimal_hv - r.achieved_hv;
        rows.push_back(r);
    }
    rows[3].hvd = 1e-310;
    const auto text = results_csv(rows, ResponseConfig{});
    CHECK(text.rfind("# schema_version=1", 0) == 0);
    CHECK(text.find(kResultsHeader) != std::string::npos);
    std::istringstream in(text);
    CHECK(read_results_csv(in) == rows);

    std::istringstream no_header("a,b\n1,2\n");
    CHECK_THROWS_AS((void)read_results_csv(no_header), DataError);
    std::istringstream short_row(std::string(kResultsHeader) + "\ndMOP1,NSGA-II,DR0,0.1\n");
    CHECK_THROWS_AS((void)read_results_csv(short_row), DataError);
    std::istringstream bad_num(std::string(kResultsHeader) + "\ndMOP1,NSGA-II,DR0,x,1,0,1,0,0,1,1,0\n");
    CHECK_THROWS_AS((void)read_results_csv(bad_num), DataError);
}

namespace {

std::vector<std::string> cell_fills(const std::string& svg)
{
    std::vector<std::string> fills;
    const std::regex re(R"re(<rect x="\d+" y="\d+" width="24" height="24" fill="(#[0-9a-f]{6})")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        fills.push_back((*it)[1]);
    }
    return fills;
}

} // namespace

TEST_CASE("heatmap SVG")
{
    HeatmapGrid zero{"dMOP1", "NSGA-II", "DR0", {1, 2, 3}, {0.1, 0.2}, std::vector<double>(6, 0.0)};
    const auto svg0 = write_heatmap_svg(zero);
    CHECK(svg0.find("HVD 0 \xE2\x80\x93 0") != std::string::npos);
    const auto f0 = cell_fills(svg0);
    REQUIRE(f0.size() == 6);
    for (const auto& f : f0) {
        CHECK(f == f0.front());
    }
    CHECK(write_heatmap_svg(zero) == svg0);

    HeatmapGrid two{"dMOP2", "MOEAD", "DR3", {1, 2}, {0.1, 0.2}, {0, 1, 2, 3}};
    const auto svg = write_heatmap_svg(two);
    CHECK(cell_fills(svg).size() == 4);
    double prev = -1.0;
    for (double v : two.values) {
        const double p = ramp_position(v, 0.0, 3.0);
        CHECK(p > prev);
        prev = p;
    }
    CHECK(svg.find("#fff7ec") != std::string::npos);
    CHECK(svg.find("#7f0000") != std::string::npos);

    HeatmapGrid holes{"HE1", "SPEA2", "DR1", {1, 2}, {0.1}, {0.5, std::numeric_limits<double>::quiet_NaN()}};
    CHECK(write_heatmap_svg(holes).find("#808080") != std::string::npos);

    HeatmapGrid ragged{"HE1", "SPEA2", "DR1", {1, 2}, {0.1}, {0.5}};
    CHECK_THROWS_AS((void)write_heatmap_svg(ragged), DataError);
    CHECK(heatmap_filename(two) == "heatmap_dMOP2_MOEAD_DR3.svg");
}

TEST_CASE("heatmaps from rows")
{
    std::vector<ResultRow> rows;
    for (std::size_t tau : {1u, 5u}) {
        for (double s : {0.5, 0.1}) {
            for (int rep = 0; rep < 2; ++rep) {
                ResultRow r;
                r.problem = "dMOP1";
                r.algorithm = "NSGA-II";
                r.response = "DR0";
                r.one_over_nt = s;
                r.tau_t = tau;
                r.hvd = static_cast<double>(tau) * s + rep;
                rows.push_back(r);
            }
        }
    }
    const auto grids = heatmaps_from_rows(rows);
    REQUIRE(grids.size() == 1);
    const auto& g = grids[0];
    CHECK(g.x_values == std::vector<double>{1, 5});
    CHECK(g.y_values == std::vector<double>{0.1, 0.5});
    CHECK(g.values[0] == doctest::Approx(0.1 + 0.5));
    CHECK(g.values[3] == doctest::Approx(2.5 + 0.5));

    ResultRow single;
    single.problem = "HE1";
    single.algorithm = "SPEA2";
    single.response = "DR1";
    single.one_over_nt = 0.2;
    single.tau_t = 3;
    single.hvd = 0.125;
    const auto one = heatmaps_from_rows({single});
    REQUIRE(one.size() == 1);
    CHECK(write_heatmap_svg(one[0]).find("HVD 0.125 \xE2\x80\x93 0.125") != std::string::npos);
}

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "dmop/io.hpp"

namespace dmop {

namespace {

struct Rgb {
    int r;
    int g;
    int b;
};

constexpr Rgb kLow{255, 247, 236};
constexpr Rgb kHigh{127, 0, 0};
constexpr const char* kNanColour = "#808080";

std::string hex(const Rgb& c)
{
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

Rgb ramp(double pos)
{
    auto mix = [pos](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * pos)); };
    return {mix(kLow.r, kHigh.r), mix(kLow.g, kHigh.g), mix(kLow.b, kHigh.b)};
}

std::string label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

double ramp_position(double value, double lo, double hi) noexcept
{
    if (!(hi > lo)) {
        return 0.0;
    }
    return std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
}

std::string heatmap_filename(const HeatmapGrid& grid)
{
    std::string name = "heatmap_" + grid.problem + "_" + grid.algorithm + "_" + grid.response + ".svg";
    for (char& c : name) {
        if (c == '/' || c == ' ') {
            c = '_';
        }
    }
    return name;
}

std::vector<HeatmapGrid> heatmaps_from_rows(const std::vector<ResultRow>& rows)
{
    using Panel = std::tuple<std::string, std::string, std::string>;
    std::vector<Panel> order;
    std::map<Panel, std::set<double>> xs;
    std::map<Panel, std::set<double>> ys;
    std::map<std::tuple<Panel, double, double>, std::pair<double, std::size_t>> sums;
    for (const auto& r : rows) {
        Panel p{r.problem, r.algorithm, r.response};
        if (!xs.contains(p)) {
            order.push_back(p);
        }
        const double x = static_cast<double>(r.tau_t);
        xs[p].insert(x);
        ys[p].insert(r.one_over_nt);
        auto& acc = sums[{p, r.one_over_nt, x}];
        acc.first += r.hvd;
        ++acc.second;
    }

    std::vector<HeatmapGrid> grids;
    for (const auto& p : order) {
        HeatmapGrid g;
        std::tie(g.problem, g.algorithm, g.response) = p;
        g.x_values.assign(xs[p].begin(), xs[p].end());
        g.y_values.assign(ys[p].begin(), ys[p].end());
        g.values.assign(g.x_values.size() * g.y_values.size(), std::numeric_limits<double>::quiet_NaN());
        for (std::size_t yi = 0; yi < g.y_values.size(); ++yi) {
            for (std::size_t xi = 0; xi < g.x_values.size(); ++xi) {
                auto it = sums.find({p, g.y_values[yi], g.x_values[xi]});
                if (it != sums.end()) {
                    g.values[yi * g.x_values.size() + xi] =
                        it->second.first / static_cast<double>(it->second.second);
                }
            }
        }
        grids.push_back(std::move(g));
    }
    return grids;
}

std::string write_heatmap_svg(const HeatmapGrid& grid)
{
    const std::size_t nx = grid.x_values.size();
    const std::size_t ny = grid.y_values.size();
    if (grid.values.size() != nx * ny) {
        throw DataError("heatmap: grid is not rectangular");
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool any_nan = false;
    for (double v : grid.values) {
        if (std::isnan(v)) {
            any_nan = true;
            continue;
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo > hi) {
        lo = hi = 0.0;
    }

    constexpr int kCell = 24;
    constexpr int kLeft = 70;
    constexpr int kTop = 40;
    constexpr int kLegendWidth = 20;
    const int plot_w = static_cast<int>(nx) * kCell;
    const int plot_h = static_cast<int>(ny) * kCell;
    const int legend_x = kLeft + plot_w + 30;
    const int width = legend_x + kLegendWidth + 120;
    const int height = kTop + std::max(plot_h, 120) + 60;
    const std::string title = grid.problem + " / " + grid.algorithm + " / " + grid.response;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<title>" << escape(title) << "</title>\n";
    os << "<desc>Mean HVD per cell. Colour map: linear RGB ramp from " << hex(kLow) << " (min) to " << hex(kHigh)
       << " (max); NaN cells " << kNanColour << ".</desc>\n";
    os << "<metadata>colormap=linear-rgb low=" << hex(kLow) << " high=" << hex(kHigh) << " nan=" << kNanColour
       << " min=" << format_real(lo) << " max=" << format_real(hi) << "</metadata>\n";
    os << "<text x=\"" << kLeft << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title)
       << "</text>\n";

    for (std::size_t yi = 0; yi < ny; ++yi) {
        // Smallest 1/n_t at the bottom.
        const int y = kTop + static_cast<int>(ny - 1 - yi) * kCell;
        for (std::size_t xi = 0; xi < nx; ++xi) {
            const double v = grid.values[yi * nx + xi];
            const std::string fill = std::isnan(v) ? kNanColour : hex(ramp(ramp_position(v, lo, hi)));
            os << "<rect x=\"" << kLeft + static_cast<int>(xi) * kCell << "\" y=\"" << y << "\" width=\"" << kCell
               << "\" height=\"" << kCell << "\" fill=\"" << fill << "\"><title>tau_t=" << label(grid.x_values[xi])
               << " 1/n_t=" << label(grid.y_values[yi]) << " hvd=" << (std::isnan(v) ? "NaN" : format_real(v))
               << "</title></rect>\n";
        }
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + kCell / 2 + 4
           << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << label(grid.y_values[yi])
           << "</text>\n";
    }
    for (std::size_t xi = 0; xi < nx; ++xi) {
        os << "<text x=\"" << kLeft + static_cast<int>(xi) * kCell + kCell / 2 << "\" y=\"" << kTop + plot_h + 14
           << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << label(grid.x_values[xi])
           << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kTop + plot_h + 32
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">tau_t</text>\n";
    os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" font-family=\"sans-serif\" font-size=\"12\" "
       << "text-anchor=\"middle\" transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">1/n_t</text>\n";

    // Legend: vertical gradient, max on top.
    os << "<defs><linearGradient id=\"ramp\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
       << "<stop offset=\"0\" stop-color=\"" << hex(kLow) << "\"/><stop offset=\"1\" stop-color=\"" << hex(kHigh)
       << "\"/></linearGradient></defs>\n";
    os << "<g id=\"legend\">\n";
    os << "<rect x=\"" << legend_x << "\" y=\"" << kTop << "\" width=\"" << kLegendWidth
       << "\" height=\"100\" fill=\"url(#ramp)\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    os << "<text x=\"" << legend_x + kLegendWidth + 4 << "\" y=\"" << kTop + 8
       << "\" font-family=\"sans-serif\" font-size=\"10\">" << label(hi) << "</text>\n";
    os << "<text x=\"" << legend_x + kLegendWidth + 4 << "\" y=\"" << kTop + 100
       << "\" font-family=\"sans-serif\" font-size=\"10\">" << label(lo) << "</text>\n";
    os << "<text x=\"" << legend_x << "\" y=\"" << kTop + 116 << "\" font-family=\"sans-serif\" font-size=\"10\">HVD "
       << label(lo) << " \xE2\x80\x93 " << label(hi) << "</text>\n";
    if (any_nan) {
        os << "<rect x=\"" << legend_x << "\" y=\"" << kTop + 124 << "\" width=\"10\" height=\"10\" fill=\""
           << kNanColour << "\"/>\n";
        os << "<text x=\"" << legend_x + 14 << "\" y=\"" << kTop + 133
           << "\" font-family=\"sans-serif\" font-size=\"10\">NaN / missing</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace dmop

#include "starprism/plot.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "starprism/errors.hpp"

namespace starprism {

namespace {

using Series = std::map<int, std::vector<std::pair<int, long long>>>;  // m -> (n, rn)

// Split records into per-parity series sorted by (m, n).
std::pair<Series, Series> collect_series(std::span<const SweepRecord> records) {
    Series even;
    Series odd;
    for (const SweepRecord& r : records) {
        (r.parity == Parity::even ? even : odd)[r.m].emplace_back(r.n, r.formula_rn);
    }
    for (Series* s : {&even, &odd}) {
        for (auto& [m, points] : *s) {
            std::sort(points.begin(), points.end());
        }
    }
    return {std::move(even), std::move(odd)};
}

const char* kPalette[] = {"#1b6ca8", "#d1495b", "#2e933c", "#8d5a97",
                          "#e08f2c", "#3d405b", "#7f9172", "#aa4465"};

void draw_panel(std::ostringstream& out, const Series& series, const std::string& title,
                double x0, double y0, double width, double height) {
    out << "<text x=\"" << x0 + width / 2 << "\" y=\"" << y0 - 14
        << "\" text-anchor=\"middle\" font-size=\"15\" font-weight=\"bold\">" << title
        << "</text>\n";
    out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << width
        << "\" height=\"" << height << "\" fill=\"none\" stroke=\"#444\"/>\n";
    if (series.empty()) {
        out << "<text x=\"" << x0 + width / 2 << "\" y=\"" << y0 + height / 2
            << "\" text-anchor=\"middle\" font-size=\"12\" fill=\"#777\">no data</text>\n";
        return;
    }

    int n_min = 1 << 30, n_max = -(1 << 30);
    long long rn_max = 0;
    for (const auto& [m, points] : series) {
        for (auto [n, rn] : points) {
            n_min = std::min(n_min, n);
            n_max = std::max(n_max, n);
            rn_max = std::max(rn_max, rn);
        }
    }
    const double x_span = n_max > n_min ? n_max - n_min : 1.0;
    const double y_span = rn_max > 0 ? static_cast<double>(rn_max) : 1.0;
    auto px = [&](int n) { return x0 + (n - n_min) / x_span * width; };
    auto py = [&](long long rn) { return y0 + height - rn / y_span * height; };

    // axis ticks
    for (int n = n_min; n <= n_max; ++n) {
        out << "<line x1=\"" << px(n) << "\" y1=\"" << y0 + height << "\" x2=\"" << px(n)
            << "\" y2=\"" << y0 + height + 4 << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << px(n) << "\" y=\"" << y0 + height + 16
            << "\" text-anchor=\"middle\" font-size=\"10\">" << n << "</text>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        const long long rn = rn_max * t / 4;
        out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py(rn) << "\" x2=\"" << x0
            << "\" y2=\"" << py(rn) << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << x0 - 7 << "\" y=\"" << py(rn) + 3
            << "\" text-anchor=\"end\" font-size=\"10\">" << rn << "</text>\n";
    }
    out << "<text x=\"" << x0 + width / 2 << "\" y=\"" << y0 + height + 32
        << "\" text-anchor=\"middle\" font-size=\"11\">n</text>\n";

    size_t color = 0;
    double legend_y = y0 + 12;
    for (const auto& [m, points] : series) {
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
        ++color;
        out << "<polyline fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.8\" points=\"";
        for (auto [n, rn] : points) {
            out << px(n) << ',' << py(rn) << ' ';
        }
        out << "\"/>\n";
        for (auto [n, rn] : points) {
            out << "<circle cx=\"" << px(n) << "\" cy=\"" << py(rn)
                << "\" r=\"2.4\" fill=\"" << stroke << "\"/>\n";
        }
        out << "<line x1=\"" << x0 + 8 << "\" y1=\"" << legend_y << "\" x2=\"" << x0 + 26
            << "\" y2=\"" << legend_y << "\" stroke=\"" << stroke
            << "\" stroke-width=\"1.8\"/>\n";
        out << "<text x=\"" << x0 + 30 << "\" y=\"" << legend_y + 3
            << "\" font-size=\"10\">m = " << m << "</text>\n";
        legend_y += 13;
    }
}

} // namespace

std::string plot_tidy_csv(std::span<const SweepRecord> records) {
    auto [even, odd] = collect_series(records);
    std::ostringstream out;
    out << "parity,m,n,formula_rn\n";
    for (const auto* series : {&even, &odd}) {
        const char* parity = series == &even ? "even" : "odd";
        for (const auto& [m, points] : *series) {
            for (auto [n, rn] : points) {
                out << parity << ',' << m << ',' << n << ',' << rn << '\n';
            }
        }
    }
    return out.str();
}

std::string plot_svg(std::span<const SweepRecord> records) {
    if (records.empty()) {
        throw UsageError("nothing to plot: sweep data is empty");
    }
    auto [even, odd] = collect_series(records);

    const double panel_w = 330;
    const double panel_h = 300;
    const double margin = 60;
    const double total_w = 2 * panel_w + 3 * margin;
    const double total_h = panel_h + 2 * margin + 20;

    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
        << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << ' ' << total_h
        << "\" font-family=\"sans-serif\">\n";
    out << "<rect width=\"" << total_w << "\" height=\"" << total_h
        << "\" fill=\"white\"/>\n";
    draw_panel(out, even, "even m", margin, margin, panel_w, panel_h);
    draw_panel(out, odd, "odd m", 2 * margin + panel_w, margin, panel_w, panel_h);
    out << "<text x=\"" << total_w / 2 << "\" y=\"" << total_h - 8
        << "\" text-anchor=\"middle\" font-size=\"12\">closed-form radio number vs (n, m)"
           "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace starprism

#pragma once

// Minimal SVG rendering of sweep records: average age against network size,
// one series per (placement, model, engine) combination, log-log axes. The
// plot is a view of CSV rows and performs no age computation of its own.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ringage/sweep.hpp"

namespace ringage {

namespace detail {

inline std::string fmt_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

inline const char* placement_color(StrategyKind k) {
    switch (k) {
        case StrategyKind::Equidistant: return "#1f77b4";
        case StrategyKind::Random: return "#2ca02c";
        case StrategyKind::Adjacent: return "#d62728";
    }
    return "#000000";
}

}  // namespace detail

inline void write_scaling_plot_svg(const std::string& path,
                                   const std::vector<ScalingRecord>& records,
                                   const std::string& title) {
    if (records.empty()) throw std::invalid_argument("write_scaling_plot_svg: no records");

    using SeriesKey = std::tuple<StrategyKind, Model, Engine>;
    std::map<SeriesKey, std::vector<std::pair<double, double>>> series;
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& r : records) {
        if (r.n < 1 || !(r.system_age > 0.0)) continue;  // log axes
        double x = std::log2(static_cast<double>(r.n));
        double y = std::log10(r.system_age);
        series[{r.placement, r.model, r.engine}].emplace_back(x, y);
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    if (series.empty()) throw std::invalid_argument("write_scaling_plot_svg: no plottable points");
    if (max_x - min_x < 1e-9) {
        min_x -= 0.5;
        max_x += 0.5;
    }
    if (max_y - min_y < 1e-9) {
        min_y -= 0.5;
        max_y += 0.5;
    }

    const double width = 860, height = 540;
    const double ml = 70, mr = 20, mt = 40, mb = 55;
    auto sx = [&](double x) { return ml + (x - min_x) / (max_x - min_x) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - min_y) / (max_y - min_y) * (height - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << height - mb
        << "\" stroke=\"black\"/>\n";

    // x ticks at integer powers of two
    for (int e = static_cast<int>(std::ceil(min_x)); e <= static_cast<int>(std::floor(max_x)); ++e) {
        double px = sx(e);
        out << "<line x1=\"" << px << "\" y1=\"" << height - mb << "\" x2=\"" << px << "\" y2=\""
            << height - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << height - mb + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::fmt_num(std::pow(2.0, e)) << "</text>\n";
    }
    // y ticks at integer powers of ten, with halves when the span is short
    double ystep = (max_y - min_y > 2.0) ? 1.0 : 0.5;
    for (double yv = std::ceil(min_y / ystep) * ystep; yv <= max_y + 1e-12; yv += ystep) {
        double py = sy(yv);
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py << "\" x2=\"" << ml << "\" y2=\"" << py
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::fmt_num(std::pow(10.0, yv)) << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">network size n"
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 16 " << (mt + height - mb) / 2 << ")\">average version age</text>\n";

    double legend_y = mt + 8;
    for (auto& [key, pts] : series) {
        auto [placement, model, engine] = key;
        std::sort(pts.begin(), pts.end());
        const char* color = detail::placement_color(placement);
        const char* dash = model == Model::Miniring ? "6,4" : "";
        std::string poly;
        for (auto& [x, y] : pts)
            poly += detail::fmt_num(sx(x)) + "," + detail::fmt_num(sy(y)) + " ";
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
        if (*dash) out << " stroke-dasharray=\"" << dash << "\"";
        out << " points=\"" << poly << "\"/>\n";
        for (auto& [x, y] : pts) {
            if (engine == Engine::Simulate)
                out << "<rect x=\"" << sx(x) - 3 << "\" y=\"" << sy(y) - 3
                    << "\" width=\"6\" height=\"6\" fill=\"" << color << "\"/>\n";
            else
                out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\""
                    << color << "\"/>\n";
        }
        std::string label = std::string(to_string(placement)) + " / " + to_string(model) + " / " +
                            to_string(engine);
        out << "<line x1=\"" << ml + 12 << "\" y1=\"" << legend_y << "\" x2=\"" << ml + 42
            << "\" y2=\"" << legend_y << "\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
        if (*dash) out << " stroke-dasharray=\"" << dash << "\"";
        out << "/>\n";
        out << "<text x=\"" << ml + 48 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << label << "</text>\n";
        legend_y += 16;
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ringage

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gme/sweep.hpp"

namespace gme {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginL = 80.0;
constexpr double kMarginR = 24.0;
constexpr double kMarginT = 40.0;
constexpr double kMarginB = 56.0;

struct Series {
    const char* label;
    const char* color;
    std::vector<std::pair<double, double>> pts;
};

const char* color_for(ModelKind k) {
    switch (k) {
        case ModelKind::ModelI: return "#c0392b";
        case ModelKind::ModelII: return "#2a6fb0";
        case ModelKind::StaticLimit: return "#7f8c8d";
    }
    return "#000000";
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct Axis {
    bool log = false;
    double lo = 0.0, hi = 1.0;  // in plot scale (log10 when log)

    double to_px(double v, double px0, double px1) const {
        const double t = (value(v) - lo) / (hi - lo);
        return px0 + t * (px1 - px0);
    }
    double value(double v) const { return log ? std::log10(v) : v; }
};

Axis make_axis(bool log, double vmin, double vmax) {
    Axis a;
    a.log = log;
    a.lo = log ? std::log10(vmin) : vmin;
    a.hi = log ? std::log10(vmax) : vmax;
    if (!(a.hi > a.lo)) {
        a.lo -= 0.5;
        a.hi += 0.5;
    }
    return a;
}

void axis_ticks(const Axis& a, std::vector<std::pair<double, std::string>>& out) {
    if (a.log) {
        const int d0 = static_cast<int>(std::ceil(a.lo - 1e-9));
        const int d1 = static_cast<int>(std::floor(a.hi + 1e-9));
        int step = 1;
        if (d1 - d0 > 10) step = (d1 - d0 + 9) / 10;
        char buf[32];
        for (int d = d0; d <= d1; d += step) {
            std::snprintf(buf, sizeof(buf), "1e%d", d);
            out.emplace_back(static_cast<double>(d), buf);
        }
    } else {
        const int n = 5;
        for (int i = 0; i <= n; ++i) {
            const double v = a.lo + (a.hi - a.lo) * i / n;
            out.emplace_back(v, fmt_tick(v));
        }
    }
}

}  // namespace

std::string emit_svg(const std::vector<SweepRow>& rows, PlotKind kind) {
    if (rows.size() < 2)
        throw ConfigError("emit_svg: need at least two rows to plot");

    const bool log_axes = kind != PlotKind::NegativityVsPhaseSum;
    const char* title = kind == PlotKind::PhaseVsMass
                            ? "accumulated phase vs mass"
                            : (kind == PlotKind::NegativityVsMass
                                   ? "logarithmic negativity vs mass"
                                   : "logarithmic negativity vs phase sum");
    const char* xlabel =
        kind == PlotKind::NegativityVsPhaseSum ? "phase sum [rad]" : "mass [kg]";
    const char* ylabel = kind == PlotKind::PhaseVsMass
                             ? "|phase sum| [rad]"
                             : "log-negativity [bits]";

    // One series per model, in declaration order.
    std::vector<Series> series;
    for (ModelKind k :
         {ModelKind::ModelI, ModelKind::ModelII, ModelKind::StaticLimit}) {
        Series s{model_name(k), color_for(k), {}};
        for (const SweepRow& r : rows) {
            if (r.model != k) continue;
            double x = kind == PlotKind::NegativityVsPhaseSum ? r.phase_sum
                                                              : r.mass_kg;
            double y = kind == PlotKind::PhaseVsMass ? std::abs(r.phase_sum)
                                                     : r.log_negativity;
            if (log_axes && (!(x > 0.0) || !(y > 0.0))) continue;
            s.pts.emplace_back(x, y);
        }
        if (!s.pts.empty()) series.push_back(std::move(s));
    }
    if (series.empty())
        throw ConfigError("emit_svg: no plottable points for this plot kind");

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const Series& s : series)
        for (auto [x, y] : s.pts) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!log_axes) {
        const double pad = 0.05 * std::max(ymax - ymin, 1e-12);
        ymin -= pad;
        ymax += pad;
    }

    const Axis ax = make_axis(log_axes, xmin, xmax);
    const Axis ay = make_axis(log_axes, ymin, ymax);
    const double px0 = kMarginL, px1 = kWidth - kMarginR;
    const double py0 = kHeight - kMarginB, py1 = kMarginT;  // y grows upward

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(kWidth) + "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " +
           fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + fmt(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" +
           title + "</text>\n";

    // frame
    svg += "<rect x=\"" + fmt(px0) + "\" y=\"" + fmt(py1) + "\" width=\"" +
           fmt(px1 - px0) + "\" height=\"" + fmt(py0 - py1) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    std::vector<std::pair<double, std::string>> ticks;
    axis_ticks(ax, ticks);
    for (auto& [v, label] : ticks) {
        const double t = (v - ax.lo) / (ax.hi - ax.lo);
        if (t < -1e-9 || t > 1.0 + 1e-9) continue;
        const double x = px0 + t * (px1 - px0);
        svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(py0) + "\" x2=\"" +
               fmt(x) + "\" y2=\"" + fmt(py0 + 5) +
               "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(py0 + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               label + "</text>\n";
    }
    ticks.clear();
    axis_ticks(ay, ticks);
    for (auto& [v, label] : ticks) {
        const double t = (v - ay.lo) / (ay.hi - ay.lo);
        if (t < -1e-9 || t > 1.0 + 1e-9) continue;
        const double y = py0 + t * (py1 - py0);
        svg += "<line x1=\"" + fmt(px0 - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(px0) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(px0 - 8) + "\" y=\"" + fmt(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               label + "</text>\n";
    }

    svg += "<text x=\"" + fmt((px0 + px1) / 2) + "\" y=\"" +
           fmt(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">" +
           xlabel + "</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt((py0 + py1) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 20 " +
           fmt((py0 + py1) / 2) + ")\">" + ylabel + "</text>\n";

    double legend_y = py1 + 16;
    for (const Series& s : series) {
        std::string pts;
        for (auto [x, y] : s.pts) {
            if (!pts.empty()) pts += ' ';
            pts += fmt(ax.to_px(x, px0, px1)) + "," + fmt(ay.to_px(y, py0, py1));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(s.color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        svg += "<line x1=\"" + fmt(px1 - 110) + "\" y1=\"" + fmt(legend_y) +
               "\" x2=\"" + fmt(px1 - 86) + "\" y2=\"" + fmt(legend_y) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(px1 - 80) + "\" y=\"" + fmt(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">model " +
               s.label + "</text>\n";
        legend_y += 16;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace gme

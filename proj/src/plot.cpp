#include "lingomotion/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "lingomotion/error.hpp"
#include "lingomotion/io.hpp"

namespace lingomotion {

namespace {

std::string fixed2(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    (void)ec;
    return std::string(buf, ptr);
}

constexpr double kWidth = 960, kHeight = 320;
constexpr double kMarginL = 56, kMarginR = 16, kMarginT = 28, kMarginB = 32;

}  // namespace

void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<PlotSeries>& series, const std::vector<std::size_t>& boundaries) {
    if (series.empty() || series[0].values.size() < 2) throw Error("plot", "nothing to plot");
    const std::size_t n = series[0].values.size();
    for (const PlotSeries& s : series)
        if (s.values.size() != n) throw Error("plot", "series lengths differ");

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const PlotSeries& s : series)
        for (double v : s.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (hi - lo < 1e-9) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    auto sx = [&](double frame) { return kMarginL + plot_w * frame / static_cast<double>(n - 1); };
    auto sy = [&](double v) { return kMarginT + plot_h * (hi - v) / (hi - lo); };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kMarginL << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">" << title
        << "</text>\n";

    // axes and value labels
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\"" << kMarginL << "\" y2=\""
        << kMarginT + plot_h << "\" stroke=\"#333\"/>\n";
    out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT + plot_h << "\" x2=\"" << kMarginL + plot_w
        << "\" y2=\"" << kMarginT + plot_h << "\" stroke=\"#333\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = lo + (hi - lo) * k / 4.0;
        out << "<text x=\"4\" y=\"" << fixed2(sy(v) + 4) << "\" font-family=\"sans-serif\" font-size=\"10\">"
            << fixed2(v) << "</text>\n";
    }
    out << "<text x=\"" << kMarginL + plot_w - 40 << "\" y=\"" << kHeight - 8
        << "\" font-family=\"sans-serif\" font-size=\"10\">frame</text>\n";

    for (std::size_t b : boundaries) {
        if (b >= n) continue;
        out << "<line x1=\"" << fixed2(sx(static_cast<double>(b))) << "\" y1=\"" << kMarginT << "\" x2=\""
            << fixed2(sx(static_cast<double>(b))) << "\" y2=\"" << kMarginT + plot_h
            << "\" stroke=\"#bbb\" stroke-dasharray=\"2,3\"/>\n";
    }

    double legend_x = kMarginL + 8;
    for (const PlotSeries& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\"";
        if (s.dashed) out << " stroke-dasharray=\"5,3\"";
        out << " stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out << " ";
            out << fixed2(sx(static_cast<double>(i))) << "," << fixed2(sy(s.values[i]));
        }
        out << "\"/>\n";
        out << "<text x=\"" << fixed2(legend_x) << "\" y=\"" << kMarginT + 12
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << s.color << "\">" << s.label
            << "</text>\n";
        legend_x += 10.0 * static_cast<double>(s.label.size()) + 24.0;
    }
    out << "</svg>\n";
    if (!out) throw Error("io", "write failed for " + path);
}

void write_plot_csv(const std::string& path, const std::vector<PlotSeries>& series) {
    if (series.empty()) throw Error("plot", "nothing to write");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << "frame";
    for (const PlotSeries& s : series) out << "," << s.label;
    out << "\n";
    for (std::size_t i = 0; i < series[0].values.size(); ++i) {
        out << i;
        for (const PlotSeries& s : series) out << "," << format_double(s.values[i]);
        out << "\n";
    }
    if (!out) throw Error("io", "write failed for " + path);
}

}  // namespace lingomotion

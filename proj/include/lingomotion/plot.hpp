#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingomotion/segmenter.hpp"

namespace lingomotion {

struct PlotSeries {
    std::string label;
    std::vector<double> values;
    std::string color = "#1f77b4";
    bool dashed = false;
};

// Static SVG line chart: one or two series over the frame axis, optional
// vertical boundary markers.
void write_svg_chart(const std::string& path, const std::string& title,
                     const std::vector<PlotSeries>& series, const std::vector<std::size_t>& boundaries);

// Companion CSV: frame, one column per series.
void write_plot_csv(const std::string& path, const std::vector<PlotSeries>& series);

}  // namespace lingomotion

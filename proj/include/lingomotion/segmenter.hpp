#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lingomotion {

// A maximal monotone slice of one channel. Consecutive segments share their
// boundary frame: next.start == prev.end.
struct Segment {
    std::string channel;
    std::size_t start = 0;
    std::size_t end = 0;  // inclusive
    std::vector<double> samples;

    std::size_t length() const { return end - start + 1; }
};

struct SegmentationParams {
    std::size_t smooth_window = 5;  // odd; 1 = no smoothing
    double min_prominence = 1.0;    // degrees
    std::size_t min_length = 3;     // frames

    void validate() const;
};

enum class ExtremumKind { minimum, maximum };

struct Extremum {
    std::size_t frame = 0;
    ExtremumKind kind = ExtremumKind::maximum;
    double prominence = 0.0;
};

// Centered moving average with truncated windows at the edges.
std::vector<double> smooth_signal(const std::vector<double>& signal, std::size_t window);

// Interior extrema of the smoothed signal that survive prominence filtering
// and minimum-length merging; kinds alternate.
std::vector<Extremum> find_extrema(const std::vector<double>& signal, const SegmentationParams& params);

// Splits the raw signal at the surviving extrema. Segments carry raw samples
// and jointly cover every frame, sharing boundary frames.
std::vector<Segment> segment_channel(const std::vector<double>& signal, const SegmentationParams& params,
                                     const std::string& channel_name = {});

}  // namespace lingomotion

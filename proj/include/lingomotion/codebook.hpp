#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lingomotion/parallel.hpp"
#include "lingomotion/segmenter.hpp"

namespace lingomotion {

// Fixed-length unit-amplitude shape of a segment plus the attributes needed
// to reconstruct the original samples: scale (amplitude), bias (minimum) and
// length (frame count).
struct NormalizedShape {
    std::vector<double> values;  // L samples in [0, 1]; flat sources = all 0.5
    double scale = 0.0;          // degrees; 0 marks a flat source
    double bias = 0.0;           // degrees
    std::size_t length = 0;      // original frame count
};

struct CodebookTraining {
    std::size_t n_segments = 0;
    std::uint64_t seed = 0;
    double inertia = 0.0;

    bool operator==(const CodebookTraining&) const = default;
};

struct Codebook {
    std::string channel;
    std::size_t L = 0;
    std::vector<std::vector<double>> centroids;  // K x L
    CodebookTraining training;

    std::size_t K() const { return centroids.size(); }
    bool operator==(const Codebook&) const = default;
};

struct LearnOutcome {
    Codebook codebook;
    // inertia after every Lloyd iteration of the selected K's run
    std::vector<double> inertia_trace;
    std::vector<std::string> warnings;
};

// Linear interpolation of `samples` at `count` equispaced parameter points
// over the sample range. Identity when count == samples.size().
std::vector<double> resample_linear(const std::vector<double>& samples, std::size_t count);

NormalizedShape normalize_segment(const Segment& seg, std::size_t L);

// Scale/bias applied back; resampled to the requested length.
std::vector<double> denormalize(const std::vector<double>& shape, double scale, double bias,
                                std::size_t length);

struct KMeansResult {
    std::vector<std::vector<double>> centroids;
    std::vector<std::size_t> assignment;
    double inertia = 0.0;
    std::vector<double> inertia_trace;
};

// Lloyd iterations with greedy farthest-point seeding. Deterministic for a
// given input order and seed; independent of the parallel schedule (per-point
// distances are reduced in index order).
KMeansResult kmeans(const std::vector<NormalizedShape>& shapes, std::size_t k, std::uint64_t seed,
                    RunPolicy policy = RunPolicy::parallel);

// Runs k-means for each K in [k_min, k_max], keeps the K with the best mean
// silhouette on a capped subsample. Flat shapes are excluded from training.
LearnOutcome learn_codebook(const std::vector<NormalizedShape>& shapes, const std::string& channel,
                            std::size_t k_min, std::size_t k_max, std::uint64_t seed,
                            RunPolicy policy = RunPolicy::parallel);

// Nearest centroid by Euclidean distance; ties resolve to the lowest index.
std::pair<std::size_t, double> assign_letter(const NormalizedShape& shape, const Codebook& cb);

}  // namespace lingomotion

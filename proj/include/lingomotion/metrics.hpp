#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lingomotion/codec.hpp"
#include "lingomotion/skeleton.hpp"
#include "lingomotion/types.hpp"

namespace lingomotion {

// rmse = sqrt(mean squared residual); nmse = SSres / SStot about the
// reference mean; r2 = 1 - nmse. A zero-variance reference flags the score
// degenerate (rmse still valid).
ChannelScore score(std::span<const double> reference, std::span<const double> reconstruction);

// Streaming residual pool so per-channel and aggregate scores share one code
// path; merge order is fixed by the caller.
struct ResidualPool {
    double ss_res = 0.0;
    double sum_ref = 0.0;
    double sum_ref_sq = 0.0;
    std::size_t count = 0;

    void add(double ref, double rec) {
        const double d = ref - rec;
        ss_res += d * d;
        sum_ref += ref;
        sum_ref_sq += ref * ref;
        ++count;
    }
    void merge(const ResidualPool& o) {
        ss_res += o.ss_res;
        sum_ref += o.sum_ref;
        sum_ref_sq += o.sum_ref_sq;
        count += o.count;
    }
    double ss_tot() const {
        if (count == 0) return 0.0;
        return sum_ref_sq - sum_ref * sum_ref / static_cast<double>(count);
    }
    ChannelScore finish() const;
};

// Seeded shuffle split by sequence; |train| = round(fraction * N).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_corpus(std::size_t n,
                                                                           const SplitSpec& spec);

struct PipelineOptions {
    SegmentationParams segmentation;
    std::size_t L = 32;
    std::size_t k_min = 8;
    std::size_t k_max = 24;
    std::uint64_t seed = 7;
};

struct EvalOutcome {
    EvalReport report;
    CodebookSet codebooks;
    std::vector<std::string> warnings;
};

// Full protocol: convert the corpus to angles, learn per-channel codebooks on
// the train split, encode/decode the test split, score per channel and
// pooled; also measures the positions -> angles -> positions round trip over
// the whole corpus.
EvalOutcome evaluate_pipeline(const std::vector<MotionSequence>& corpus, const SkeletonDef& sk,
                              const PipelineOptions& options, const SplitSpec& split,
                              RunPolicy policy = RunPolicy::parallel);

// Codebooks for every channel of the given angle sequences.
CodebookSet learn_codebooks(const std::vector<AngleSequence>& train, const SkeletonDef& sk,
                            const PipelineOptions& options, std::vector<std::string>* warnings = nullptr,
                            std::vector<std::vector<double>>* inertia_traces = nullptr,
                            RunPolicy policy = RunPolicy::parallel);

}  // namespace lingomotion

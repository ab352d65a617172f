#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lingomotion/codebook.hpp"
#include "lingomotion/segmenter.hpp"
#include "lingomotion/skeleton.hpp"
#include "lingomotion/types.hpp"

namespace lingomotion {

// The hold letter marks flat segments (scale exactly 0).
inline constexpr std::int64_t kHoldLetter = -1;

struct LetterToken {
    std::string channel;
    std::int64_t s = 0;       // shape index, kHoldLetter for flats
    double scale = 0.0;       // degrees, >= 0
    double bias = 0.0;        // degrees
    std::size_t length = 0;   // frames, >= 2
    std::size_t start = 0;    // frame index

    bool operator==(const LetterToken&) const = default;
};

// Per-channel token streams tiling frames 0..T-1; consecutive tokens share a
// boundary frame. The root track travels uncompressed.
struct EncodedMotion {
    double fps = 0.0;
    std::size_t frames = 0;
    std::string skeleton_name;
    RootTrack root;
    std::vector<std::pair<std::string, std::vector<LetterToken>>> streams;

    const std::vector<LetterToken>* find_stream(const std::string& channel) const {
        for (const auto& [name, tokens] : streams)
            if (name == channel) return &tokens;
        return nullptr;
    }

    bool operator==(const EncodedMotion&) const = default;
};

using CodebookSet = std::map<std::string, Codebook>;

// Checks the tiling invariant (sum of (length - 1) + 1 == frames, shared
// boundary frames, ascending starts) and the hold rule (s == -1 iff scale == 0).
void validate_encoding(const EncodedMotion& e, const CodebookSet* cbs = nullptr);

EncodedMotion encode(const AngleSequence& a, const CodebookSet& cbs, const SegmentationParams& params,
                     RunPolicy policy = RunPolicy::parallel);

AngleSequence decode(const EncodedMotion& e, const CodebookSet& cbs,
                     RunPolicy policy = RunPolicy::parallel);

MotionSequence decode_to_positions(const EncodedMotion& e, const CodebookSet& cbs, const SkeletonDef& sk,
                                   RunPolicy policy = RunPolicy::parallel);

}  // namespace lingomotion

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lingomotion/codec.hpp"
#include "lingomotion/parallel.hpp"

namespace lingomotion {

enum class WordRelation { simultaneous, sequential };

struct WordMember {
    std::string channel;
    std::int64_t shape = 0;

    auto operator<=>(const WordMember&) const = default;
};

struct WordCandidate {
    std::vector<WordMember> members;  // 2 or 3, sorted
    WordRelation relation = WordRelation::simultaneous;
    std::size_t gap_frames = 0;  // sequential relation only
    // smallest per-member count of distinct participating tokens; monotone
    // under member-set extension by construction
    std::size_t support = 0;
    double coverage = 0.0;  // fraction of corpus frames inside an occurrence
    // attribute statistics over all participating tokens
    double mean_scale = 0.0;
    double std_scale = 0.0;
    double mean_length = 0.0;
    double std_length = 0.0;
};

// Frequent simultaneous pairs and triples of letters across channels. Two
// tokens are simultaneous when their frame intervals overlap by at least
// overlap_threshold of the shorter one. Hold letters are ignored. Candidates
// are ordered by support (descending), then lexicographically.
std::vector<WordCandidate> mine_words(const std::vector<EncodedMotion>& corpus,
                                      double overlap_threshold, std::size_t min_support,
                                      RunPolicy policy = RunPolicy::parallel);

}  // namespace lingomotion

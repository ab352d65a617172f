#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lingomotion/skeleton.hpp"
#include "lingomotion/types.hpp"

namespace lingomotion {

struct Harmonic {
    double cycles = 1.0;      // multiples of the base period
    double amplitude = 0.0;   // degrees
    double phase_deg = 0.0;
};

struct ChannelWave {
    double offset = 0.0;  // degrees
    std::vector<Harmonic> harmonics;  // at most 3
};

struct JitterSpec {
    double amplitude_frac = 0.0;  // per-channel amplitude scaling, uniform +-
    double phase_deg = 0.0;       // global phase shift, uniform +-
    double period_frac = 0.0;     // global period scaling, uniform +-
};

struct GaitTemplate {
    std::string name;
    double fps = 30.0;
    double duration_s = 5.0;
    double period_s = 1.2;
    double root_speed_mps = 0.0;  // forward travel along +z
    double root_height_m = 0.95;
    double root_bob_m = 0.0;      // vertical bob, one cycle per period
    double noise_deg = 0.0;       // sample noise, standard deviation
    std::uint64_t seed = 1;
    JitterSpec jitter;
    std::map<std::string, ChannelWave> channels;  // absent channels stay at 0
};

// Checks waveform bounds against the channel ranges (with allowance for
// jitter and noise); throws on violation.
void validate_template(const GaitTemplate& tpl, const SkeletonDef& sk);

// Deterministic corpus: per-sequence jitter drawn from (template.seed,
// variation_seed, index), waveforms sampled per channel, rendered to
// positions through forward kinematics.
std::vector<MotionSequence> generate(const GaitTemplate& tpl, const SkeletonDef& sk,
                                     std::size_t n_sequences, std::uint64_t variation_seed);

// Angle-domain variant of generate(); the canonical-subspace signals before
// rendering.
std::vector<AngleSequence> generate_angles(const GaitTemplate& tpl, const SkeletonDef& sk,
                                           std::size_t n_sequences, std::uint64_t variation_seed);

// walk, walk_fast, jump, idle
GaitTemplate builtin_template(const std::string& name);
std::vector<std::string> builtin_template_names();

GaitTemplate load_template(const std::string& path);
void save_template(const GaitTemplate& tpl, const std::string& path);

}  // namespace lingomotion

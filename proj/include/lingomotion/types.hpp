#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lingomotion {

using Vec3 = std::array<double, 3>;

inline constexpr const char* kSchemaVersion = "lingomotion/1";

// Global pelvis trajectory: translation in meters, orientation as Euler
// angles in degrees decomposed in the skeleton's declared order. Channels
// deliberately discard this information; the root track keeps positions
// reconstructible.
struct RootTrack {
    std::vector<Vec3> translation;
    std::vector<Vec3> orientation;

    bool operator==(const RootTrack&) const = default;
};

struct MotionSequence {
    double fps = 0.0;
    std::size_t frames = 0;
    std::vector<std::string> joint_names;
    std::string skeleton_name;
    // frame-major, positions[t * J + j], meters, global frame
    std::vector<Vec3> positions;

    std::size_t joint_count() const { return joint_names.size(); }
    const Vec3& at(std::size_t t, std::size_t j) const { return positions[t * joint_names.size() + j]; }
    Vec3& at(std::size_t t, std::size_t j) { return positions[t * joint_names.size() + j]; }

    bool operator==(const MotionSequence&) const = default;
};

struct AngleSequence {
    double fps = 0.0;
    std::size_t frames = 0;
    std::string skeleton_name;
    std::vector<std::string> channels;
    // frame-major, values[t * C + c], degrees
    std::vector<double> values;
    RootTrack root;
    // out-of-range notes collected during conversion; informational only,
    // not serialized and not part of equality
    std::vector<std::string> warnings;

    std::size_t channel_count() const { return channels.size(); }
    double at(std::size_t t, std::size_t c) const { return values[t * channels.size() + c]; }
    double& at(std::size_t t, std::size_t c) { return values[t * channels.size() + c]; }

    // warnings excluded on purpose
    bool operator==(const AngleSequence& o) const {
        return fps == o.fps && frames == o.frames && skeleton_name == o.skeleton_name &&
               channels == o.channels && values == o.values && root == o.root;
    }
};

struct ChannelScore {
    double rmse = 0.0;
    double nmse = 0.0;
    double r2 = 0.0;
    bool degenerate = false;  // zero-variance reference: nmse/r2 meaningless

    bool operator==(const ChannelScore&) const = default;
};

struct SplitSpec {
    double train_fraction = 0.7;  // strictly in (0, 1)
    std::uint64_t seed = 0;

    bool operator==(const SplitSpec&) const = default;
};

struct EvalReport {
    std::string skeleton_name;
    SplitSpec split;
    std::map<std::string, std::size_t> codebook_sizes;
    std::map<std::string, ChannelScore> per_channel;
    ChannelScore aggregate;            // pooled over all channels' residuals
    ChannelScore kinematic_roundtrip;  // positions -> angles -> positions, rmse in meters

    bool operator==(const EvalReport&) const = default;
};

}  // namespace lingomotion

#include "lingomotion/synth.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

#include "lingomotion/error.hpp"
#include "lingomotion/geometry.hpp"
#include "lingomotion/kinematics.hpp"
#include "lingomotion/rng.hpp"

namespace lingomotion {

using nlohmann::json;

void validate_template(const GaitTemplate& tpl, const SkeletonDef& sk) {
    if (!(tpl.fps > 0)) throw Error("synth", "template fps must be positive");
    if (!(tpl.duration_s > 0)) throw Error("synth", "template duration must be positive");
    if (!(tpl.period_s > 0)) throw Error("synth", "template period must be positive");
    if (tpl.noise_deg < 0) throw Error("synth", "noise must be >= 0");
    for (const auto& [name, wave] : tpl.channels) {
        const int c = sk.channel_index(name);
        if (c < 0) throw Error("synth", "template channel " + name + " not in skeleton " + sk.name);
        if (wave.harmonics.size() > 3)
            throw Error("synth", "channel " + name + ": at most 3 harmonics");
        double swing = 0.0;
        for (const Harmonic& h : wave.harmonics) swing += std::abs(h.amplitude);
        swing *= 1.0 + tpl.jitter.amplitude_frac;
        const double margin = 5.0 * tpl.noise_deg;
        const auto& range = sk.channels[c].range;
        if (wave.offset - swing - margin < range[0] || wave.offset + swing + margin > range[1])
            throw Error("synth", "channel " + name + ": amplitude out of channel range [" +
                                     std::to_string(range[0]) + ", " + std::to_string(range[1]) + "]");
    }
}

std::vector<AngleSequence> generate_angles(const GaitTemplate& tpl, const SkeletonDef& sk,
                                           std::size_t n_sequences, std::uint64_t variation_seed) {
    validate_template(tpl, sk);
    const std::size_t frames = static_cast<std::size_t>(std::lround(tpl.duration_s * tpl.fps)) + 1;
    if (frames < 2) throw Error("synth", "template too short for 2 frames");
    const std::size_t nc = sk.channel_count();

    std::vector<AngleSequence> out(n_sequences);
    for (std::size_t i = 0; i < n_sequences; ++i) {
        const std::uint64_t seq_seed = mix_seed(mix_seed(tpl.seed, variation_seed), i);
        Rng seq_rng(seq_seed);
        const double period =
            tpl.period_s * (1.0 + seq_rng.uniform(-tpl.jitter.period_frac, tpl.jitter.period_frac));
        const double phase_shift = seq_rng.uniform(-tpl.jitter.phase_deg, tpl.jitter.phase_deg);

        AngleSequence a;
        a.fps = tpl.fps;
        a.frames = frames;
        a.skeleton_name = sk.name;
        a.channels = sk.channel_names();
        a.values.assign(frames * nc, 0.0);
        a.root.translation.resize(frames);
        a.root.orientation.assign(frames, {0, 0, 0});
        for (std::size_t t = 0; t < frames; ++t) {
            const double time = static_cast<double>(t) / tpl.fps;
            a.root.translation[t] = {0.0,
                                     tpl.root_height_m +
                                         tpl.root_bob_m * std::sin(2.0 * M_PI * time / period),
                                     tpl.root_speed_mps * time};
        }
        for (std::size_t c = 0; c < nc; ++c) {
            auto it = tpl.channels.find(sk.channels[c].name);
            if (it == tpl.channels.end()) continue;
            const ChannelWave& wave = it->second;
            Rng ch_rng(mix_seed(seq_seed, hash_name(sk.channels[c].name)));
            const double amp_scale =
                1.0 + ch_rng.uniform(-tpl.jitter.amplitude_frac, tpl.jitter.amplitude_frac);
            for (std::size_t t = 0; t < frames; ++t) {
                const double time = static_cast<double>(t) / tpl.fps;
                double v = wave.offset;
                for (const Harmonic& h : wave.harmonics)
                    v += h.amplitude * amp_scale *
                         std::sin(2.0 * M_PI * h.cycles * time / period +
                                  (h.phase_deg + phase_shift) * kRadPerDeg);
                if (tpl.noise_deg > 0) v += tpl.noise_deg * ch_rng.normal();
                a.at(t, c) = v;
            }
        }
        out[i] = std::move(a);
    }
    return out;
}

std::vector<MotionSequence> generate(const GaitTemplate& tpl, const SkeletonDef& sk,
                                     std::size_t n_sequences, std::uint64_t variation_seed) {
    std::vector<MotionSequence> out;
    out.reserve(n_sequences);
    for (AngleSequence& a : generate_angles(tpl, sk, n_sequences, variation_seed))
        out.push_back(angles_to_positions(a, sk));
    return out;
}

// ---------------------------------------------------------------------------
// built-in templates

namespace {

void set_wave(GaitTemplate& t, const std::string& ch, double offset,
              std::initializer_list<Harmonic> hs) {
    ChannelWave w;
    w.offset = offset;
    w.harmonics = hs;
    t.channels[ch] = w;
}

GaitTemplate make_walk() {
    GaitTemplate t;
    t.name = "walk";
    t.fps = 30;
    t.duration_s = 5.0;
    t.period_s = 1.2;
    t.root_speed_mps = 1.2;
    t.root_height_m = 0.95;
    t.root_bob_m = 0.02;
    t.noise_deg = 0.5;
    t.seed = 1;
    t.jitter = {0.05, 15.0, 0.05};
    set_wave(t, "r_hip_flex", 10, {{1, 50, 0}});
    set_wave(t, "l_hip_flex", 10, {{1, 50, 180}});
    set_wave(t, "r_hip_add", 0, {{1, 6, 30}});
    set_wave(t, "l_hip_add", 0, {{1, 6, 210}});
    set_wave(t, "r_hip_rot", -15, {{1, 4, 60}});
    set_wave(t, "l_hip_rot", -15, {{1, 4, 240}});
    set_wave(t, "r_knee_bend", 22, {{1, 10, 270}, {2, 3, 0}});
    set_wave(t, "l_knee_bend", 22, {{1, 10, 90}, {2, 3, 180}});
    set_wave(t, "r_ankle_dorsi", 5, {{1, 8, 200}, {2, 3, 40}});
    set_wave(t, "l_ankle_dorsi", 5, {{1, 8, 20}, {2, 3, 220}});
    set_wave(t, "r_ankle_inv", 0, {{1, 4, 120}});
    set_wave(t, "l_ankle_inv", 0, {{1, 4, 300}});
    set_wave(t, "torso_flex", 6, {{2, 2.5, 0}});
    set_wave(t, "torso_lat", 0, {{1, 3, 90}});
    set_wave(t, "torso_rot", 0, {{1, 6, 0}});
    set_wave(t, "thorax_flex", 3, {{2, 1.5, 180}});
    set_wave(t, "head_flex", 2, {{2, 1.5, 90}});
    set_wave(t, "head_rot", 0, {{1, 2, 0}});
    set_wave(t, "r_collar_elev", 3, {{2, 2, 0}});
    set_wave(t, "l_collar_elev", 3, {{2, 2, 180}});
    set_wave(t, "r_sh_flex", 0, {{1, 25, 180}});
    set_wave(t, "l_sh_flex", 0, {{1, 25, 0}});
    set_wave(t, "r_sh_abd", 4, {{2, 2, 0}});
    set_wave(t, "l_sh_abd", 4, {{2, 2, 180}});
    set_wave(t, "r_sh_rot", 0, {{1, 5, 210}});
    set_wave(t, "l_sh_rot", 0, {{1, 5, 30}});
    set_wave(t, "r_elbow_bend", 25, {{1, 12, 200}});
    set_wave(t, "l_elbow_bend", 25, {{1, 12, 20}});
    return t;
}

GaitTemplate make_walk_fast() {
    // same waveform shapes, shorter stride period, larger amplitudes
    GaitTemplate t = make_walk();
    t.name = "walk_fast";
    t.period_s = 0.9;
    t.root_speed_mps = 1.8;
    t.seed = 2;
    for (auto& [name, wave] : t.channels)
        for (Harmonic& h : wave.harmonics) h.amplitude *= 1.2;
    return t;
}

GaitTemplate make_jump() {
    GaitTemplate t;
    t.name = "jump";
    t.fps = 30;
    t.duration_s = 2.0;
    t.period_s = 2.0;  // one crouch-extend-land cycle
    t.root_speed_mps = 0.0;
    t.root_height_m = 0.95;
    t.root_bob_m = 0.15;
    t.noise_deg = 0.5;
    t.seed = 3;
    t.jitter = {0.05, 10.0, 0.05};
    set_wave(t, "r_hip_flex", 25, {{1, 30, 90}});
    set_wave(t, "l_hip_flex", 25, {{1, 30, 90}});
    set_wave(t, "r_knee_bend", 45, {{1, 33, 90}});
    set_wave(t, "l_knee_bend", 45, {{1, 33, 90}});
    set_wave(t, "r_ankle_dorsi", 0, {{1, 14, 90}});
    set_wave(t, "l_ankle_dorsi", 0, {{1, 14, 90}});
    set_wave(t, "r_hip_rot", -5, {{1, 3, 0}});
    set_wave(t, "l_hip_rot", -5, {{1, 3, 0}});
    set_wave(t, "torso_flex", 15, {{1, 12, 90}});
    set_wave(t, "thorax_flex", 5, {{1, 4, 90}});
    set_wave(t, "head_flex", 0, {{1, 5, 270}});
    set_wave(t, "r_collar_elev", 5, {{1, 8, 270}});
    set_wave(t, "l_collar_elev", 5, {{1, 8, 270}});
    set_wave(t, "r_sh_flex", 20, {{1, 35, 270}});
    set_wave(t, "l_sh_flex", 20, {{1, 35, 270}});
    set_wave(t, "r_elbow_bend", 30, {{1, 15, 90}});
    set_wave(t, "l_elbow_bend", 30, {{1, 15, 90}});
    return t;
}

GaitTemplate make_idle() {
    GaitTemplate t;
    t.name = "idle";
    t.fps = 30;
    t.duration_s = 5.0;
    t.period_s = 4.0;  // slow postural sway
    t.root_speed_mps = 0.0;
    t.root_height_m = 0.95;
    t.noise_deg = 0.5;
    t.seed = 4;
    t.jitter = {0.05, 30.0, 0.05};
    set_wave(t, "r_hip_flex", 3, {{1, 1.0, 0}});
    set_wave(t, "l_hip_flex", 3, {{1, 1.0, 180}});
    set_wave(t, "r_knee_bend", 6, {{1, 1.0, 90}});
    set_wave(t, "l_knee_bend", 6, {{1, 1.0, 270}});
    set_wave(t, "torso_lat", 0, {{1, 1.5, 0}});
    set_wave(t, "torso_flex", 4, {{1, 1.0, 90}});
    set_wave(t, "head_rot", 0, {{1, 2.0, 45}});
    set_wave(t, "r_elbow_bend", 12, {{1, 1.0, 0}});
    set_wave(t, "l_elbow_bend", 12, {{1, 1.0, 180}});
    return t;
}

}  // namespace

GaitTemplate builtin_template(const std::string& name) {
    if (name == "walk") return make_walk();
    if (name == "walk_fast") return make_walk_fast();
    if (name == "jump") return make_jump();
    if (name == "idle") return make_idle();
    throw Error("synth", "unknown template '" + name + "' (built-ins: walk, walk_fast, jump, idle)");
}

std::vector<std::string> builtin_template_names() { return {"walk", "walk_fast", "jump", "idle"}; }

GaitTemplate load_template(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open template " + path);
    json doc;
    try {
        in >> doc;
        if (doc.at("schema").get<std::string>() != kSchemaVersion)
            throw Error("synth", path + ": schema version mismatch");
        if (doc.at("kind").get<std::string>() != "template")
            throw Error("synth", path + ": not a template document");
        GaitTemplate t;
        t.name = doc.at("name").get<std::string>();
        t.fps = doc.at("fps").get<double>();
        t.duration_s = doc.at("duration_s").get<double>();
        t.period_s = doc.at("period_s").get<double>();
        const auto& root = doc.at("root");
        t.root_speed_mps = root.at("speed_mps").get<double>();
        t.root_height_m = root.at("height_m").get<double>();
        t.root_bob_m = root.value("bob_m", 0.0);
        t.noise_deg = doc.at("noise_deg").get<double>();
        t.seed = doc.at("seed").get<std::uint64_t>();
        const auto& jit = doc.at("jitter");
        t.jitter.amplitude_frac = jit.at("amplitude_frac").get<double>();
        t.jitter.phase_deg = jit.at("phase_deg").get<double>();
        t.jitter.period_frac = jit.at("period_frac").get<double>();
        for (const auto& [name, w] : doc.at("channels").items()) {
            ChannelWave wave;
            wave.offset = w.at("offset").get<double>();
            for (const auto& h : w.at("harmonics"))
                wave.harmonics.push_back({h.at("cycles").get<double>(), h.at("amp").get<double>(),
                                          h.at("phase_deg").get<double>()});
            t.channels[name] = wave;
        }
        return t;
    } catch (const json::exception& e) {
        throw Error("synth", path + ": " + e.what());
    }
}

void save_template(const GaitTemplate& t, const std::string& path) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "template";
    doc["name"] = t.name;
    doc["fps"] = t.fps;
    doc["duration_s"] = t.duration_s;
    doc["period_s"] = t.period_s;
    doc["root"] = {{"speed_mps", t.root_speed_mps}, {"height_m", t.root_height_m}, {"bob_m", t.root_bob_m}};
    doc["noise_deg"] = t.noise_deg;
    doc["seed"] = t.seed;
    doc["jitter"] = {{"amplitude_frac", t.jitter.amplitude_frac},
                     {"phase_deg", t.jitter.phase_deg},
                     {"period_frac", t.jitter.period_frac}};
    json chans = json::object();
    for (const auto& [name, wave] : t.channels) {
        json w;
        w["offset"] = wave.offset;
        json hs = json::array();
        for (const Harmonic& h : wave.harmonics)
            hs.push_back({{"cycles", h.cycles}, {"amp", h.amplitude}, {"phase_deg", h.phase_deg}});
        w["harmonics"] = hs;
        chans[name] = w;
    }
    doc["channels"] = chans;
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace lingomotion

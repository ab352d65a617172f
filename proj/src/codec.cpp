#include "lingomotion/codec.hpp"

#include <algorithm>
#include <cmath>

#include "lingomotion/error.hpp"
#include "lingomotion/kinematics.hpp"

namespace lingomotion {

void validate_encoding(const EncodedMotion& e, const CodebookSet* cbs) {
    if (e.frames < 2) throw Error("codec", "encoded motion must cover at least 2 frames");
    if (e.root.translation.size() != e.frames || e.root.orientation.size() != e.frames)
        throw Error("codec", "root track length does not match frame count");
    for (const auto& [channel, tokens] : e.streams) {
        const Codebook* cb = nullptr;
        if (cbs) {
            auto it = cbs->find(channel);
            if (it == cbs->end()) throw Error("codec", "no codebook for channel " + channel);
            cb = &it->second;
        }
        if (tokens.empty()) throw Error("codec", "channel " + channel + ": tiling violation (no tokens)");
        std::size_t expected_start = 0;
        for (const auto& t : tokens) {
            if (t.channel != channel) throw Error("codec", "token stream for " + channel + " holds a token of " + t.channel);
            if (t.length < 2) throw Error("codec", "channel " + channel + ": token length must be >= 2");
            if (t.start != expected_start)
                throw Error("codec", "channel " + channel + ": tiling violation at frame " + std::to_string(t.start) +
                                         " (expected start " + std::to_string(expected_start) + ")");
            if ((t.s == kHoldLetter) != (t.scale == 0.0))
                throw Error("codec", "channel " + channel + ": hold letter requires zero scale and vice versa");
            if (t.scale < 0.0) throw Error("codec", "channel " + channel + ": negative scale");
            if (cb && t.s != kHoldLetter && (t.s < 0 || static_cast<std::size_t>(t.s) >= cb->K()))
                throw Error("codec", "channel " + channel + ": shape index " + std::to_string(t.s) +
                                         " outside codebook (K=" + std::to_string(cb->K()) + ")");
            expected_start = t.start + t.length - 1;  // shared boundary frame
        }
        if (expected_start != e.frames - 1)
            throw Error("codec", "channel " + channel + ": tokens cover frames 0.." +
                                     std::to_string(expected_start) + " but sequence has " +
                                     std::to_string(e.frames));
    }
}

EncodedMotion encode(const AngleSequence& a, const CodebookSet& cbs, const SegmentationParams& params,
                     RunPolicy policy) {
    params.validate();
    if (a.frames < 2) throw Error("codec", "cannot encode a sequence shorter than 2 frames");
    const std::size_t nc = a.channel_count();
    std::size_t L = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        auto it = cbs.find(a.channels[c]);
        if (it == cbs.end()) throw Error("codec", "no codebook for channel " + a.channels[c]);
        if (L == 0) L = it->second.L;
        if (it->second.L != L) throw Error("codec", "codebooks disagree on resample length L");
    }

    EncodedMotion out;
    out.fps = a.fps;
    out.frames = a.frames;
    out.skeleton_name = a.skeleton_name;
    out.root = a.root;
    out.streams.resize(nc);

    std::vector<std::string> errors(nc);
    parallel_for(static_cast<std::int64_t>(nc), policy, [&](std::int64_t c) {
        try {
            const std::string& name = a.channels[c];
            const Codebook& cb = cbs.at(name);
            std::vector<double> signal(a.frames);
            for (std::size_t t = 0; t < a.frames; ++t) signal[t] = a.at(t, c);
            std::vector<LetterToken> tokens;
            for (const Segment& seg : segment_channel(signal, params, name)) {
                const NormalizedShape shape = normalize_segment(seg, L);
                LetterToken tok;
                tok.channel = name;
                tok.scale = shape.scale;
                tok.bias = shape.bias;
                tok.length = seg.length();
                tok.start = seg.start;
                tok.s = shape.scale == 0.0 ? kHoldLetter
                                           : static_cast<std::int64_t>(assign_letter(shape, cb).first);
                tokens.push_back(std::move(tok));
            }
            out.streams[c] = {name, std::move(tokens)};
        } catch (const std::exception& e) {
            errors[c] = e.what();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) throw Error(e);
    return out;
}

AngleSequence decode(const EncodedMotion& e, const CodebookSet& cbs, RunPolicy policy) {
    validate_encoding(e, &cbs);
    AngleSequence out;
    out.fps = e.fps;
    out.frames = e.frames;
    out.skeleton_name = e.skeleton_name;
    out.root = e.root;
    out.channels.reserve(e.streams.size());
    for (const auto& [name, tokens] : e.streams) out.channels.push_back(name);
    out.values.assign(e.frames * e.streams.size(), 0.0);

    const std::size_t nc = e.streams.size();
    parallel_for(static_cast<std::int64_t>(nc), policy, [&](std::int64_t c) {
        const auto& [name, tokens] = e.streams[c];
        const Codebook& cb = cbs.at(name);
        // tokens in order: a shared boundary frame takes the later token's
        // first sample, which keeps segment starts exact
        for (const auto& t : tokens) {
            std::vector<double> samples =
                t.s == kHoldLetter ? std::vector<double>(t.length, t.bias)
                                   : denormalize(cb.centroids[t.s], t.scale, t.bias, t.length);
            for (std::size_t i = 0; i < samples.size(); ++i)
                out.values[(t.start + i) * nc + c] = samples[i];
        }
    });
    return out;
}

MotionSequence decode_to_positions(const EncodedMotion& e, const CodebookSet& cbs, const SkeletonDef& sk,
                                   RunPolicy policy) {
    return angles_to_positions(decode(e, cbs, policy), sk, policy);
}

}  // namespace lingomotion

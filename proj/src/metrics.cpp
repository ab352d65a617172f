#include "lingomotion/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lingomotion/error.hpp"
#include "lingomotion/kinematics.hpp"
#include "lingomotion/rng.hpp"

namespace lingomotion {

ChannelScore ResidualPool::finish() const {
    ChannelScore s;
    if (count == 0) throw Error("metrics", "empty residual pool");
    s.rmse = std::sqrt(ss_res / static_cast<double>(count));
    const double tot = ss_tot();
    if (tot <= 0.0) {
        s.degenerate = true;
        s.nmse = std::numeric_limits<double>::quiet_NaN();
        s.r2 = std::numeric_limits<double>::quiet_NaN();
    } else {
        s.nmse = ss_res / tot;
        s.r2 = 1.0 - s.nmse;
    }
    return s;
}

ChannelScore score(std::span<const double> reference, std::span<const double> reconstruction) {
    if (reference.size() != reconstruction.size()) throw Error("metrics", "length mismatch");
    if (reference.size() < 2) throw Error("metrics", "need at least 2 samples");
    ResidualPool pool;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (!std::isfinite(reference[i]) || !std::isfinite(reconstruction[i]))
            throw Error("metrics", "non-finite sample");
        pool.add(reference[i], reconstruction[i]);
    }
    return pool.finish();
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_corpus(std::size_t n,
                                                                           const SplitSpec& spec) {
    if (n < 2) throw Error("metrics", "need at least 2 sequences to split");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw Error("metrics", "train fraction must be strictly between 0 and 1");
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    Rng rng(mix_seed(spec.seed, 0x51u));
    rng.shuffle(ids);
    std::size_t n_train = static_cast<std::size_t>(std::lround(spec.train_fraction * static_cast<double>(n)));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
    std::vector<std::size_t> train(ids.begin(), ids.begin() + n_train);
    std::vector<std::size_t> test(ids.begin() + n_train, ids.end());
    return {train, test};
}

CodebookSet learn_codebooks(const std::vector<AngleSequence>& train, const SkeletonDef& sk,
                            const PipelineOptions& options, std::vector<std::string>* warnings,
                            std::vector<std::vector<double>>* inertia_traces, RunPolicy policy) {
    if (train.empty()) throw Error("metrics", "no training sequences");
    options.segmentation.validate();
    const std::size_t nc = sk.channel_count();
    CodebookSet out;
    if (inertia_traces) inertia_traces->assign(nc, {});
    for (std::size_t c = 0; c < nc; ++c) {
        const std::string& name = sk.channels[c].name;
        std::vector<NormalizedShape> shapes;
        for (const AngleSequence& a : train) {
            std::vector<double> signal(a.frames);
            for (std::size_t t = 0; t < a.frames; ++t) signal[t] = a.at(t, c);
            for (const Segment& seg : segment_channel(signal, options.segmentation, name))
                shapes.push_back(normalize_segment(seg, options.L));
        }
        LearnOutcome lo = learn_codebook(shapes, name, options.k_min, options.k_max,
                                         mix_seed(options.seed, hash_name(name)), policy);
        if (warnings)
            warnings->insert(warnings->end(), lo.warnings.begin(), lo.warnings.end());
        if (inertia_traces) (*inertia_traces)[c] = std::move(lo.inertia_trace);
        out.emplace(name, std::move(lo.codebook));
    }
    return out;
}

EvalOutcome evaluate_pipeline(const std::vector<MotionSequence>& corpus, const SkeletonDef& sk,
                              const PipelineOptions& options, const SplitSpec& split, RunPolicy policy) {
    if (corpus.size() < 2) throw Error("metrics", "corpus must hold at least 2 sequences");
    EvalOutcome out;
    out.report.skeleton_name = sk.name;
    out.report.split = split;

    // positions -> angles for every sequence (parallel inside the conversion;
    // sequences handled one at a time to keep warning order deterministic)
    std::vector<AngleSequence> angles;
    angles.reserve(corpus.size());
    for (const MotionSequence& m : corpus) angles.push_back(positions_to_angles(m, sk, policy));

    // kinematic round trip over the whole corpus, pooled over coordinates
    {
        ResidualPool pool;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const MotionSequence rec = angles_to_positions(angles[i], sk, policy);
            for (std::size_t n = 0; n < rec.positions.size(); ++n)
                for (int k = 0; k < 3; ++k) pool.add(corpus[i].positions[n][k], rec.positions[n][k]);
        }
        out.report.kinematic_roundtrip = pool.finish();
    }

    auto [train_ids, test_ids] = split_corpus(corpus.size(), split);
    std::sort(train_ids.begin(), train_ids.end());
    std::sort(test_ids.begin(), test_ids.end());

    std::vector<AngleSequence> train;
    train.reserve(train_ids.size());
    for (std::size_t id : train_ids) train.push_back(angles[id]);
    out.codebooks = learn_codebooks(train, sk, options, &out.warnings, nullptr, policy);
    for (const auto& [name, cb] : out.codebooks) out.report.codebook_sizes[name] = cb.K();

    // encode/decode the test split, pool residuals per channel in corpus order
    const std::size_t nc = sk.channel_count();
    std::vector<ResidualPool> pools(nc);
    for (std::size_t id : test_ids) {
        const AngleSequence& ref = angles[id];
        const AngleSequence rec = decode(encode(ref, out.codebooks, options.segmentation, policy),
                                         out.codebooks, policy);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t t = 0; t < ref.frames; ++t) pools[c].add(ref.at(t, c), rec.at(t, c));
    }

    ResidualPool aggregate;
    for (std::size_t c = 0; c < nc; ++c) {
        if (pools[c].count == 0) {
            out.warnings.push_back("channel " + sk.channels[c].name + ": no test samples");
            continue;
        }
        out.report.per_channel[sk.channels[c].name] = pools[c].finish();
        aggregate.merge(pools[c]);
    }
    out.report.aggregate = aggregate.finish();
    return out;
}

}  // namespace lingomotion

#include "lingomotion/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lingomotion/error.hpp"
#include "lingomotion/rng.hpp"

namespace lingomotion {

namespace {

constexpr double kFlatThreshold = 1e-9;     // degrees of amplitude
constexpr double kConvergence = 1e-8;       // relative inertia change
constexpr std::size_t kMaxIterations = 300;
constexpr std::size_t kSilhouetteCap = 2000;

double sq_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

std::vector<double> resample_linear(const std::vector<double>& samples, std::size_t count) {
    const std::size_t n = samples.size();
    if (n == 0 || count == 0) throw Error("codebook", "cannot resample an empty signal");
    if (n == 1) return std::vector<double>(count, samples[0]);
    if (count == 1) return {samples[0]};
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        // exact at integer parameters, so count == n is the identity
        const double t = static_cast<double>(k) * static_cast<double>(n - 1) / static_cast<double>(count - 1);
        std::size_t idx = static_cast<std::size_t>(t);
        if (idx >= n - 1) idx = n - 2;
        const double frac = t - static_cast<double>(idx);
        out[k] = samples[idx] * (1.0 - frac) + samples[idx + 1] * frac;
    }
    return out;
}

NormalizedShape normalize_segment(const Segment& seg, std::size_t L) {
    if (L < 2) throw Error("codebook", "resample length must be >= 2");
    if (seg.samples.size() < 2) throw Error("codebook", "segment must carry at least 2 samples");
    NormalizedShape out;
    const auto [lo, hi] = std::minmax_element(seg.samples.begin(), seg.samples.end());
    out.bias = *lo;
    out.length = seg.samples.size();
    const double amplitude = *hi - *lo;
    if (amplitude < kFlatThreshold) {
        out.scale = 0.0;
        out.values.assign(L, 0.5);
        return out;
    }
    out.scale = amplitude;
    std::vector<double> unit(seg.samples.size());
    for (std::size_t i = 0; i < unit.size(); ++i) unit[i] = (seg.samples[i] - out.bias) / amplitude;
    out.values = resample_linear(unit, L);
    return out;
}

std::vector<double> denormalize(const std::vector<double>& shape, double scale, double bias,
                                std::size_t length) {
    std::vector<double> out = resample_linear(shape, length);
    for (double& v : out) v = scale * v + bias;
    return out;
}

KMeansResult kmeans(const std::vector<NormalizedShape>& shapes, std::size_t k, std::uint64_t seed,
                    RunPolicy policy) {
    const std::size_t n = shapes.size();
    if (k < 1) throw Error("codebook", "k must be >= 1");
    if (n < k) throw Error("codebook", "fewer shapes than clusters");
    const std::size_t dim = shapes[0].values.size();
    for (const auto& s : shapes)
        if (s.values.size() != dim) throw Error("codebook", "inconsistent shape lengths");

    KMeansResult res;
    res.centroids.reserve(k);

    // greedy farthest-point seeding: the seed picks the first centre, each
    // following centre is the point farthest from the chosen set (ties to the
    // lowest index)
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::size_t first = static_cast<std::size_t>(mix_seed(seed) % n);
    res.centroids.push_back(shapes[first].values);
    while (res.centroids.size() < k) {
        const auto& latest = res.centroids.back();
        parallel_for(static_cast<std::int64_t>(n), policy, [&](std::int64_t i) {
            nearest[i] = std::min(nearest[i], sq_distance(shapes[i].values, latest));
        });
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (nearest[i] > nearest[far]) far = i;
        res.centroids.push_back(shapes[far].values);
    }

    res.assignment.assign(n, 0);
    std::vector<double> dist(n, 0.0);
    double prev_inertia = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        // assignment step
        parallel_for(static_cast<std::int64_t>(n), policy, [&](std::int64_t i) {
            std::size_t best = 0;
            double best_d = sq_distance(shapes[i].values, res.centroids[0]);
            for (std::size_t c = 1; c < res.centroids.size(); ++c) {
                const double d = sq_distance(shapes[i].values, res.centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            res.assignment[i] = best;
            dist[i] = best_d;
        });
        // fixed reduction order keeps the inertia schedule-independent
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) inertia += dist[i];
        res.inertia_trace.push_back(inertia);
        res.inertia = inertia;

        const bool converged =
            prev_inertia != std::numeric_limits<double>::infinity() &&
            std::abs(prev_inertia - inertia) <= kConvergence * std::max(prev_inertia, 1e-300);
        prev_inertia = inertia;
        if (converged || iter + 1 == kMaxIterations) break;

        // update step: per-cluster member lists, summed in index order so the
        // result is bitwise identical for any thread count
        std::vector<std::vector<std::size_t>> members(res.centroids.size());
        for (std::size_t i = 0; i < n; ++i) members[res.assignment[i]].push_back(i);
        // an empty cluster recaptures the point farthest from its centroid
        for (std::size_t c = 0; c < members.size(); ++c) {
            if (!members[c].empty()) continue;
            std::size_t far = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (dist[i] > dist[far]) far = i;
            const std::size_t old = res.assignment[far];
            auto& olist = members[old];
            olist.erase(std::find(olist.begin(), olist.end(), far));
            res.assignment[far] = c;
            members[c].push_back(far);
            dist[far] = 0.0;
        }
        parallel_for(static_cast<std::int64_t>(res.centroids.size()), policy, [&](std::int64_t c) {
            std::vector<double> sum(dim, 0.0);
            for (std::size_t i : members[c])
                for (std::size_t d = 0; d < dim; ++d) sum[d] += shapes[i].values[d];
            for (std::size_t d = 0; d < dim; ++d)
                res.centroids[c][d] = sum[d] / static_cast<double>(members[c].size());
        });
    }
    return res;
}

namespace {

// mean silhouette over (at most kSilhouetteCap) points, from a precomputed
// distance matrix over the subsample
double mean_silhouette(const std::vector<double>& dmat, const std::vector<std::size_t>& labels,
                       std::size_t k, std::size_t n) {
    if (k < 2) return -1.0;
    std::vector<std::size_t> cluster_size(k, 0);
    for (std::size_t l : labels) ++cluster_size[l];
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> sums(k, 0.0);
        for (std::size_t j = 0; j < n; ++j) sums[labels[j]] += dmat[i * n + j];
        const std::size_t own = labels[i];
        if (cluster_size[own] <= 1) continue;  // singleton: silhouette 0
        const double a = sums[own] / static_cast<double>(cluster_size[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own || cluster_size[c] == 0) continue;
            b = std::min(b, sums[c] / static_cast<double>(cluster_size[c]));
        }
        if (!std::isfinite(b)) continue;
        const double denom = std::max(a, b);
        if (denom <= 0.0) continue;  // coincident points contribute 0
        total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

}  // namespace

LearnOutcome learn_codebook(const std::vector<NormalizedShape>& shapes, const std::string& channel,
                            std::size_t k_min, std::size_t k_max, std::uint64_t seed, RunPolicy policy) {
    if (k_min < 1 || k_max < k_min) throw Error("codebook", "invalid k range");

    // flat shapes carry no shape information; they get the reserved hold
    // letter at encode time
    std::vector<NormalizedShape> train;
    train.reserve(shapes.size());
    for (const auto& s : shapes)
        if (s.scale > 0.0) train.push_back(s);

    LearnOutcome out;
    out.codebook.channel = channel;
    if (train.empty()) throw Error("codebook", "channel " + channel + ": no non-flat shapes to cluster");
    if (train.size() < k_min)
        throw Error("codebook", "channel " + channel + ": fewer shapes (" + std::to_string(train.size()) +
                                    ") than k_min (" + std::to_string(k_min) + ")");
    const std::size_t dim = train[0].values.size();
    out.codebook.L = dim;
    out.codebook.training.seed = seed;
    out.codebook.training.n_segments = train.size();

    // subsample for silhouette scoring (shared across K so scores compare)
    std::vector<std::size_t> sample(train.size());
    for (std::size_t i = 0; i < sample.size(); ++i) sample[i] = i;
    if (sample.size() > kSilhouetteCap) {
        Rng rng(mix_seed(seed, 0x5117));
        rng.shuffle(sample);
        sample.resize(kSilhouetteCap);
        std::sort(sample.begin(), sample.end());
    }
    const std::size_t sn = sample.size();
    std::vector<double> dmat(sn * sn, 0.0);
    parallel_for(static_cast<std::int64_t>(sn), policy, [&](std::int64_t i) {
        for (std::size_t j = 0; j < sn; ++j)
            dmat[i * sn + j] = std::sqrt(sq_distance(train[sample[i]].values, train[sample[j]].values));
    });

    const std::size_t k_hi = std::min(k_max, train.size());
    KMeansResult best;
    double best_score = -std::numeric_limits<double>::infinity();
    bool have_best = false;
    for (std::size_t k = k_min; k <= k_hi; ++k) {
        KMeansResult r = kmeans(train, k, seed, policy);
        std::vector<std::size_t> labels(sn);
        for (std::size_t i = 0; i < sn; ++i) labels[i] = r.assignment[sample[i]];
        const double score = k == 1 ? -1.0 : mean_silhouette(dmat, labels, k, sn);
        if (!have_best || score > best_score) {
            have_best = true;
            best_score = score;
            best = std::move(r);
        }
    }

    // collapse duplicate centroids (all-identical inputs land here)
    std::vector<std::vector<double>> unique;
    for (const auto& c : best.centroids) {
        bool dup = false;
        for (const auto& u : unique)
            if (u == c) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(c);
    }
    if (unique.size() < best.centroids.size())
        out.warnings.push_back("channel " + channel + ": " +
                               std::to_string(best.centroids.size() - unique.size()) +
                               " duplicate centroids collapsed");
    out.codebook.centroids = std::move(unique);
    out.codebook.training.inertia = best.inertia;
    out.inertia_trace = std::move(best.inertia_trace);
    return out;
}

std::pair<std::size_t, double> assign_letter(const NormalizedShape& shape, const Codebook& cb) {
    if (cb.centroids.empty()) throw Error("codebook", "empty codebook for channel " + cb.channel);
    if (shape.values.size() != cb.L)
        throw Error("codebook", "shape length " + std::to_string(shape.values.size()) +
                                    " does not match codebook L " + std::to_string(cb.L));
    std::size_t best = 0;
    double best_d = sq_distance(shape.values, cb.centroids[0]);
    for (std::size_t c = 1; c < cb.centroids.size(); ++c) {
        const double d = sq_distance(shape.values, cb.centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return {best, std::sqrt(best_d)};
}

}  // namespace lingomotion

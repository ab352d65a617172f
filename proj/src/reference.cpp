#include "lingomotion/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lingomotion/error.hpp"
#include "lingomotion/rng.hpp"

namespace lingomotion::reference {

namespace {

double sq_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

KMeansResult kmeans(const std::vector<NormalizedShape>& shapes, std::size_t k, std::uint64_t seed) {
    const std::size_t n = shapes.size();
    if (k < 1) throw Error("reference", "k must be >= 1");
    if (n < k) throw Error("reference", "fewer shapes than clusters");
    const std::size_t dim = shapes[0].values.size();

    KMeansResult res;
    res.centroids.push_back(shapes[mix_seed(seed) % n].values);
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    while (res.centroids.size() < k) {
        std::size_t far = 0;
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], sq_distance(shapes[i].values, res.centroids.back()));
            if (nearest[i] > nearest[far]) far = i;
        }
        res.centroids.push_back(shapes[far].values);
    }

    res.assignment.assign(n, 0);
    std::vector<double> dist(n, 0.0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < 300; ++iter) {
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
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
            inertia += best_d;
        }
        res.inertia_trace.push_back(inertia);
        res.inertia = inertia;
        const bool converged = prev != std::numeric_limits<double>::infinity() &&
                               std::abs(prev - inertia) <= 1e-8 * std::max(prev, 1e-300);
        prev = inertia;
        if (converged || iter + 1 == 300) break;

        std::vector<std::size_t> counts(res.centroids.size(), 0);
        for (std::size_t i = 0; i < n; ++i) ++counts[res.assignment[i]];
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] > 0) continue;
            std::size_t far = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (dist[i] > dist[far]) far = i;
            --counts[res.assignment[far]];
            res.assignment[far] = c;
            ++counts[c];
            dist[far] = 0.0;
        }
        std::vector<std::vector<double>> sums(res.centroids.size(), std::vector<double>(dim, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < dim; ++d) sums[res.assignment[i]][d] += shapes[i].values[d];
        for (std::size_t c = 0; c < sums.size(); ++c)
            for (std::size_t d = 0; d < dim; ++d)
                res.centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
    }
    return res;
}

ChannelScore score(std::span<const double> reference, std::span<const double> reconstruction) {
    if (reference.size() != reconstruction.size() || reference.size() < 2)
        throw Error("reference", "bad input lengths");
    const double n = static_cast<double>(reference.size());
    double mean = 0.0;
    for (double v : reference) mean += v;
    mean /= n;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        ss_res += (reference[i] - reconstruction[i]) * (reference[i] - reconstruction[i]);
        ss_tot += (reference[i] - mean) * (reference[i] - mean);
    }
    ChannelScore s;
    s.rmse = std::sqrt(ss_res / n);
    if (ss_tot <= 0.0) {
        s.degenerate = true;
        s.nmse = std::numeric_limits<double>::quiet_NaN();
        s.r2 = std::numeric_limits<double>::quiet_NaN();
    } else {
        s.nmse = ss_res / ss_tot;
        s.r2 = 1.0 - s.nmse;
    }
    return s;
}

}  // namespace lingomotion::reference

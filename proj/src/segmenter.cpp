#include "lingomotion/segmenter.hpp"

#include <algorithm>
#include <cmath>

#include "lingomotion/error.hpp"

namespace lingomotion {

void SegmentationParams::validate() const {
    if (smooth_window < 1 || smooth_window % 2 == 0)
        throw Error("segmenter", "smooth_window must be an odd count >= 1");
    if (min_prominence < 0) throw Error("segmenter", "min_prominence must be >= 0");
    if (min_length < 2) throw Error("segmenter", "min_length must be >= 2 frames");
}

std::vector<double> smooth_signal(const std::vector<double>& signal, std::size_t window) {
    if (window <= 1) return signal;
    const std::size_t n = signal.size();
    const std::size_t half = window / 2;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(n - 1, i + half);
        double sum = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) sum += signal[k];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return out;
}

namespace {

struct RawExtremum {
    std::size_t frame;
    ExtremumKind kind;
    double value;       // smoothed value at the extremum
    double prominence;  // recomputed as neighbours change
};

void check_signal(const std::vector<double>& signal) {
    if (signal.size() < 2) throw Error("segmenter", "signal must have at least 2 frames");
    for (double v : signal)
        if (!std::isfinite(v)) throw Error("segmenter", "non-finite sample");
}

// Sign-change scan over the first differences of the smoothed signal. Flat
// runs between opposite-sign differences place the extremum at the run's
// midpoint (floor).
std::vector<RawExtremum> raw_extrema(const std::vector<double>& s) {
    std::vector<RawExtremum> out;
    const std::size_t n = s.size();
    int last_sign = 0;
    std::size_t run_start = 0;  // first index of the current equal-value run
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = s[i + 1] - s[i];
        const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) {
            const std::size_t frame = (run_start + i) / 2;
            out.push_back({frame, sign < 0 ? ExtremumKind::maximum : ExtremumKind::minimum, s[frame], 0.0});
        }
        last_sign = sign;
        run_start = i + 1;
    }
    return out;
}

// Prominence = smallest height margin over the neighbouring opposite-kind
// extrema; the signal endpoints count as candidates on either side.
void recompute_prominences(std::vector<RawExtremum>& ex, const std::vector<double>& s) {
    const double first = s.front(), last = s.back();
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const double left = i == 0 ? first : ex[i - 1].value;
        const double right = i + 1 == ex.size() ? last : ex[i + 1].value;
        if (ex[i].kind == ExtremumKind::maximum)
            ex[i].prominence = std::min(ex[i].value - left, ex[i].value - right);
        else
            ex[i].prominence = std::min(left - ex[i].value, right - ex[i].value);
    }
}

// After a removal two same-kind extrema may become adjacent; keep the more
// extreme one (ties keep the earlier).
void enforce_alternation(std::vector<RawExtremum>& ex) {
    for (std::size_t i = 0; i + 1 < ex.size();) {
        if (ex[i].kind != ex[i + 1].kind) {
            ++i;
            continue;
        }
        const bool keep_first = ex[i].kind == ExtremumKind::maximum ? ex[i].value >= ex[i + 1].value
                                                                    : ex[i].value <= ex[i + 1].value;
        ex.erase(ex.begin() + (keep_first ? i + 1 : i));
        if (i > 0) --i;
    }
}

bool violates_min_length(const std::vector<RawExtremum>& ex, std::size_t n, std::size_t min_length,
                         std::size_t* worst) {
    // boundary list = 0, extrema frames..., n-1; a pair closer than
    // min_length marks the adjacent extrema as removal candidates
    std::size_t prev = 0;
    bool found = false;
    double worst_prom = 0.0;
    for (std::size_t i = 0; i <= ex.size(); ++i) {
        const std::size_t cur = i < ex.size() ? ex[i].frame : n - 1;
        if (cur - prev + 1 < min_length) {
            for (std::size_t cand : {i > 0 ? i - 1 : ex.size(), i < ex.size() ? i : ex.size()}) {
                if (cand >= ex.size()) continue;  // endpoint boundaries are not removable
                if (!found || ex[cand].prominence < worst_prom) {
                    found = true;
                    worst_prom = ex[cand].prominence;
                    *worst = cand;
                }
            }
        }
        prev = cur;
    }
    return found;
}

std::vector<RawExtremum> filtered_extrema(const std::vector<double>& signal,
                                          const SegmentationParams& params) {
    const std::vector<double> s = smooth_signal(signal, params.smooth_window);
    std::vector<RawExtremum> ex = raw_extrema(s);
    recompute_prominences(ex, s);

    for (;;) {
        // lowest-prominence extremum below threshold goes first
        std::size_t worst = ex.size();
        for (std::size_t i = 0; i < ex.size(); ++i)
            if (ex[i].prominence < params.min_prominence &&
                (worst == ex.size() || ex[i].prominence < ex[worst].prominence))
                worst = i;
        if (worst == ex.size() && !violates_min_length(ex, signal.size(), params.min_length, &worst)) break;
        ex.erase(ex.begin() + worst);
        enforce_alternation(ex);
        recompute_prominences(ex, s);
    }
    return ex;
}

}  // namespace

std::vector<Extremum> find_extrema(const std::vector<double>& signal, const SegmentationParams& params) {
    params.validate();
    check_signal(signal);
    std::vector<Extremum> out;
    for (const RawExtremum& e : filtered_extrema(signal, params))
        out.push_back({e.frame, e.kind, e.prominence});
    return out;
}

std::vector<Segment> segment_channel(const std::vector<double>& signal, const SegmentationParams& params,
                                     const std::string& channel_name) {
    params.validate();
    check_signal(signal);
    std::vector<std::size_t> boundaries{0};
    for (const RawExtremum& e : filtered_extrema(signal, params))
        if (e.frame != 0 && e.frame != signal.size() - 1) boundaries.push_back(e.frame);
    boundaries.push_back(signal.size() - 1);

    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        Segment seg;
        seg.channel = channel_name;
        seg.start = boundaries[i];
        seg.end = boundaries[i + 1];
        seg.samples.assign(signal.begin() + seg.start, signal.begin() + seg.end + 1);
        out.push_back(std::move(seg));
    }
    return out;
}

}  // namespace lingomotion

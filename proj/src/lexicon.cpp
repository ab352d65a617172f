#include "lingomotion/lexicon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "lingomotion/error.hpp"

namespace lingomotion {

namespace {

struct TokenRef {
    std::int64_t shape;
    std::size_t start;
    std::size_t end;  // inclusive
    double scale;
    std::size_t length;
    std::size_t index;  // position within its stream
};

// non-hold tokens per channel, channels sorted by name
struct SeqTokens {
    std::vector<std::pair<std::string, std::vector<TokenRef>>> channels;
    std::size_t frames = 0;
};

bool overlaps(const TokenRef& a, const TokenRef& b, double threshold) {
    const std::size_t lo = std::max(a.start, b.start);
    const std::size_t hi = std::min(a.end, b.end);
    if (hi < lo) return false;
    const double overlap = static_cast<double>(hi - lo + 1);
    return overlap >= threshold * static_cast<double>(std::min(a.length, b.length));
}

struct Interval {
    std::size_t seq;
    std::size_t lo;
    std::size_t hi;
};

struct CandidateCounts {
    // distinct participating tokens per member; token id = (seq, channel slot, index)
    std::array<std::set<std::uint64_t>, 3> participants;
    std::vector<Interval> occurrences;
    double sum_scale = 0, sum_scale_sq = 0, sum_len = 0, sum_len_sq = 0;
    std::size_t n_attr = 0;

    void add_token(std::size_t member, std::uint64_t id, const TokenRef& t) {
        if (participants[member].insert(id).second) {
            sum_scale += t.scale;
            sum_scale_sq += t.scale * t.scale;
            sum_len += static_cast<double>(t.length);
            sum_len_sq += static_cast<double>(t.length) * static_cast<double>(t.length);
            ++n_attr;
        }
    }
    std::size_t support(std::size_t n_members) const {
        std::size_t s = participants[0].size();
        for (std::size_t m = 1; m < n_members; ++m) s = std::min(s, participants[m].size());
        return s;
    }
};

std::uint64_t token_id(std::size_t seq, std::size_t slot, std::size_t index) {
    return (static_cast<std::uint64_t>(seq) << 40) | (static_cast<std::uint64_t>(slot) << 24) |
           static_cast<std::uint64_t>(index);
}

using MemberKey = std::vector<WordMember>;

double coverage_of(const std::vector<Interval>& occurrences, std::size_t total_frames) {
    // union of occurrence intervals, grouped by sequence
    std::vector<Interval> sorted = occurrences;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
        return a.seq != b.seq ? a.seq < b.seq : a.lo < b.lo;
    });
    std::size_t covered = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        std::size_t lo = sorted[i].lo, hi = sorted[i].hi;
        while (++j < sorted.size() && sorted[j].seq == sorted[i].seq) {
            if (sorted[j].lo > hi + 1) {
                covered += hi - lo + 1;
                lo = sorted[j].lo;
                hi = sorted[j].hi;
            } else {
                hi = std::max(hi, sorted[j].hi);
            }
        }
        covered += hi - lo + 1;
        i = j;
    }
    return total_frames == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total_frames);
}

WordCandidate finish_candidate(const MemberKey& key, const CandidateCounts& c,
                               std::size_t total_frames) {
    WordCandidate out;
    out.members = key;
    out.relation = WordRelation::simultaneous;
    out.support = c.support(key.size());
    out.coverage = coverage_of(c.occurrences, total_frames);
    if (c.n_attr > 0) {
        const double n = static_cast<double>(c.n_attr);
        out.mean_scale = c.sum_scale / n;
        out.std_scale = std::sqrt(std::max(0.0, c.sum_scale_sq / n - out.mean_scale * out.mean_scale));
        out.mean_length = c.sum_len / n;
        out.std_length = std::sqrt(std::max(0.0, c.sum_len_sq / n - out.mean_length * out.mean_length));
    }
    return out;
}

}  // namespace

std::vector<WordCandidate> mine_words(const std::vector<EncodedMotion>& corpus,
                                      double overlap_threshold, std::size_t min_support,
                                      RunPolicy policy) {
    if (corpus.empty()) throw Error("lexicon", "empty corpus");
    if (!(overlap_threshold > 0.0 && overlap_threshold <= 1.0))
        throw Error("lexicon", "overlap threshold must be in (0, 1]");
    for (const EncodedMotion& e : corpus)
        if (e.skeleton_name != corpus.front().skeleton_name)
            throw Error("lexicon", "corpus mixes skeletons " + corpus.front().skeleton_name + " and " +
                                       e.skeleton_name);

    // strip holds, order channels by name
    std::vector<SeqTokens> seqs(corpus.size());
    parallel_for(static_cast<std::int64_t>(corpus.size()), policy, [&](std::int64_t i) {
        SeqTokens st;
        st.frames = corpus[i].frames;
        for (const auto& [name, tokens] : corpus[i].streams) {
            std::vector<TokenRef> refs;
            for (std::size_t k = 0; k < tokens.size(); ++k) {
                const LetterToken& t = tokens[k];
                if (t.s == kHoldLetter) continue;
                refs.push_back({t.s, t.start, t.start + t.length - 1, t.scale, t.length, k});
            }
            if (!refs.empty()) st.channels.push_back({name, std::move(refs)});
        }
        std::sort(st.channels.begin(), st.channels.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        seqs[i] = std::move(st);
    });

    std::size_t total_frames = 0;
    for (const SeqTokens& s : seqs) total_frames += s.frames;

    // pair counting walks sequences in order; sets and sums make the result
    // independent of how occurrences are discovered
    std::map<MemberKey, CandidateCounts> pairs;
    for (std::size_t si = 0; si < seqs.size(); ++si) {
        const SeqTokens& st = seqs[si];
        for (std::size_t a = 0; a < st.channels.size(); ++a) {
            for (std::size_t b = a + 1; b < st.channels.size(); ++b) {
                const auto& [ca, ta] = st.channels[a];
                const auto& [cb, tb] = st.channels[b];
                for (const TokenRef& x : ta) {
                    for (const TokenRef& y : tb) {
                        if (y.start > x.end) break;
                        if (!overlaps(x, y, overlap_threshold)) continue;
                        MemberKey key{{ca, x.shape}, {cb, y.shape}};
                        CandidateCounts& c = pairs[key];
                        c.add_token(0, token_id(si, a, x.index), x);
                        c.add_token(1, token_id(si, b, y.index), y);
                        c.occurrences.push_back({si, std::max(x.start, y.start), std::min(x.end, y.end)});
                    }
                }
            }
        }
    }

    std::vector<WordCandidate> out;
    std::set<MemberKey> frequent_pairs;
    for (const auto& [key, counts] : pairs) {
        WordCandidate c = finish_candidate(key, counts, total_frames);
        if (c.support >= min_support) {
            frequent_pairs.insert(key);
            out.push_back(std::move(c));
        }
    }

    // triples: extend frequent pairs whose three sub-pairs are all frequent
    std::set<MemberKey> triple_keys;
    for (const MemberKey& p : frequent_pairs) {
        for (const MemberKey& q : frequent_pairs) {
            if (p[0] != q[0] || p[1] == q[1]) continue;
            MemberKey key{p[0], p[1], q[1]};
            std::sort(key.begin(), key.end());
            if (key[0].channel == key[1].channel || key[1].channel == key[2].channel) continue;
            if (frequent_pairs.count({key[1], key[2]}) == 0) continue;
            triple_keys.insert(key);
        }
    }
    std::map<MemberKey, CandidateCounts> triples;
    for (std::size_t si = 0; si < seqs.size(); ++si) {
        const SeqTokens& st = seqs[si];
        auto slot_of = [&](const std::string& name) -> std::size_t {
            for (std::size_t k = 0; k < st.channels.size(); ++k)
                if (st.channels[k].first == name) return k;
            return st.channels.size();
        };
        for (const MemberKey& key : triple_keys) {
            const std::size_t sa = slot_of(key[0].channel), sb = slot_of(key[1].channel),
                              sc = slot_of(key[2].channel);
            if (sa >= st.channels.size() || sb >= st.channels.size() || sc >= st.channels.size()) continue;
            for (const TokenRef& x : st.channels[sa].second) {
                if (x.shape != key[0].shape) continue;
                for (const TokenRef& y : st.channels[sb].second) {
                    if (y.shape != key[1].shape || !overlaps(x, y, overlap_threshold)) continue;
                    for (const TokenRef& z : st.channels[sc].second) {
                        if (z.shape != key[2].shape || !overlaps(x, z, overlap_threshold) ||
                            !overlaps(y, z, overlap_threshold))
                            continue;
                        CandidateCounts& c = triples[key];
                        c.add_token(0, token_id(si, sa, x.index), x);
                        c.add_token(1, token_id(si, sb, y.index), y);
                        c.add_token(2, token_id(si, sc, z.index), z);
                        c.occurrences.push_back({si, std::max({x.start, y.start, z.start}),
                                                 std::min({x.end, y.end, z.end})});
                    }
                }
            }
        }
    }
    for (const auto& [key, counts] : triples) {
        WordCandidate c = finish_candidate(key, counts, total_frames);
        if (c.support >= min_support) out.push_back(std::move(c));
    }

    std::sort(out.begin(), out.end(), [](const WordCandidate& a, const WordCandidate& b) {
        if (a.support != b.support) return a.support > b.support;
        return a.members < b.members;
    });
    return out;
}

}  // namespace lingomotion

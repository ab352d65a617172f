#include "lingomotion/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "lingomotion/error.hpp"
#include "lingomotion/kinematics.hpp"

namespace lingomotion {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

double parse_double_cell(const std::string& cell, const std::string& path, std::size_t line,
                         std::size_t col) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw Error("io", path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": non-numeric cell '" + cell + "'");
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

struct CsvHeader {
    double fps = 0.0;
    std::string skeleton;
};

CsvHeader parse_csv_header(const std::string& line, const std::string& expected_kind,
                           const std::string& path) {
    std::istringstream ss(line);
    std::string hash, schema, kind, fps_field, sk_field;
    ss >> hash >> schema >> kind >> fps_field >> sk_field;
    if (hash != "#" || ss.fail())
        throw Error("io", path + ":1: malformed header line");
    if (schema != kSchemaVersion)
        throw Error("io", path + ":1: schema version mismatch (found '" + schema + "')");
    if (kind != expected_kind)
        throw Error("io", path + ":1: expected a " + expected_kind + " file, found '" + kind + "'");
    if (fps_field.rfind("fps=", 0) != 0 || sk_field.rfind("skeleton=", 0) != 0)
        throw Error("io", path + ":1: malformed header fields");
    CsvHeader h;
    h.fps = parse_double_cell(fps_field.substr(4), path, 1, 1);
    h.skeleton = sk_field.substr(9);
    if (!(h.fps > 0)) throw Error("io", path + ":1: fps must be positive");
    return h;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    // a single trailing newline is the canonical form; ignore one empty tail
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

void check_frame_cell(const std::string& cell, std::size_t expected, const std::string& path,
                      std::size_t line) {
    if (cell != std::to_string(expected))
        throw Error("io", path + ":" + std::to_string(line) + ":1: expected frame index " +
                              std::to_string(expected) + ", found '" + cell + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// motion CSV

MotionSequence load_motion(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.size() < 2) throw Error("io", path + ": missing header lines");
    const CsvHeader h = parse_csv_header(lines[0], "motion", path);

    const std::vector<std::string> cols = split_csv(lines[1]);
    if (cols.empty() || cols[0] != "frame")
        throw Error("io", path + ":2:1: column header must start with 'frame'");
    if ((cols.size() - 1) % 3 != 0)
        throw Error("io", path + ":2: coordinate columns must come in _x,_y,_z triplets");
    MotionSequence m;
    m.fps = h.fps;
    m.skeleton_name = h.skeleton;
    for (std::size_t c = 1; c < cols.size(); c += 3) {
        static const char* suffix[3] = {"_x", "_y", "_z"};
        std::string joint;
        for (int k = 0; k < 3; ++k) {
            const std::string& name = cols[c + k];
            if (name.size() < 3 || name.substr(name.size() - 2) != suffix[k])
                throw Error("io", path + ":2:" + std::to_string(c + k + 1) + ": expected a column ending in " +
                                      suffix[k] + ", found '" + name + "'");
            const std::string base = name.substr(0, name.size() - 2);
            if (k == 0)
                joint = base;
            else if (base != joint)
                throw Error("io", path + ":2:" + std::to_string(c + k + 1) +
                                      ": triplet mixes joints '" + joint + "' and '" + base + "'");
        }
        m.joint_names.push_back(joint);
    }

    const std::size_t nj = m.joint_names.size();
    m.frames = lines.size() - 2;
    if (m.frames < 2) throw Error("io", path + ": sequence must have at least 2 frames");
    m.positions.resize(m.frames * nj);
    for (std::size_t t = 0; t < m.frames; ++t) {
        const std::size_t lineno = t + 3;
        const std::vector<std::string> cells = split_csv(lines[t + 2]);
        if (cells.size() != 1 + 3 * nj)
            throw Error("io", path + ":" + std::to_string(lineno) + ": expected " +
                                  std::to_string(1 + 3 * nj) + " cells, found " +
                                  std::to_string(cells.size()));
        check_frame_cell(cells[0], t, path, lineno);
        for (std::size_t j = 0; j < nj; ++j)
            for (int k = 0; k < 3; ++k)
                m.positions[t * nj + j][k] = parse_double_cell(cells[1 + 3 * j + k], path, lineno, 2 + 3 * j + k);
    }
    validate_motion(m);
    return m;
}

MotionSequence load_motion(const std::string& path, const SkeletonDef& sk) {
    MotionSequence m = load_motion(path);
    validate_motion(m, sk);
    return m;
}

void save_motion(const MotionSequence& m, const std::string& path) {
    validate_motion(m);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << "# " << kSchemaVersion << " motion fps=" << format_double(m.fps)
        << " skeleton=" << m.skeleton_name << "\n";
    out << "frame";
    for (const std::string& j : m.joint_names) out << "," << j << "_x," << j << "_y," << j << "_z";
    out << "\n";
    const std::size_t nj = m.joint_names.size();
    for (std::size_t t = 0; t < m.frames; ++t) {
        out << t;
        for (std::size_t j = 0; j < nj; ++j)
            for (int k = 0; k < 3; ++k) out << "," << format_double(m.positions[t * nj + j][k]);
        out << "\n";
    }
    if (!out) throw Error("io", "write failed for " + path);
}

// ---------------------------------------------------------------------------
// angle CSV

namespace {
const char* kRootCols[6] = {"root_tx", "root_ty", "root_tz", "root_rx", "root_ry", "root_rz"};
}

AngleSequence load_angles(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.size() < 2) throw Error("io", path + ": missing header lines");
    const CsvHeader h = parse_csv_header(lines[0], "angles", path);

    const std::vector<std::string> cols = split_csv(lines[1]);
    if (cols.size() < 8 || cols[0] != "frame")
        throw Error("io", path + ":2: column header must start with frame and the root track");
    for (int k = 0; k < 6; ++k)
        if (cols[1 + k] != kRootCols[k])
            throw Error("io", path + ":2:" + std::to_string(k + 2) + ": expected column " +
                                  kRootCols[k] + ", found '" + cols[1 + k] + "'");
    AngleSequence a;
    a.fps = h.fps;
    a.skeleton_name = h.skeleton;
    for (std::size_t c = 7; c < cols.size(); ++c) a.channels.push_back(cols[c]);

    const std::size_t nc = a.channels.size();
    a.frames = lines.size() - 2;
    if (a.frames < 1) throw Error("io", path + ": no frames");
    a.values.resize(a.frames * nc);
    a.root.translation.resize(a.frames);
    a.root.orientation.resize(a.frames);
    for (std::size_t t = 0; t < a.frames; ++t) {
        const std::size_t lineno = t + 3;
        const std::vector<std::string> cells = split_csv(lines[t + 2]);
        if (cells.size() != 7 + nc)
            throw Error("io", path + ":" + std::to_string(lineno) + ": expected " +
                                  std::to_string(7 + nc) + " cells, found " + std::to_string(cells.size()));
        check_frame_cell(cells[0], t, path, lineno);
        for (int k = 0; k < 3; ++k) {
            a.root.translation[t][k] = parse_double_cell(cells[1 + k], path, lineno, 2 + k);
            a.root.orientation[t][k] = parse_double_cell(cells[4 + k], path, lineno, 5 + k);
        }
        for (std::size_t c = 0; c < nc; ++c)
            a.values[t * nc + c] = parse_double_cell(cells[7 + c], path, lineno, 8 + c);
    }
    for (double v : a.values)
        if (!std::isfinite(v)) throw Error("io", path + ": non-finite channel value");
    return a;
}

AngleSequence load_angles(const std::string& path, const SkeletonDef& sk) {
    AngleSequence a = load_angles(path);
    validate_angles(a, sk);
    return a;
}

void save_angles(const AngleSequence& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << "# " << kSchemaVersion << " angles fps=" << format_double(a.fps)
        << " skeleton=" << a.skeleton_name << "\n";
    out << "frame";
    for (const char* c : kRootCols) out << "," << c;
    for (const std::string& c : a.channels) out << "," << c;
    out << "\n";
    const std::size_t nc = a.channels.size();
    for (std::size_t t = 0; t < a.frames; ++t) {
        out << t;
        for (int k = 0; k < 3; ++k) out << "," << format_double(a.root.translation[t][k]);
        for (int k = 0; k < 3; ++k) out << "," << format_double(a.root.orientation[t][k]);
        for (std::size_t c = 0; c < nc; ++c) out << "," << format_double(a.values[t * nc + c]);
        out << "\n";
    }
    if (!out) throw Error("io", "write failed for " + path);
}

// ---------------------------------------------------------------------------
// codebooks

namespace {

json codebook_to_json(const Codebook& cb) {
    json doc;
    doc["channel"] = cb.channel;
    doc["L"] = cb.L;
    doc["K"] = cb.K();
    doc["centroids"] = cb.centroids;
    doc["training"] = {{"n_segments", cb.training.n_segments},
                       {"seed", cb.training.seed},
                       {"inertia", cb.training.inertia}};
    return doc;
}

Codebook codebook_from_json(const json& doc, const std::string& path) {
    Codebook cb;
    cb.channel = doc.at("channel").get<std::string>();
    cb.L = doc.at("L").get<std::size_t>();
    const std::size_t k = doc.at("K").get<std::size_t>();
    cb.centroids = doc.at("centroids").get<std::vector<std::vector<double>>>();
    if (cb.centroids.size() != k)
        throw Error("io", path + ": channel " + cb.channel + " declares K=" + std::to_string(k) +
                              " but holds " + std::to_string(cb.centroids.size()) + " centroids");
    for (const auto& c : cb.centroids)
        if (c.size() != cb.L)
            throw Error("io", path + ": channel " + cb.channel + " declares L=" + std::to_string(cb.L) +
                                  " but a centroid has " + std::to_string(c.size()) + " elements");
    if (k == 0) throw Error("io", path + ": channel " + cb.channel + " has no centroids");
    const auto& tr = doc.at("training");
    cb.training.n_segments = tr.at("n_segments").get<std::size_t>();
    cb.training.seed = tr.at("seed").get<std::uint64_t>();
    cb.training.inertia = tr.at("inertia").get<double>();
    return cb;
}

json load_json_checked(const std::string& path, const std::string& expected_kind) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
    if (!doc.contains("schema") || doc["schema"] != kSchemaVersion)
        throw Error("io", path + ": schema version mismatch");
    if (!doc.contains("kind") || doc["kind"] != expected_kind)
        throw Error("io", path + ": expected a " + expected_kind + " document");
    return doc;
}

void write_json(const json& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw Error("io", "write failed for " + path);
}

}  // namespace

Codebook load_codebook(const std::string& path) {
    const json doc = load_json_checked(path, "codebook");
    try {
        return codebook_from_json(doc, path);
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
}

void save_codebook(const Codebook& cb, const std::string& path, const std::string& skeleton_name) {
    json doc = codebook_to_json(cb);
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "codebook";
    doc["skeleton"] = skeleton_name;
    write_json(doc, path);
}

CodebookSet load_codebooks(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
    if (!doc.contains("schema") || doc["schema"] != kSchemaVersion)
        throw Error("io", path + ": schema version mismatch");
    try {
        CodebookSet out;
        if (doc.at("kind") == "codebook") {
            Codebook cb = codebook_from_json(doc, path);
            out.emplace(cb.channel, std::move(cb));
            return out;
        }
        if (doc.at("kind") != "codebooks")
            throw Error("io", path + ": expected a codebook or codebooks document");
        for (const json& entry : doc.at("codebooks")) {
            Codebook cb = codebook_from_json(entry, path);
            const std::string name = cb.channel;
            if (!out.emplace(name, std::move(cb)).second)
                throw Error("io", path + ": duplicate codebook for channel " + name);
        }
        return out;
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
}

void save_codebooks(const CodebookSet& cbs, const std::string& path, const std::string& skeleton_name) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "codebooks";
    doc["skeleton"] = skeleton_name;
    json arr = json::array();
    for (const auto& [name, cb] : cbs) arr.push_back(codebook_to_json(cb));
    doc["codebooks"] = arr;
    write_json(doc, path);
}

// ---------------------------------------------------------------------------
// token streams

EncodedMotion load_tokens(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw Error("io", path + ": missing header line");
    std::istringstream ss(lines[0]);
    std::string hash, schema, kind, fps_field, sk_field, frames_field;
    ss >> hash >> schema >> kind >> fps_field >> sk_field >> frames_field;
    if (hash != "#" || schema != kSchemaVersion || kind != "tokens")
        throw Error("io", path + ":1: malformed token header");
    if (fps_field.rfind("fps=", 0) != 0 || sk_field.rfind("skeleton=", 0) != 0 ||
        frames_field.rfind("frames=", 0) != 0)
        throw Error("io", path + ":1: malformed header fields");
    EncodedMotion e;
    e.fps = parse_double_cell(fps_field.substr(4), path, 1, 1);
    e.skeleton_name = sk_field.substr(9);
    e.frames = static_cast<std::size_t>(parse_double_cell(frames_field.substr(7), path, 1, 1));

    if (lines.size() < 1 + e.frames)
        throw Error("io", path + ": expected " + std::to_string(e.frames) + " root lines");
    e.root.translation.resize(e.frames);
    e.root.orientation.resize(e.frames);
    for (std::size_t t = 0; t < e.frames; ++t) {
        const std::size_t lineno = t + 2;
        try {
            const json j = json::parse(lines[1 + t]);
            if (j.at("frame").get<std::size_t>() != t)
                throw Error("io", path + ":" + std::to_string(lineno) + ": root lines out of order");
            for (int k = 0; k < 3; ++k) {
                e.root.translation[t][k] = j.at("rt").at(k).get<double>();
                e.root.orientation[t][k] = j.at("rr").at(k).get<double>();
            }
        } catch (const json::exception& ex) {
            throw Error("io", path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
    for (std::size_t i = 1 + e.frames; i < lines.size(); ++i) {
        try {
            const json j = json::parse(lines[i]);
            LetterToken tok;
            tok.channel = j.at("channel").get<std::string>();
            tok.s = j.at("s").get<std::int64_t>();
            tok.scale = j.at("scale").get<double>();
            tok.bias = j.at("bias").get<double>();
            const std::int64_t length = j.at("length").get<std::int64_t>();
            if (length < 2)
                throw Error("io", path + ":" + std::to_string(i + 1) + ": token length must be >= 2, found " +
                                      std::to_string(length));
            tok.length = static_cast<std::size_t>(length);
            tok.start = j.at("start").get<std::size_t>();
            auto* stream = [&]() -> std::vector<LetterToken>* {
                for (auto& [name, tokens] : e.streams)
                    if (name == tok.channel) return &tokens;
                e.streams.push_back({tok.channel, {}});
                return &e.streams.back().second;
            }();
            if (!stream->empty() && tok.start <= stream->back().start)
                throw Error("io", path + ":" + std::to_string(i + 1) + ": out-of-order start frames in channel " +
                                      tok.channel);
            stream->push_back(std::move(tok));
        } catch (const json::exception& ex) {
            throw Error("io", path + ":" + std::to_string(i + 1) + ": " + ex.what());
        }
    }
    return e;
}

EncodedMotion load_tokens(const std::string& path, const CodebookSet& cbs) {
    EncodedMotion e = load_tokens(path);
    for (const auto& [channel, tokens] : e.streams) {
        auto it = cbs.find(channel);
        if (it == cbs.end()) throw Error("io", path + ": unknown channel " + channel);
        for (const LetterToken& t : tokens)
            if (t.s != kHoldLetter && (t.s < 0 || static_cast<std::size_t>(t.s) >= it->second.K()))
                throw Error("io", path + ": channel " + channel + ": shape index " + std::to_string(t.s) +
                                      " outside codebook (K=" + std::to_string(it->second.K()) + ")");
    }
    return e;
}

void save_tokens(const EncodedMotion& e, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << "# " << kSchemaVersion << " tokens fps=" << format_double(e.fps)
        << " skeleton=" << e.skeleton_name << " frames=" << e.frames << "\n";
    for (std::size_t t = 0; t < e.frames; ++t) {
        json j;
        j["frame"] = t;
        j["rt"] = {e.root.translation[t][0], e.root.translation[t][1], e.root.translation[t][2]};
        j["rr"] = {e.root.orientation[t][0], e.root.orientation[t][1], e.root.orientation[t][2]};
        out << j.dump() << "\n";
    }
    for (const auto& [name, tokens] : e.streams) {
        for (const LetterToken& t : tokens) {
            json j;
            j["channel"] = t.channel;
            j["s"] = t.s;
            j["scale"] = t.scale;
            j["bias"] = t.bias;
            j["length"] = t.length;
            j["start"] = t.start;
            out << j.dump() << "\n";
        }
    }
    if (!out) throw Error("io", "write failed for " + path);
}

// ---------------------------------------------------------------------------
// evaluation reports

namespace {

json score_to_json(const ChannelScore& s) {
    json j;
    j["rmse"] = s.rmse;
    j["degenerate"] = s.degenerate;
    if (s.degenerate) {
        j["nmse"] = nullptr;
        j["r2"] = nullptr;
    } else {
        j["nmse"] = s.nmse;
        j["r2"] = s.r2;
    }
    return j;
}

ChannelScore score_from_json(const json& j) {
    ChannelScore s;
    s.rmse = j.at("rmse").get<double>();
    s.degenerate = j.at("degenerate").get<bool>();
    if (s.degenerate) {
        s.nmse = std::numeric_limits<double>::quiet_NaN();
        s.r2 = std::numeric_limits<double>::quiet_NaN();
    } else {
        s.nmse = j.at("nmse").get<double>();
        s.r2 = j.at("r2").get<double>();
    }
    return s;
}

}  // namespace

EvalReport load_report(const std::string& path) {
    const json doc = load_json_checked(path, "report");
    try {
        EvalReport r;
        r.skeleton_name = doc.at("skeleton").get<std::string>();
        r.split.train_fraction = doc.at("split").at("train_fraction").get<double>();
        r.split.seed = doc.at("split").at("seed").get<std::uint64_t>();
        for (const auto& [name, k] : doc.at("codebook_sizes").items())
            r.codebook_sizes[name] = k.get<std::size_t>();
        for (const auto& [name, s] : doc.at("per_channel").items())
            r.per_channel[name] = score_from_json(s);
        r.aggregate = score_from_json(doc.at("aggregate"));
        r.kinematic_roundtrip = score_from_json(doc.at("kinematic_roundtrip"));
        return r;
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
}

void save_report(const EvalReport& r, const std::string& path) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "report";
    doc["skeleton"] = r.skeleton_name;
    doc["split"] = {{"train_fraction", r.split.train_fraction}, {"seed", r.split.seed}};
    json sizes = json::object();
    for (const auto& [name, k] : r.codebook_sizes) sizes[name] = k;
    doc["codebook_sizes"] = sizes;
    json per = json::object();
    for (const auto& [name, s] : r.per_channel) per[name] = score_to_json(s);
    doc["per_channel"] = per;
    doc["aggregate"] = score_to_json(r.aggregate);
    doc["kinematic_roundtrip"] = score_to_json(r.kinematic_roundtrip);
    write_json(doc, path);
}

// ---------------------------------------------------------------------------
// pipeline config

PipelineConfig load_pipeline_config(const std::string& path) {
    const json doc = load_json_checked(path, "pipeline");
    try {
        PipelineConfig cfg;
        cfg.skeleton_path = doc.value("skeleton", "");
        const auto& seg = doc.at("segmentation");
        cfg.options.segmentation.smooth_window = seg.at("smooth_window").get<std::size_t>();
        cfg.options.segmentation.min_prominence = seg.at("min_prominence").get<double>();
        cfg.options.segmentation.min_length = seg.at("min_length").get<std::size_t>();
        cfg.options.segmentation.validate();
        cfg.options.L = doc.at("L").get<std::size_t>();
        cfg.options.k_min = doc.at("k_range").at(0).get<std::size_t>();
        cfg.options.k_max = doc.at("k_range").at(1).get<std::size_t>();
        cfg.options.seed = doc.at("seed").get<std::uint64_t>();
        cfg.split.train_fraction = doc.at("split").at("train_fraction").get<double>();
        cfg.split.seed = doc.at("split").at("seed").get<std::uint64_t>();
        cfg.out_dir = doc.value("out_dir", "");
        if (cfg.options.L < 2) throw Error("io", path + ": L must be >= 2");
        if (cfg.options.k_min < 1 || cfg.options.k_max < cfg.options.k_min)
            throw Error("io", path + ": invalid k_range");
        if (!(cfg.split.train_fraction > 0 && cfg.split.train_fraction < 1))
            throw Error("io", path + ": train_fraction must be in (0, 1)");
        return cfg;
    } catch (const json::exception& e) {
        throw Error("io", path + ": " + e.what());
    }
}

void save_pipeline_config(const PipelineConfig& cfg, const std::string& path) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "pipeline";
    doc["skeleton"] = cfg.skeleton_path;
    doc["segmentation"] = {{"smooth_window", cfg.options.segmentation.smooth_window},
                           {"min_prominence", cfg.options.segmentation.min_prominence},
                           {"min_length", cfg.options.segmentation.min_length}};
    doc["L"] = cfg.options.L;
    doc["k_range"] = {cfg.options.k_min, cfg.options.k_max};
    doc["seed"] = cfg.options.seed;
    doc["split"] = {{"train_fraction", cfg.split.train_fraction}, {"seed", cfg.split.seed}};
    doc["out_dir"] = cfg.out_dir;
    write_json(doc, path);
}

SkeletonDef resolve_skeleton(const std::string& path_or_empty) {
    if (path_or_empty.empty() || path_or_empty == "builtin") return default_skeleton();
    return load_skeleton(path_or_empty);
}

}  // namespace lingomotion

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingomotion/codec.hpp"
#include "lingomotion/metrics.hpp"
#include "lingomotion/skeleton.hpp"
#include "lingomotion/types.hpp"

namespace lingomotion {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// motion CSV: "# lingomotion/1 motion fps=<f> skeleton=<name>", then
// "frame,<joint>_x,<joint>_y,<joint>_z,...", one row per frame
MotionSequence load_motion(const std::string& path);
MotionSequence load_motion(const std::string& path, const SkeletonDef& sk);
void save_motion(const MotionSequence& m, const std::string& path);

// angle CSV: "# lingomotion/1 angles fps=<f> skeleton=<name>", then
// "frame,root_tx,root_ty,root_tz,root_rx,root_ry,root_rz,<channel>..."
AngleSequence load_angles(const std::string& path);
AngleSequence load_angles(const std::string& path, const SkeletonDef& sk);
void save_angles(const AngleSequence& a, const std::string& path);

// codebook documents (JSON); a file holds either one channel or a bundle
Codebook load_codebook(const std::string& path);
void save_codebook(const Codebook& cb, const std::string& path, const std::string& skeleton_name);
CodebookSet load_codebooks(const std::string& path);
void save_codebooks(const CodebookSet& cbs, const std::string& path, const std::string& skeleton_name);

// token stream: one header line, one JSON line per root frame, then one JSON
// line per token in stream order
EncodedMotion load_tokens(const std::string& path);
EncodedMotion load_tokens(const std::string& path, const CodebookSet& cbs);
void save_tokens(const EncodedMotion& e, const std::string& path);

EvalReport load_report(const std::string& path);
void save_report(const EvalReport& r, const std::string& path);

struct PipelineConfig {
    std::string skeleton_path;  // empty = built-in default skeleton
    PipelineOptions options;
    SplitSpec split;
    std::string out_dir;
};

PipelineConfig load_pipeline_config(const std::string& path);
void save_pipeline_config(const PipelineConfig& cfg, const std::string& path);

SkeletonDef resolve_skeleton(const std::string& path_or_empty);

}  // namespace lingomotion

#include "lingomotion/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>

#include "lingomotion/error.hpp"
#include "lingomotion/geometry.hpp"

namespace lingomotion {

using nlohmann::json;

int SkeletonDef::joint_index(const std::string& n) const {
    for (std::size_t i = 0; i < joints.size(); ++i)
        if (joints[i].name == n) return static_cast<int>(i);
    return -1;
}

int SkeletonDef::channel_index(const std::string& n) const {
    for (std::size_t i = 0; i < channels.size(); ++i)
        if (channels[i].name == n) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> SkeletonDef::channel_names() const {
    std::vector<std::string> out;
    out.reserve(channels.size());
    for (const auto& c : channels) out.push_back(c.name);
    return out;
}

std::vector<std::string> SkeletonDef::joint_names() const {
    std::vector<std::string> out;
    out.reserve(joints.size());
    for (const auto& j : joints) out.push_back(j.name);
    return out;
}

namespace {

Eigen::Vector3d to_eigen(const Vec3& v) { return {v[0], v[1], v[2]}; }

// The signed coordinate axis closest to v; v must clearly prefer one axis.
Eigen::Vector3d nearest_axis(const Eigen::Vector3d& v, const std::string& what) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(v[k]) > std::abs(v[best])) best = k;
    if (std::abs(v[best]) < 0.7)
        throw Error("skeleton", "ambiguous canonical axis for " + what +
                                    " (neutral segment not close enough to a coordinate axis)");
    Eigen::Vector3d axis = Eigen::Vector3d::Zero();
    axis[best] = v[best] >= 0 ? 1.0 : -1.0;
    return axis;
}

int plane_component(LcsPlane p) {
    switch (p) {
        case LcsPlane::yz: return 0;  // normal x
        case LcsPlane::xz: return 1;  // normal y
        case LcsPlane::xy: return 2;  // normal z
    }
    return 2;
}

}  // namespace

void SkeletonDef::finalize() {
    const std::size_t nj = joints.size();
    if (nj == 0) throw Error("skeleton", "no joints defined");
    if (root_joint < 0 || static_cast<std::size_t>(root_joint) >= nj)
        throw Error("skeleton", "root joint index out of range");
    if (joints[root_joint].parent != -1) throw Error("skeleton", "root joint must have no parent");

    {
        std::set<std::string> seen;
        for (const auto& j : joints)
            if (!seen.insert(j.name).second) throw Error("skeleton", "duplicate joint name " + j.name);
    }

    children.assign(nj, {});
    for (std::size_t j = 0; j < nj; ++j) {
        const int p = joints[j].parent;
        if (static_cast<int>(j) == root_joint) continue;
        if (p < 0 || static_cast<std::size_t>(p) >= nj || p == static_cast<int>(j))
            throw Error("skeleton", "joint " + joints[j].name + " has an invalid parent");
        children[p].push_back(static_cast<int>(j));
    }

    // breadth-first order doubles as the cycle check
    topo_order.clear();
    topo_order.push_back(root_joint);
    for (std::size_t head = 0; head < topo_order.size(); ++head)
        for (int c : children[topo_order[head]]) topo_order.push_back(c);
    if (topo_order.size() != nj)
        throw Error("skeleton", "joint graph is not a tree rooted at " + joints[root_joint].name);

    for (std::size_t j = 0; j < nj; ++j) {
        if (static_cast<int>(j) == root_joint) continue;
        const Eigen::Vector3d d = to_eigen(joints[j].neutral) - to_eigen(joints[joints[j].parent].neutral);
        if (joints[j].bone_length <= 0.0)
            throw Error("skeleton", "bone length for " + joints[j].name + " must be positive");
        if (std::abs(d.norm() - joints[j].bone_length) > 1e-9)
            throw Error("skeleton", "bone length for " + joints[j].name +
                                        " disagrees with the neutral pose offset");
    }

    if (left_hip < 0 || right_hip < 0 || spine_ref < 0)
        throw Error("skeleton", "pelvis frame markers (left hip, right hip, spine) must be set");
    // Exact invertibility of the pelvis frame needs a laterally symmetric hip
    // pair and a vertical spine offset in the neutral pose.
    {
        const Eigen::Vector3d hips =
            to_eigen(joints[right_hip].neutral) - to_eigen(joints[left_hip].neutral);
        if (hips.x() <= 0 || std::abs(hips.y()) > 1e-12 || std::abs(hips.z()) > 1e-12)
            throw Error("skeleton", "neutral hip offset must lie along +x (right minus left)");
        const Eigen::Vector3d spine =
            to_eigen(joints[spine_ref].neutral) - to_eigen(joints[root_joint].neutral);
        if (spine.y() <= 0 || std::abs(spine.x()) > 1e-12 || std::abs(spine.z()) > 1e-12)
            throw Error("skeleton", "neutral spine offset must lie along +y");
    }

    // resolve channels -> per-joint measurement table
    measurement.assign(nj, {});
    {
        std::set<std::string> seen;
        for (const auto& c : channels)
            if (!seen.insert(c.name).second) throw Error("skeleton", "duplicate channel name " + c.name);
    }
    for (std::size_t ci = 0; ci < channels.size(); ++ci) {
        const ChannelDef& c = channels[ci];
        if (c.joint < 0 || static_cast<std::size_t>(c.joint) >= nj)
            throw Error("skeleton", "channel " + c.name + " references an unknown joint");
        if (c.seg_from < 0 || c.seg_to < 0 || static_cast<std::size_t>(c.seg_from) >= nj ||
            static_cast<std::size_t>(c.seg_to) >= nj || c.seg_from == c.seg_to)
            throw Error("skeleton", "channel " + c.name + " has an invalid segment");
        if (c.sign != 1.0 && c.sign != -1.0)
            throw Error("skeleton", "channel " + c.name + " sign must be +1 or -1");
        if (!(c.range[0] < c.range[1]))
            throw Error("skeleton", "channel " + c.name + " range is empty");
        JointMeasurement& m = measurement[c.joint];
        if (c.kind == DofKind::bend) {
            if (c.twist) throw Error("skeleton", "channel " + c.name + ": bend channels cannot be twists");
            if (m.bend_channel >= 0)
                throw Error("skeleton", "joint " + joints[c.joint].name + " has two bend channels");
            if (c.seg_from != c.joint)
                throw Error("skeleton", "bend channel " + c.name + " must measure the joint's own child segment");
            m.bend_channel = static_cast<int>(ci);
            m.measurement_child = c.seg_to;
        } else if (c.twist) {
            if (m.twist_channel >= 0)
                throw Error("skeleton", "joint " + joints[c.joint].name + " has two twist channels");
            m.twist_channel = static_cast<int>(ci);
        } else {
            if (c.seg_from != c.joint)
                throw Error("skeleton", "channel " + c.name + " must measure a segment starting at its joint");
            if (m.measurement_child >= 0 && m.measurement_child != c.seg_to)
                throw Error("skeleton", "joint " + joints[c.joint].name +
                                            " has plane channels on different segments");
            m.measurement_child = c.seg_to;
            int& slot = plane_component(c.plane) == 0   ? m.plane_x_channel
                        : plane_component(c.plane) == 1 ? m.plane_y_channel
                                                        : m.plane_z_channel;
            if (slot >= 0)
                throw Error("skeleton", "joint " + joints[c.joint].name +
                                            " measures the same plane twice");
            slot = static_cast<int>(ci);
        }
    }
    for (std::size_t j = 0; j < nj; ++j) {
        const JointMeasurement& m = measurement[j];
        if (m.bend_channel >= 0 && (m.plane_x_channel >= 0 || m.plane_y_channel >= 0 || m.plane_z_channel >= 0))
            throw Error("skeleton", "joint " + joints[j].name + " mixes bend and plane channels");
        if (m.twist_channel >= 0 && m.measurement_child < 0)
            throw Error("skeleton", "joint " + joints[j].name + " has a twist channel but no measured segment");
    }

    // neutral frames, boresights, local bone directions (topological pass)
    neutral_frames.assign(nj, Eigen::Matrix3d::Identity());
    neutral_local.assign(nj, Eigen::Vector3d::Zero());
    for (int j : topo_order) {
        const Eigen::Matrix3d parent_frame =
            j == root_joint ? Eigen::Matrix3d::Identity() : neutral_frames[joints[j].parent];
        if (j != root_joint) {
            const Eigen::Vector3d d =
                (to_eigen(joints[j].neutral) - to_eigen(joints[joints[j].parent].neutral)).normalized();
            neutral_local[j] = parent_frame.transpose() * d;
        }
        JointMeasurement& m = measurement[j];
        Eigen::Matrix3d boresight = Eigen::Matrix3d::Identity();
        if (m.measurement_child >= 0) {
            const Eigen::Vector3d d =
                (to_eigen(joints[m.measurement_child].neutral) - to_eigen(joints[j].neutral)).normalized();
            const Eigen::Vector3d local = parent_frame.transpose() * d;
            m.canonical = nearest_axis(local, joints[j].name);
            boresight = shortest_arc(m.canonical, local);
            // channels must measure components orthogonal to the canonical axis
            for (int ch : {m.plane_x_channel, m.plane_y_channel, m.plane_z_channel}) {
                if (ch < 0) continue;
                if (std::abs(m.canonical[plane_component(channels[ch].plane)]) > 0.5)
                    throw Error("skeleton", "channel " + channels[ch].name +
                                                " measures along the neutral segment direction");
            }
        }
        m.boresight = boresight;
        neutral_frames[j] = parent_frame * boresight;
    }

    // zero-twist reference directions
    for (std::size_t j = 0; j < nj; ++j) {
        JointMeasurement& m = measurement[j];
        if (m.twist_channel < 0) continue;
        const ChannelDef& tc = channels[m.twist_channel];
        const int a = tc.seg_from, b = tc.seg_to;
        Eigen::Vector3d ref0;
        if (joints[a].parent == static_cast<int>(j) && joints[b].parent == static_cast<int>(j)) {
            // reference segment rigid to this joint's body (e.g. the collar line)
            ref0 = neutral_frames[j].transpose() *
                   (to_eigen(joints[b].neutral) - to_eigen(joints[a].neutral)).normalized();
            m.twist_ref_rigid = true;
        } else if (a == m.measurement_child && measurement[a].bend_channel >= 0) {
            // reference = the measured child's own bend segment; its
            // perpendicular projection points along the bend plane direction
            const JointMeasurement& cm = measurement[a];
            const double s = channels[cm.bend_channel].sign;
            const Eigen::Vector3d bend_dir = s * Eigen::Vector3d::UnitX().cross(cm.canonical);
            ref0 = cm.boresight * bend_dir;
            m.twist_ref_rigid = false;
        } else {
            throw Error("skeleton", "twist channel " + tc.name +
                                        " needs either a sibling segment or the measured child's bend segment");
        }
        // keep only the component perpendicular to the canonical axis
        ref0 -= ref0.dot(m.canonical) * m.canonical;
        if (ref0.norm() < 0.5)
            throw Error("skeleton", "twist channel " + tc.name + " reference is parallel to its axis");
        m.twist_ref0 = ref0.normalized();
    }
}

// ---------------------------------------------------------------------------
// default 22-joint skeleton, 28 channels

namespace {

struct JointSpec {
    const char* name;
    const char* parent;
    Vec3 neutral;
};

constexpr JointSpec kJoints[] = {
    {"pelvis", "", {0, 0, 0}},
    {"l_hip", "pelvis", {-0.09, -0.04, 0}},
    {"r_hip", "pelvis", {0.09, -0.04, 0}},
    {"spine1", "pelvis", {0, 0.11, 0}},
    {"l_knee", "l_hip", {-0.09, -0.46, 0}},
    {"r_knee", "r_hip", {0.09, -0.46, 0}},
    {"spine2", "spine1", {0, 0.22, 0}},
    {"l_ankle", "l_knee", {-0.09, -0.86, 0}},
    {"r_ankle", "r_knee", {0.09, -0.86, 0}},
    {"spine3", "spine2", {0, 0.34, 0}},
    {"l_foot", "l_ankle", {-0.09, -0.93, 0.13}},
    {"r_foot", "r_ankle", {0.09, -0.93, 0.13}},
    {"neck", "spine3", {0, 0.48, 0}},
    {"l_collar", "spine3", {-0.09, 0.37, 0}},
    {"r_collar", "spine3", {0.09, 0.37, 0}},
    {"head", "neck", {0, 0.58, 0}},
    {"l_shoulder", "l_collar", {-0.185, 0.40, 0}},
    {"r_shoulder", "r_collar", {0.185, 0.40, 0}},
    {"l_elbow", "l_shoulder", {-0.185, 0.13, 0}},
    {"r_elbow", "r_shoulder", {0.185, 0.13, 0}},
    {"l_wrist", "l_elbow", {-0.185, -0.12, 0}},
    {"r_wrist", "r_elbow", {0.185, -0.12, 0}},
};

struct ChannelSpec {
    const char* name;
    const char* joint;
    DofKind kind;
    LcsPlane plane;
    double sign;
    double lo, hi;
    const char* seg_from;
    const char* seg_to;
    bool twist;
};

constexpr ChannelSpec kChannels[] = {
    {"r_hip_flex", "r_hip", DofKind::plane_angle, LcsPlane::xy, 1, -60, 90, "r_hip", "r_knee", false},
    {"r_hip_add", "r_hip", DofKind::plane_angle, LcsPlane::yz, -1, -40, 50, "r_hip", "r_knee", false},
    {"r_hip_rot", "r_hip", DofKind::plane_angle, LcsPlane::yz, -1, -60, 60, "r_knee", "r_ankle", true},
    {"l_hip_flex", "l_hip", DofKind::plane_angle, LcsPlane::xy, 1, -60, 90, "l_hip", "l_knee", false},
    {"l_hip_add", "l_hip", DofKind::plane_angle, LcsPlane::yz, 1, -40, 50, "l_hip", "l_knee", false},
    {"l_hip_rot", "l_hip", DofKind::plane_angle, LcsPlane::yz, 1, -60, 60, "l_knee", "l_ankle", true},
    {"r_knee_bend", "r_knee", DofKind::bend, LcsPlane::xy, 1, 0, 150, "r_knee", "r_ankle", false},
    {"l_knee_bend", "l_knee", DofKind::bend, LcsPlane::xy, 1, 0, 150, "l_knee", "l_ankle", false},
    {"r_ankle_dorsi", "r_ankle", DofKind::plane_angle, LcsPlane::xz, 1, -50, 40, "r_ankle", "r_foot", false},
    {"r_ankle_inv", "r_ankle", DofKind::plane_angle, LcsPlane::yz, -1, -35, 35, "r_ankle", "r_foot", false},
    {"l_ankle_dorsi", "l_ankle", DofKind::plane_angle, LcsPlane::xz, 1, -50, 40, "l_ankle", "l_foot", false},
    {"l_ankle_inv", "l_ankle", DofKind::plane_angle, LcsPlane::yz, 1, -35, 35, "l_ankle", "l_foot", false},
    {"torso_flex", "spine1", DofKind::plane_angle, LcsPlane::xy, 1, -40, 75, "spine1", "spine2", false},
    {"torso_lat", "spine1", DofKind::plane_angle, LcsPlane::yz, 1, -35, 35, "spine1", "spine2", false},
    {"torso_rot", "spine3", DofKind::plane_angle, LcsPlane::yz, 1, -45, 45, "l_collar", "r_collar", true},
    {"thorax_flex", "spine3", DofKind::plane_angle, LcsPlane::xy, 1, -30, 45, "spine3", "neck", false},
    {"head_flex", "neck", DofKind::plane_angle, LcsPlane::xy, 1, -50, 60, "neck", "head", false},
    {"head_rot", "neck", DofKind::plane_angle, LcsPlane::yz, 1, -45, 45, "neck", "head", false},
    {"r_collar_elev", "r_collar", DofKind::plane_angle, LcsPlane::xz, 1, -15, 30, "r_collar", "r_shoulder", false},
    {"l_collar_elev", "l_collar", DofKind::plane_angle, LcsPlane::xz, 1, -15, 30, "l_collar", "l_shoulder", false},
    {"r_sh_flex", "r_shoulder", DofKind::plane_angle, LcsPlane::xy, 1, -60, 90, "r_shoulder", "r_elbow", false},
    {"r_sh_abd", "r_shoulder", DofKind::plane_angle, LcsPlane::yz, 1, -40, 90, "r_shoulder", "r_elbow", false},
    {"r_sh_rot", "r_shoulder", DofKind::plane_angle, LcsPlane::yz, -1, -90, 90, "r_elbow", "r_wrist", true},
    {"l_sh_flex", "l_shoulder", DofKind::plane_angle, LcsPlane::xy, 1, -60, 90, "l_shoulder", "l_elbow", false},
    {"l_sh_abd", "l_shoulder", DofKind::plane_angle, LcsPlane::yz, -1, -40, 90, "l_shoulder", "l_elbow", false},
    {"l_sh_rot", "l_shoulder", DofKind::plane_angle, LcsPlane::yz, 1, -90, 90, "l_elbow", "l_wrist", true},
    {"r_elbow_bend", "r_elbow", DofKind::bend, LcsPlane::xy, -1, 0, 150, "r_elbow", "r_wrist", false},
    {"l_elbow_bend", "l_elbow", DofKind::bend, LcsPlane::xy, -1, 0, 150, "l_elbow", "l_wrist", false},
};

}  // namespace

SkeletonDef default_skeleton() {
    SkeletonDef sk;
    sk.name = "smpl22";
    sk.euler_order = "zxy";
    for (const auto& js : kJoints) {
        JointDef j;
        j.name = js.name;
        j.parent = *js.parent ? sk.joint_index(js.parent) : -1;
        j.neutral = js.neutral;
        if (j.parent >= 0) {
            const Eigen::Vector3d d = to_eigen(js.neutral) - to_eigen(sk.joints[j.parent].neutral);
            j.bone_length = d.norm();
        }
        sk.joints.push_back(j);
    }
    sk.root_joint = sk.joint_index("pelvis");
    sk.left_hip = sk.joint_index("l_hip");
    sk.right_hip = sk.joint_index("r_hip");
    sk.spine_ref = sk.joint_index("spine1");
    for (const auto& cs : kChannels) {
        ChannelDef c;
        c.name = cs.name;
        c.joint = sk.joint_index(cs.joint);
        c.kind = cs.kind;
        c.plane = cs.plane;
        c.sign = cs.sign;
        c.range = {cs.lo, cs.hi};
        c.seg_from = sk.joint_index(cs.seg_from);
        c.seg_to = sk.joint_index(cs.seg_to);
        c.twist = cs.twist;
        sk.channels.push_back(c);
    }
    sk.finalize();
    return sk;
}

// ---------------------------------------------------------------------------
// config file round-trip

namespace {

std::string plane_name(LcsPlane p) {
    switch (p) {
        case LcsPlane::xy: return "xy";
        case LcsPlane::yz: return "yz";
        case LcsPlane::xz: return "xz";
    }
    return "xy";
}

LcsPlane parse_plane(const std::string& s) {
    if (s == "xy") return LcsPlane::xy;
    if (s == "yz") return LcsPlane::yz;
    if (s == "xz") return LcsPlane::xz;
    throw Error("skeleton", "unknown plane '" + s + "'");
}

}  // namespace

SkeletonDef load_skeleton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open skeleton config " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("skeleton", path + ": " + e.what());
    }
    try {
        if (doc.at("schema").get<std::string>() != kSchemaVersion)
            throw Error("skeleton", path + ": schema version mismatch");
        if (doc.at("kind").get<std::string>() != "skeleton")
            throw Error("skeleton", path + ": not a skeleton config");
        SkeletonDef sk;
        sk.name = doc.at("name").get<std::string>();
        sk.euler_order = doc.at("euler_order").get<std::string>();
        if (sk.euler_order != "zxy")
            throw Error("skeleton", path + ": unsupported euler order '" + sk.euler_order + "'");
        for (const auto& jj : doc.at("joints")) {
            JointDef j;
            j.name = jj.at("name").get<std::string>();
            if (!jj.at("parent").is_null()) {
                j.parent = sk.joint_index(jj.at("parent").get<std::string>());
                if (j.parent < 0)
                    throw Error("skeleton", path + ": joint " + j.name +
                                                " listed before its parent " +
                                                jj.at("parent").get<std::string>());
                j.bone_length = jj.at("length").get<double>();
            }
            const auto& n = jj.at("neutral");
            j.neutral = {n.at(0).get<double>(), n.at(1).get<double>(), n.at(2).get<double>()};
            sk.joints.push_back(j);
        }
        const auto& pf = doc.at("pelvis_frame");
        sk.root_joint = sk.joint_index(doc.at("root").get<std::string>());
        sk.left_hip = sk.joint_index(pf.at("left_hip").get<std::string>());
        sk.right_hip = sk.joint_index(pf.at("right_hip").get<std::string>());
        sk.spine_ref = sk.joint_index(pf.at("spine").get<std::string>());
        for (const auto& cc : doc.at("channels")) {
            ChannelDef c;
            c.name = cc.at("name").get<std::string>();
            c.joint = sk.joint_index(cc.at("joint").get<std::string>());
            const std::string kind = cc.at("kind").get<std::string>();
            if (kind == "bend") {
                c.kind = DofKind::bend;
            } else if (kind == "plane_angle") {
                c.kind = DofKind::plane_angle;
                c.plane = parse_plane(cc.at("plane").get<std::string>());
            } else {
                throw Error("skeleton", path + ": unknown channel kind '" + kind + "'");
            }
            c.sign = cc.at("sign").get<double>();
            c.range = {cc.at("range").at(0).get<double>(), cc.at("range").at(1).get<double>()};
            c.seg_from = sk.joint_index(cc.at("segment").at(0).get<std::string>());
            c.seg_to = sk.joint_index(cc.at("segment").at(1).get<std::string>());
            c.twist = cc.value("twist", false);
            if (c.joint < 0 || c.seg_from < 0 || c.seg_to < 0)
                throw Error("skeleton", path + ": channel " + c.name + " references an unknown joint");
            sk.channels.push_back(c);
        }
        sk.finalize();
        return sk;
    } catch (const json::exception& e) {
        throw Error("skeleton", path + ": " + e.what());
    }
}

void save_skeleton(const SkeletonDef& sk, const std::string& path) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "skeleton";
    doc["name"] = sk.name;
    doc["euler_order"] = sk.euler_order;
    doc["root"] = sk.joints[sk.root_joint].name;
    doc["pelvis_frame"] = {{"left_hip", sk.joints[sk.left_hip].name},
                           {"right_hip", sk.joints[sk.right_hip].name},
                           {"spine", sk.joints[sk.spine_ref].name}};
    json joints = json::array();
    for (const auto& j : sk.joints) {
        json jj;
        jj["name"] = j.name;
        if (j.parent < 0) {
            jj["parent"] = nullptr;
        } else {
            jj["parent"] = sk.joints[j.parent].name;
            jj["length"] = j.bone_length;
        }
        jj["neutral"] = {j.neutral[0], j.neutral[1], j.neutral[2]};
        joints.push_back(jj);
    }
    doc["joints"] = joints;
    json chans = json::array();
    for (const auto& c : sk.channels) {
        json cc;
        cc["name"] = c.name;
        cc["joint"] = sk.joints[c.joint].name;
        cc["kind"] = c.kind == DofKind::bend ? "bend" : "plane_angle";
        if (c.kind == DofKind::plane_angle) cc["plane"] = plane_name(c.plane);
        cc["sign"] = c.sign;
        cc["range"] = {c.range[0], c.range[1]};
        cc["segment"] = {sk.joints[c.seg_from].name, sk.joints[c.seg_to].name};
        if (c.twist) cc["twist"] = true;
        chans.push_back(cc);
    }
    doc["channels"] = chans;
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot write " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace lingomotion

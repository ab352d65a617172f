#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lingomotion/types.hpp"

namespace lingomotion {

enum class DofKind { plane_angle, bend };

// Which coordinate plane of the local frame a plane-angle channel measures
// against; the channel value is sign * asin(unit segment . plane normal).
enum class LcsPlane { xy, yz, xz };  // normals z, x, y

struct ChannelDef {
    std::string name;
    int joint = -1;  // joint whose local frame hosts the measurement
    DofKind kind = DofKind::plane_angle;
    LcsPlane plane = LcsPlane::xy;  // plane-angle channels only
    double sign = 1.0;
    std::array<double, 2> range{-180.0, 180.0};  // physiological bounds, degrees
    // measured segment as a joint pair [from, to]; for bend channels this is
    // the child segment (the parent segment is parent(joint) -> joint)
    int seg_from = -1;
    int seg_to = -1;
    // axial-rotation realization: the channel reads the projection of the
    // segment above onto the plane perpendicular to the joint's measured
    // child segment
    bool twist = false;
};

struct JointDef {
    std::string name;
    int parent = -1;  // -1 = root
    Vec3 neutral{0, 0, 0};
    double bone_length = 0.0;  // |neutral - parent.neutral|, 0 for root
};

// Derived per measured joint at load time; everything needed to make
// measurement and forward kinematics exact inverses of each other.
struct JointMeasurement {
    int measurement_child = -1;
    Eigen::Vector3d canonical;         // signed axis the neutral segment maps to
    Eigen::Matrix3d boresight;         // B: aligns canonical with the neutral segment
    int plane_x_channel = -1;          // channel measuring the x component, if any
    int plane_y_channel = -1;
    int plane_z_channel = -1;
    int bend_channel = -1;
    int twist_channel = -1;
    Eigen::Vector3d twist_ref0{0, 0, 0};  // zero-twist reference direction (local, pre-direction-rotation)
    bool twist_ref_rigid = false;          // reference segment rigid to this joint's body
};

class SkeletonDef {
public:
    std::string name;
    std::string euler_order = "zxy";  // composition R = Rz * Rx * Ry
    std::vector<JointDef> joints;
    std::vector<ChannelDef> channels;
    int root_joint = 0;
    int left_hip = -1, right_hip = -1, spine_ref = -1;  // pelvis frame markers

    // derived (finalize())
    std::vector<std::vector<int>> children;
    std::vector<JointMeasurement> measurement;    // indexed by joint, unmeasured = defaults
    std::vector<Eigen::Vector3d> neutral_local;   // bone direction of each joint in its parent's neutral body frame
    std::vector<Eigen::Matrix3d> neutral_frames;  // neutral body frame of each joint (global)
    std::vector<int> topo_order;

    std::size_t joint_count() const { return joints.size(); }
    std::size_t channel_count() const { return channels.size(); }
    int joint_index(const std::string& n) const;        // -1 if absent
    int channel_index(const std::string& n) const;      // -1 if absent
    bool joint_measured(int j) const { return measurement[j].measurement_child >= 0; }

    std::vector<std::string> channel_names() const;
    std::vector<std::string> joint_names() const;

    // Validates the definition and computes all derived tables. Throws Error
    // with a descriptive message on any inconsistency.
    void finalize();
};

// The default 22-joint skeleton with the 28-channel table.
SkeletonDef default_skeleton();

SkeletonDef load_skeleton(const std::string& path);
void save_skeleton(const SkeletonDef& sk, const std::string& path);

}  // namespace lingomotion

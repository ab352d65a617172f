#pragma once

#include <Eigen/Dense>

#include "lingomotion/parallel.hpp"
#include "lingomotion/skeleton.hpp"
#include "lingomotion/types.hpp"

namespace lingomotion {

struct LocalFrame {
    Eigen::Vector3d origin;
    Eigen::Matrix3d axes;  // columns = local X, Y, Z in global coordinates
};

// Pelvis frame from one frame's joint positions:
//   X = unit(rightHip - leftHip), up = unit(spine - pelvis),
//   Z = unit(X x up), Y = Z x X, origin = pelvis.
// Throws on a degenerate pose (coincident hips, or spine parallel to the
// hip axis within 1e-6 rad); frame_index only labels the error message.
LocalFrame pelvis_frame(const MotionSequence& m, const SkeletonDef& sk, std::size_t frame_index);

// Euler helpers for the declared z-x-y order: R = Rz(rz) * Rx(rx) * Ry(ry),
// angles in degrees.
Eigen::Matrix3d euler_to_matrix(const Vec3& rxyz);
Vec3 matrix_to_euler(const Eigen::Matrix3d& R);

AngleSequence positions_to_angles(const MotionSequence& m, const SkeletonDef& sk,
                                  RunPolicy policy = RunPolicy::parallel);

MotionSequence angles_to_positions(const AngleSequence& a, const SkeletonDef& sk,
                                   RunPolicy policy = RunPolicy::parallel);

// The neutral pose (all channels zero, identity root at the given
// translation), one frame.
std::vector<Vec3> neutral_pose_positions(const SkeletonDef& sk, const Vec3& root_translation = {0, 0, 0});

void validate_motion(const MotionSequence& m);                          // structural invariants
void validate_motion(const MotionSequence& m, const SkeletonDef& sk);   // + skeleton consistency
void validate_angles(const AngleSequence& a, const SkeletonDef& sk);

}  // namespace lingomotion

#include "lingomotion/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lingomotion/error.hpp"
#include "lingomotion/geometry.hpp"

namespace lingomotion {

namespace {

Eigen::Vector3d to_eigen(const Vec3& v) { return {v[0], v[1], v[2]}; }
Vec3 from_eigen(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

int canonical_component(const Eigen::Vector3d& c) {
    for (int k = 0; k < 3; ++k)
        if (c[k] != 0.0) return k;
    return 1;
}

LocalFrame pelvis_frame_at(const Vec3* pos, const SkeletonDef& sk, std::size_t frame_index) {
    const Eigen::Vector3d lh = to_eigen(pos[sk.left_hip]);
    const Eigen::Vector3d rh = to_eigen(pos[sk.right_hip]);
    const Eigen::Vector3d pv = to_eigen(pos[sk.root_joint]);
    const Eigen::Vector3d sp = to_eigen(pos[sk.spine_ref]);
    const std::string where = " at frame " + std::to_string(frame_index);

    Eigen::Vector3d x = rh - lh;
    if (x.norm() < 1e-9) throw Error("kinematics", "degenerate pose" + where + ": hip centers coincide");
    x.normalize();
    Eigen::Vector3d up = sp - pv;
    if (up.norm() < 1e-9) throw Error("kinematics", "degenerate pose" + where + ": spine marker coincides with pelvis");
    up.normalize();
    Eigen::Vector3d z = x.cross(up);
    // |x cross up| = sin of the angle between them
    if (z.norm() < 1e-6) throw Error("kinematics", "degenerate pose" + where + ": spine parallel to hip axis");
    z.normalize();
    const Eigen::Vector3d y = z.cross(x);

    LocalFrame f;
    f.origin = pv;
    f.axes.col(0) = x;
    f.axes.col(1) = y;
    f.axes.col(2) = z;
    return f;
}

// Joint rotation implied by the stored channel values. `direction` receives
// the measured child-segment direction in the joint's local frame.
Eigen::Matrix3d joint_rotation(const SkeletonDef& sk, int j, const double* channel_values,
                               std::size_t frame_index) {
    const JointMeasurement& m = sk.measurement[j];
    if (m.bend_channel >= 0) {
        const ChannelDef& c = sk.channels[m.bend_channel];
        return rot_x(c.sign * channel_values[m.bend_channel] * kRadPerDeg);
    }
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    double sumsq = 0.0;
    const int slots[3] = {m.plane_x_channel, m.plane_y_channel, m.plane_z_channel};
    for (int k = 0; k < 3; ++k) {
        if (slots[k] < 0) continue;
        const ChannelDef& c = sk.channels[slots[k]];
        u[k] = std::sin(c.sign * channel_values[slots[k]] * kRadPerDeg);
        sumsq += u[k] * u[k];
    }
    if (sumsq > 1.0 + 1e-9)
        throw Error("kinematics", "infeasible angles at frame " + std::to_string(frame_index) +
                                      ", joint " + sk.joints[j].name);
    const int ax = canonical_component(m.canonical);
    u[ax] = (m.canonical[ax] > 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - sumsq));
    const Eigen::Matrix3d r_dir = shortest_arc(m.canonical, u);
    if (m.twist_channel >= 0) {
        const ChannelDef& c = sk.channels[m.twist_channel];
        const double psi = c.sign * channel_values[m.twist_channel] * kRadPerDeg;
        return axis_angle(u, psi) * r_dir;
    }
    return r_dir;
}

void measure_frame(const MotionSequence& mseq, const SkeletonDef& sk, std::size_t t,
                   double* out_channels, Vec3& out_rt, Vec3& out_rr,
                   std::vector<Eigen::Matrix3d>& w_scratch) {
    const std::size_t nj = sk.joint_count();
    const Vec3* pos = &mseq.positions[t * nj];
    const LocalFrame pf = pelvis_frame_at(pos, sk, t);
    out_rt = from_eigen(pf.origin);
    out_rr = matrix_to_euler(pf.axes);

    std::vector<Eigen::Matrix3d>& w = w_scratch;
    w.assign(nj, Eigen::Matrix3d::Identity());
    w[sk.root_joint] = pf.axes;

    for (int j : sk.topo_order) {
        if (j == sk.root_joint) continue;
        const JointMeasurement& m = sk.measurement[j];
        const Eigen::Matrix3d f = w[sk.joints[j].parent] * m.boresight;
        if (m.measurement_child < 0) {
            w[j] = f;
            continue;
        }
        Eigen::Vector3d seg = to_eigen(pos[m.measurement_child]) - to_eigen(pos[j]);
        if (seg.norm() < 1e-9)
            throw Error("kinematics", "degenerate pose at frame " + std::to_string(t) + ": joints " +
                                          sk.joints[j].name + " and " +
                                          sk.joints[m.measurement_child].name + " coincide");
        seg.normalize();

        if (m.bend_channel >= 0) {
            const int p = sk.joints[j].parent;
            Eigen::Vector3d parent_seg = to_eigen(pos[j]) - to_eigen(pos[p]);
            if (parent_seg.norm() < 1e-9)
                throw Error("kinematics", "degenerate pose at frame " + std::to_string(t) + ": joints " +
                                              sk.joints[j].name + " and " + sk.joints[p].name + " coincide");
            parent_seg.normalize();
            // unsigned angle in [0, 180]
            const double kappa = std::atan2(parent_seg.cross(seg).norm(), parent_seg.dot(seg));
            out_channels[m.bend_channel] = kappa * kDegPerRad;
        } else {
            const Eigen::Vector3d u_obs = f.transpose() * seg;
            const int slots[3] = {m.plane_x_channel, m.plane_y_channel, m.plane_z_channel};
            for (int k = 0; k < 3; ++k) {
                if (slots[k] < 0) continue;
                const ChannelDef& c = sk.channels[slots[k]];
                out_channels[slots[k]] = c.sign * std::asin(clamp_unit(u_obs[k])) * kDegPerRad;
            }
            if (m.twist_channel >= 0) {
                // rebuild the canonical-branch direction from the stored
                // values so the reference matches what FK will use
                Eigen::Vector3d u = Eigen::Vector3d::Zero();
                double sumsq = 0.0;
                for (int k = 0; k < 3; ++k) {
                    if (slots[k] < 0) continue;
                    const ChannelDef& c = sk.channels[slots[k]];
                    u[k] = std::sin(c.sign * out_channels[slots[k]] * kRadPerDeg);
                    sumsq += u[k] * u[k];
                }
                const int ax = canonical_component(m.canonical);
                u[ax] = (m.canonical[ax] > 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - sumsq));

                const ChannelDef& tc = sk.channels[m.twist_channel];
                Eigen::Vector3d ref = to_eigen(pos[tc.seg_to]) - to_eigen(pos[tc.seg_from]);
                double psi = 0.0;
                if (ref.norm() >= 1e-9) {
                    const Eigen::Vector3d r_loc = f.transpose() * ref.normalized();
                    Eigen::Vector3d p = r_loc - r_loc.dot(u) * u;
                    if (p.norm() >= 1e-7) {
                        p.normalize();
                        const Eigen::Vector3d p0 = shortest_arc(m.canonical, u) * m.twist_ref0;
                        psi = std::atan2(p0.cross(p).dot(u), p0.dot(p));
                    }
                }
                out_channels[m.twist_channel] = tc.sign * psi * kDegPerRad;
            }
        }
        w[j] = f * joint_rotation(sk, j, out_channels, t);
    }
}

void fk_frame(const AngleSequence& a, const SkeletonDef& sk, std::size_t t, Vec3* out_pos,
              std::vector<Eigen::Matrix3d>& w_scratch) {
    const std::size_t nj = sk.joint_count();
    const double* values = &a.values[t * sk.channel_count()];
    std::vector<Eigen::Matrix3d>& w = w_scratch;
    w.assign(nj, Eigen::Matrix3d::Identity());

    w[sk.root_joint] = euler_to_matrix(a.root.orientation[t]);
    out_pos[sk.root_joint] = a.root.translation[t];

    for (int j : sk.topo_order) {
        if (j == sk.root_joint) continue;
        const int p = sk.joints[j].parent;
        const Eigen::Vector3d dir = w[p] * sk.neutral_local[j];
        out_pos[j] = from_eigen(to_eigen(out_pos[p]) + sk.joints[j].bone_length * dir);
        const JointMeasurement& m = sk.measurement[j];
        const Eigen::Matrix3d f = w[p] * m.boresight;
        w[j] = m.measurement_child < 0 ? f : f * joint_rotation(sk, j, values, t);
    }
}

// Runs `body(t)` for every frame, collecting per-frame failures so the error
// surfaced afterwards is the lowest frame index regardless of schedule.
template <typename F>
void for_each_frame(std::size_t frames, RunPolicy policy, F&& body) {
    std::vector<std::string> errors(frames);
    parallel_for(static_cast<std::int64_t>(frames), policy, [&](std::int64_t t) {
        try {
            body(static_cast<std::size_t>(t));
        } catch (const std::exception& e) {
            errors[t] = e.what();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) throw Error(e);
}

}  // namespace

LocalFrame pelvis_frame(const MotionSequence& m, const SkeletonDef& sk, std::size_t frame_index) {
    if (frame_index >= m.frames) throw Error("kinematics", "frame index out of range");
    return pelvis_frame_at(&m.positions[frame_index * sk.joint_count()], sk, frame_index);
}

Eigen::Matrix3d euler_to_matrix(const Vec3& rxyz) {
    return rot_z(rxyz[2] * kRadPerDeg) * rot_x(rxyz[0] * kRadPerDeg) * rot_y(rxyz[1] * kRadPerDeg);
}

Vec3 matrix_to_euler(const Eigen::Matrix3d& r) {
    const double sa = clamp_unit(r(2, 1));
    double a = std::asin(sa), b, c;
    if (std::abs(sa) > 1.0 - 1e-12) {
        // gimbal: only the sum (resp. difference) of b and c is observable
        const double combined = std::atan2(r(1, 0), r(0, 0));
        b = sa > 0 ? combined : -combined;
        c = 0.0;
    } else {
        b = std::atan2(-r(2, 0), r(2, 2));
        c = std::atan2(-r(0, 1), r(1, 1));
    }
    return {a * kDegPerRad, b * kDegPerRad, c * kDegPerRad};
}

void validate_motion(const MotionSequence& m) {
    if (!(m.fps > 0)) throw Error("motion", "fps must be positive");
    if (m.frames < 2) throw Error("motion", "sequence must have at least 2 frames");
    if (m.joint_names.empty()) throw Error("motion", "no joints");
    if (m.positions.size() != m.frames * m.joint_names.size())
        throw Error("motion", "position buffer size does not match frames x joints");
    for (std::size_t i = 0; i < m.positions.size(); ++i)
        for (int k = 0; k < 3; ++k)
            if (!std::isfinite(m.positions[i][k]))
                throw Error("motion", "non-finite coordinate at frame " +
                                          std::to_string(i / m.joint_names.size()) + ", joint " +
                                          m.joint_names[i % m.joint_names.size()]);
}

void validate_motion(const MotionSequence& m, const SkeletonDef& sk) {
    validate_motion(m);
    if (m.joint_names.size() != sk.joint_count()) {
        // name the first skeleton joint missing from the sequence
        for (const auto& j : sk.joints)
            if (std::find(m.joint_names.begin(), m.joint_names.end(), j.name) == m.joint_names.end())
                throw Error("motion", "joint count mismatch: sequence has " +
                                          std::to_string(m.joint_names.size()) + " joints, skeleton " +
                                          sk.name + " has " + std::to_string(sk.joint_count()) +
                                          " (missing " + j.name + ")");
        throw Error("motion", "joint count mismatch with skeleton " + sk.name);
    }
    for (std::size_t j = 0; j < sk.joint_count(); ++j)
        if (m.joint_names[j] != sk.joints[j].name)
            throw Error("motion", "joint order mismatch: expected " + sk.joints[j].name + " at index " +
                                      std::to_string(j) + ", found " + m.joint_names[j]);
}

void validate_angles(const AngleSequence& a, const SkeletonDef& sk) {
    if (!(a.fps > 0)) throw Error("angles", "fps must be positive");
    if (a.frames == 0) throw Error("angles", "empty sequence");
    if (a.channels != sk.channel_names()) throw Error("angles", "channel table mismatch with skeleton " + sk.name);
    if (a.values.size() != a.frames * a.channels.size())
        throw Error("angles", "value buffer size does not match frames x channels");
    if (a.root.translation.size() != a.frames || a.root.orientation.size() != a.frames)
        throw Error("angles", "root track length does not match frame count");
    for (double v : a.values)
        if (!std::isfinite(v)) throw Error("angles", "non-finite channel value");
}

AngleSequence positions_to_angles(const MotionSequence& m, const SkeletonDef& sk, RunPolicy policy) {
    validate_motion(m, sk);
    AngleSequence out;
    out.fps = m.fps;
    out.frames = m.frames;
    out.skeleton_name = sk.name;
    out.channels = sk.channel_names();
    out.values.assign(m.frames * sk.channel_count(), 0.0);
    out.root.translation.assign(m.frames, {0, 0, 0});
    out.root.orientation.assign(m.frames, {0, 0, 0});

    for_each_frame(m.frames, policy, [&](std::size_t t) {
        std::vector<Eigen::Matrix3d> scratch;
        measure_frame(m, sk, t, &out.values[t * sk.channel_count()], out.root.translation[t],
                      out.root.orientation[t], scratch);
    });

    // out-of-range values are reported, not fatal (10 degrees of slack)
    std::size_t flagged = 0;
    for (std::size_t c = 0; c < sk.channel_count() && flagged < 100; ++c) {
        const auto& range = sk.channels[c].range;
        for (std::size_t t = 0; t < m.frames; ++t) {
            const double v = out.at(t, c);
            if (v < range[0] - 10.0 || v > range[1] + 10.0) {
                out.warnings.push_back("channel " + sk.channels[c].name + " frame " + std::to_string(t) +
                                       " value " + std::to_string(v) + " outside range");
                if (++flagged >= 100) break;
            }
        }
    }
    return out;
}

MotionSequence angles_to_positions(const AngleSequence& a, const SkeletonDef& sk, RunPolicy policy) {
    validate_angles(a, sk);
    MotionSequence out;
    out.fps = a.fps;
    out.frames = a.frames;
    out.skeleton_name = sk.name;
    out.joint_names = sk.joint_names();
    out.positions.assign(a.frames * sk.joint_count(), {0, 0, 0});

    for_each_frame(a.frames, policy, [&](std::size_t t) {
        std::vector<Eigen::Matrix3d> scratch;
        fk_frame(a, sk, t, &out.positions[t * sk.joint_count()], scratch);
    });
    return out;
}

std::vector<Vec3> neutral_pose_positions(const SkeletonDef& sk, const Vec3& root_translation) {
    std::vector<Vec3> out(sk.joint_count());
    const Eigen::Vector3d base = to_eigen(root_translation) - to_eigen(sk.joints[sk.root_joint].neutral);
    for (std::size_t j = 0; j < sk.joint_count(); ++j)
        out[j] = from_eigen(base + to_eigen(sk.joints[j].neutral));
    return out;
}

}  // namespace lingomotion

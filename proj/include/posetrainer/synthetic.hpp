#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "posetrainer/errors.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/series.hpp"

namespace posetrainer::synthetic {

/// Synthetic pose-sequence generators.
///
/// Each generator builds keypoint sequences from closed-form joint
/// trajectories, so the requested motion parameters (angle ranges, minimum
/// angles, sway amplitudes) are ground truth for the statistics the
/// evaluators compute. Trajectories are trapezoid waves whose plateaus are at
/// least as wide as the smoothing window, which makes the double median
/// filter preserve every extremum exactly; optional Gaussian jitter and spike
/// corruption model estimator noise on top of the clean geometry.

/// Trapezoid wave: hold `end_level`, ramp to `mid_level`, hold, ramp back,
/// hold `end_level` for the remaining frames. `plateau` must be at least the
/// median-filter window for exact extremum preservation.
inline Series trapezoid(double end_level, double mid_level, int frames, int plateau = 7) {
  if (plateau < 1 || frames < 3 * plateau + 2)
    throw ParameterError("trapezoid: frames must cover three plateaus plus ramps");
  const int ramp = (frames - 3 * plateau) / 2;
  Series out;
  out.reserve(static_cast<std::size_t>(frames));
  for (int i = 0; i < plateau; ++i) out.push_back(end_level);
  for (int i = 1; i <= ramp; ++i)
    out.push_back(end_level + (mid_level - end_level) * (static_cast<double>(i) / (ramp + 1)));
  for (int i = 0; i < plateau; ++i) out.push_back(mid_level);
  for (int i = ramp; i >= 1; --i)
    out.push_back(end_level + (mid_level - end_level) * (static_cast<double>(i) / (ramp + 1)));
  while (out.size() < static_cast<std::size_t>(frames)) out.push_back(end_level);
  return out;
}

namespace detail {

inline constexpr double kDegToRad = std::numbers::pi / 180.0;

struct XY {
  double x = 0.0;
  double y = 0.0;
};

inline XY rotate(XY v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return XY{v.x * c - v.y * s, v.x * s + v.y * c};
}

inline void place(Pose& p, PartId id, XY pos, double confidence) {
  p.part(id) = Part::at(pos.x, pos.y, confidence);
}

/// Adds Gaussian jitter and rare large spikes to every visible joint.
inline void corrupt(Pose& p, std::mt19937_64& rng, double sigma_px, double spike_rate,
                    double spike_scale_px) {
  for (Part& part : p.parts) {
    if (!part.visible()) continue;
    if (sigma_px > 0.0) {
      std::normal_distribution<double> gauss(0.0, sigma_px);
      part.x += gauss(rng);
      part.y += gauss(rng);
    }
    if (spike_rate > 0.0) {
      std::bernoulli_distribution spike(spike_rate);
      if (spike(rng)) {
        std::uniform_real_distribution<double> mag(0.5, 2.0);
        std::uniform_real_distribution<double> dir(0.0, 2.0 * std::numbers::pi);
        const double r = mag(rng) * spike_scale_px;
        const double a = dir(rng);
        part.x += r * std::cos(a);
        part.y += r * std::sin(a);
      }
    }
  }
}

}  // namespace detail

struct BicepParams {
  Side side = Side::right;
  double facing = 1.0;  // +1: subject faces +x
  double torso_px = 80.0;
  double neck_x = 300.0;
  double neck_y = 200.0;
  int frames = 60;
  int plateau = 7;
  double swing_base_deg = 4.0;    // resting upper-arm/torso angle
  double swing_range_deg = 20.0;  // trapezoid peak = base + range
  double elbow_start_deg = 175.0;  // straight arm at the start
  double elbow_min_deg = 45.0;     // fully curled interior elbow angle
  double upper_arm_ratio = 0.6;
  double forearm_ratio = 0.45;
  double active_confidence = 0.9;
  double offside_confidence = 0.0;  // occluded-arm confidence
  double noise_sigma = 0.0;         // Gaussian jitter, torso units
  double spike_rate = 0.0;          // corruption probability per joint sample
  std::uint64_t seed = 0;
};

/// Single-arm bicep curl viewed from the side. The upper-arm/torso angle
/// sweeps `swing_base..swing_base+swing_range` and the interior elbow angle
/// dips from `elbow_start` to `elbow_min`; both are exact statistics of the
/// emitted sequence when noise is off.
inline PoseSequence make_bicep_sequence(const BicepParams& prm, std::string source_id) {
  const Series swing =
      trapezoid(prm.swing_base_deg, prm.swing_base_deg + prm.swing_range_deg, prm.frames,
                prm.plateau);
  const Series curl = trapezoid(prm.elbow_start_deg, prm.elbow_min_deg, prm.frames, prm.plateau);

  const double T = prm.torso_px;
  const double f = prm.facing;
  const double lua = prm.upper_arm_ratio * T;
  const double lfa = prm.forearm_ratio * T;
  const bool active_left = prm.side == Side::left;

  std::mt19937_64 rng(prm.seed);
  PoseSequence seq;
  seq.source_id = std::move(source_id);
  seq.frames.reserve(static_cast<std::size_t>(prm.frames));

  for (int t = 0; t < prm.frames; ++t) {
    Pose p;
    p.frame_index = t;
    const detail::XY neck{prm.neck_x, prm.neck_y};
    detail::place(p, PartId::neck, neck, 0.95);
    detail::place(p, PartId::nose, {neck.x + f * 0.12 * T, neck.y - 0.25 * T}, 0.9);
    detail::place(p, PartId::rhip, {neck.x, neck.y + T}, 0.9);
    detail::place(p, PartId::lhip, {neck.x, neck.y + T}, 0.9);
    detail::place(p, PartId::rknee, {neck.x, neck.y + 1.8 * T}, 0.85);
    detail::place(p, PartId::lknee, {neck.x, neck.y + 1.8 * T}, 0.85);
    detail::place(p, PartId::rankle, {neck.x, neck.y + 2.6 * T}, 0.8);
    detail::place(p, PartId::lankle, {neck.x, neck.y + 2.6 * T}, 0.8);

    const double theta = swing[static_cast<std::size_t>(t)] * detail::kDegToRad;
    const detail::XY shoulder = neck;
    const detail::XY elbow{shoulder.x + lua * f * std::sin(theta),
                           shoulder.y + lua * std::cos(theta)};
    const detail::XY up{(shoulder.x - elbow.x) / lua, (shoulder.y - elbow.y) / lua};
    const double phi = curl[static_cast<std::size_t>(t)] * detail::kDegToRad;
    const detail::XY fore = detail::rotate(up, f * phi);
    const detail::XY wrist{elbow.x + lfa * fore.x, elbow.y + lfa * fore.y};

    const PartId a_sh = active_left ? PartId::lshoulder : PartId::rshoulder;
    const PartId a_el = active_left ? PartId::lelbow : PartId::relbow;
    const PartId a_wr = active_left ? PartId::lwrist : PartId::rwrist;
    const PartId o_sh = active_left ? PartId::rshoulder : PartId::lshoulder;
    const PartId o_el = active_left ? PartId::relbow : PartId::lelbow;
    const PartId o_wr = active_left ? PartId::rwrist : PartId::lwrist;

    detail::place(p, a_sh, shoulder, prm.active_confidence);
    detail::place(p, a_el, elbow, prm.active_confidence);
    detail::place(p, a_wr, wrist, prm.active_confidence);
    if (prm.offside_confidence > 0.0) {
      detail::place(p, o_sh, shoulder, prm.offside_confidence);
      detail::place(p, o_el, elbow, prm.offside_confidence);
      detail::place(p, o_wr, wrist, prm.offside_confidence);
    }

    detail::corrupt(p, rng, prm.noise_sigma * T, prm.spike_rate, T);
    seq.frames.push_back(p);
  }
  return seq;
}

struct FrontRaiseParams {
  double facing = 1.0;
  double torso_px = 90.0;
  double neck_x = 320.0;
  double neck_y = 180.0;
  int frames = 64;
  int plateau = 7;
  double arm_low_deg = 6.0;
  double arm_high_deg = 100.0;  // exact maximum torso/arm angle
  double sway_amp = 0.02;       // horizontal back sway, torso units
  double arm_ratio = 0.92;      // shoulder-to-wrist length
  double confidence = 0.9;
  double noise_sigma = 0.0;
  double spike_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Two-arm front raise viewed from the side: straight arms sweep from
/// `arm_low_deg` up to `arm_high_deg` against the torso while the neck sways
/// horizontally over the hips by `sway_amp` torso lengths.
inline PoseSequence make_front_raise_sequence(const FrontRaiseParams& prm,
                                              std::string source_id) {
  const Series arm = trapezoid(prm.arm_low_deg, prm.arm_high_deg, prm.frames, prm.plateau);
  const Series sway = trapezoid(0.0, prm.sway_amp, prm.frames, prm.plateau);

  const double T = prm.torso_px;
  const double f = prm.facing;
  std::mt19937_64 rng(prm.seed);
  PoseSequence seq;
  seq.source_id = std::move(source_id);

  for (int t = 0; t < prm.frames; ++t) {
    Pose p;
    p.frame_index = t;
    const detail::XY hip{prm.neck_x, prm.neck_y + T};
    const detail::XY neck{prm.neck_x + sway[static_cast<std::size_t>(t)] * T, prm.neck_y};
    detail::place(p, PartId::neck, neck, 0.95);
    detail::place(p, PartId::nose, {neck.x + f * 0.12 * T, neck.y - 0.25 * T}, 0.9);
    detail::place(p, PartId::rhip, hip, 0.9);
    detail::place(p, PartId::lhip, hip, 0.9);
    detail::place(p, PartId::rknee, {hip.x, hip.y + 0.8 * T}, 0.85);
    detail::place(p, PartId::lknee, {hip.x, hip.y + 0.8 * T}, 0.85);
    detail::place(p, PartId::rankle, {hip.x, hip.y + 1.6 * T}, 0.8);
    detail::place(p, PartId::lankle, {hip.x, hip.y + 1.6 * T}, 0.8);

    // Arm direction is constructed against the actual per-frame torso vector
    // so the torso/arm angle equals the profile exactly even while swaying.
    const detail::XY torso_dir = [&] {
      const double dx = hip.x - neck.x;
      const double dy = hip.y - neck.y;
      const double n = std::hypot(dx, dy);
      return detail::XY{dx / n, dy / n};
    }();
    const double alpha = arm[static_cast<std::size_t>(t)] * detail::kDegToRad;
    const detail::XY dir = detail::rotate(torso_dir, f * alpha);
    const detail::XY shoulder = neck;
    const detail::XY wrist{shoulder.x + prm.arm_ratio * T * dir.x,
                           shoulder.y + prm.arm_ratio * T * dir.y};
    const detail::XY elbow{shoulder.x + 0.5 * prm.arm_ratio * T * dir.x,
                           shoulder.y + 0.5 * prm.arm_ratio * T * dir.y};
    for (PartId id : {PartId::rshoulder, PartId::lshoulder})
      detail::place(p, id, shoulder, prm.confidence);
    for (PartId id : {PartId::relbow, PartId::lelbow})
      detail::place(p, id, elbow, prm.confidence);
    for (PartId id : {PartId::rwrist, PartId::lwrist})
      detail::place(p, id, wrist, prm.confidence);

    detail::corrupt(p, rng, prm.noise_sigma * T, prm.spike_rate, T);
    seq.frames.push_back(p);
  }
  return seq;
}

struct ShrugParams {
  double torso_px = 85.0;
  double neck_x = 300.0;
  double neck_y = 190.0;
  int frames = 64;
  int plateau = 7;
  double lift_amp = 0.12;          // exact vertical shoulder travel, torso units
  double elbow_start_deg = 178.0;  // straight arms
  double elbow_min_deg = 170.0;    // exact minimum interior elbow angle
  double shoulder_halfwidth = 0.20;
  double hip_halfwidth = 0.15;
  double upper_arm_ratio = 0.45;
  double forearm_ratio = 0.40;
  double confidence = 0.9;
  double noise_sigma = 0.0;
  double spike_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Shoulder shrug viewed from the front: both shoulders travel vertically by
/// `lift_amp` torso lengths while the interior elbow angle dips from
/// `elbow_start_deg` to `elbow_min_deg` (keep both near 180 for clean form).
inline PoseSequence make_shoulder_shrug_sequence(const ShrugParams& prm, std::string source_id) {
  const Series lift = trapezoid(0.0, prm.lift_amp, prm.frames, prm.plateau);
  const Series bend = trapezoid(prm.elbow_start_deg, prm.elbow_min_deg, prm.frames, prm.plateau);

  const double T = prm.torso_px;
  const double hip_dx = prm.hip_halfwidth * T;
  const double hip_dy = std::sqrt(T * T - hip_dx * hip_dx);  // keeps |neck - hip| == T
  std::mt19937_64 rng(prm.seed);
  PoseSequence seq;
  seq.source_id = std::move(source_id);

  for (int t = 0; t < prm.frames; ++t) {
    Pose p;
    p.frame_index = t;
    const detail::XY neck{prm.neck_x, prm.neck_y};
    detail::place(p, PartId::neck, neck, 0.95);
    detail::place(p, PartId::nose, {neck.x, neck.y - 0.25 * T}, 0.9);
    detail::place(p, PartId::rhip, {neck.x - hip_dx, neck.y + hip_dy}, 0.9);
    detail::place(p, PartId::lhip, {neck.x + hip_dx, neck.y + hip_dy}, 0.9);
    detail::place(p, PartId::rknee, {neck.x - hip_dx, neck.y + hip_dy + 0.8 * T}, 0.85);
    detail::place(p, PartId::lknee, {neck.x + hip_dx, neck.y + hip_dy + 0.8 * T}, 0.85);
    detail::place(p, PartId::rankle, {neck.x - hip_dx, neck.y + hip_dy + 1.6 * T}, 0.8);
    detail::place(p, PartId::lankle, {neck.x + hip_dx, neck.y + hip_dy + 1.6 * T}, 0.8);

    const double rise = lift[static_cast<std::size_t>(t)] * T;
    const double phi = bend[static_cast<std::size_t>(t)] * detail::kDegToRad;
    const double tilt = 4.0 * detail::kDegToRad;  // slight outward arm hang
    for (int s = 0; s < 2; ++s) {
      const double dir = s == 0 ? -1.0 : 1.0;  // right side sits at -x in the image
      const detail::XY shoulder{neck.x + dir * prm.shoulder_halfwidth * T, neck.y - rise};
      const detail::XY elbow{shoulder.x + prm.upper_arm_ratio * T * dir * std::sin(tilt),
                             shoulder.y + prm.upper_arm_ratio * T * std::cos(tilt)};
      const double lua = std::hypot(elbow.x - shoulder.x, elbow.y - shoulder.y);
      const detail::XY up{(shoulder.x - elbow.x) / lua, (shoulder.y - elbow.y) / lua};
      const detail::XY fore = detail::rotate(up, dir * phi);
      const detail::XY wrist{elbow.x + prm.forearm_ratio * T * fore.x,
                             elbow.y + prm.forearm_ratio * T * fore.y};
      const bool right = s == 0;
      detail::place(p, right ? PartId::rshoulder : PartId::lshoulder, shoulder, prm.confidence);
      detail::place(p, right ? PartId::relbow : PartId::lelbow, elbow, prm.confidence);
      detail::place(p, right ? PartId::rwrist : PartId::lwrist, wrist, prm.confidence);
    }

    detail::corrupt(p, rng, prm.noise_sigma * T, prm.spike_rate, T);
    seq.frames.push_back(p);
  }
  return seq;
}

struct PressParams {
  double facing = 1.0;
  double torso_px = 90.0;
  double neck_x = 300.0;
  double neck_y = 200.0;
  int frames = 64;
  int plateau = 7;
  double sway_amp = 0.03;          // horizontal back sway, torso units
  double elbow_front = 0.15;       // resting elbow offset toward facing
  double elbow_excursion = 0.25;   // mid-motion offset; negative drifts behind
  double elbow_lift = 0.45;        // vertical elbow travel, torso units
  double elbow_start_deg = 85.0;
  double elbow_max_deg = 170.0;    // exact lockout interior angle
  double forearm_ratio = 0.38;
  double confidence = 0.9;
  double noise_sigma = 0.0;
  double spike_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Overhead press viewed from the side: elbows start in front of the body,
/// travel by `elbow_excursion` (negative values roll behind the neck), and
/// the interior elbow angle opens to `elbow_max_deg` at lockout.
inline PoseSequence make_shoulder_press_sequence(const PressParams& prm, std::string source_id) {
  const Series sway = trapezoid(0.0, prm.sway_amp, prm.frames, prm.plateau);
  const Series off = trapezoid(prm.elbow_front, prm.elbow_excursion, prm.frames, prm.plateau);
  const Series lift = trapezoid(0.0, prm.elbow_lift, prm.frames, prm.plateau);
  const Series open_angle =
      trapezoid(prm.elbow_start_deg, prm.elbow_max_deg, prm.frames, prm.plateau);

  const double T = prm.torso_px;
  const double f = prm.facing;
  std::mt19937_64 rng(prm.seed);
  PoseSequence seq;
  seq.source_id = std::move(source_id);

  for (int t = 0; t < prm.frames; ++t) {
    Pose p;
    p.frame_index = t;
    const detail::XY hip{prm.neck_x, prm.neck_y + T};
    const detail::XY neck{prm.neck_x + sway[static_cast<std::size_t>(t)] * T, prm.neck_y};
    detail::place(p, PartId::neck, neck, 0.95);
    detail::place(p, PartId::nose, {neck.x + f * 0.12 * T, neck.y - 0.25 * T}, 0.9);
    detail::place(p, PartId::rhip, hip, 0.9);
    detail::place(p, PartId::lhip, hip, 0.9);
    detail::place(p, PartId::rknee, {hip.x, hip.y + 0.8 * T}, 0.85);
    detail::place(p, PartId::lknee, {hip.x, hip.y + 0.8 * T}, 0.85);
    detail::place(p, PartId::rankle, {hip.x, hip.y + 1.6 * T}, 0.8);
    detail::place(p, PartId::lankle, {hip.x, hip.y + 1.6 * T}, 0.8);

    const detail::XY shoulder{neck.x + f * 0.04 * T, neck.y + 0.04 * T};
    const detail::XY elbow{neck.x + f * off[static_cast<std::size_t>(t)] * T,
                           prm.neck_y + 0.25 * T - lift[static_cast<std::size_t>(t)] * T};
    const double lua = std::hypot(elbow.x - shoulder.x, elbow.y - shoulder.y);
    const detail::XY up{(shoulder.x - elbow.x) / lua, (shoulder.y - elbow.y) / lua};
    const double psi = open_angle[static_cast<std::size_t>(t)] * detail::kDegToRad;
    const detail::XY fore = detail::rotate(up, f * psi);
    const detail::XY wrist{elbow.x + prm.forearm_ratio * T * fore.x,
                           elbow.y + prm.forearm_ratio * T * fore.y};

    for (PartId id : {PartId::rshoulder, PartId::lshoulder})
      detail::place(p, id, shoulder, prm.confidence);
    for (PartId id : {PartId::relbow, PartId::lelbow})
      detail::place(p, id, elbow, prm.confidence);
    for (PartId id : {PartId::rwrist, PartId::lwrist})
      detail::place(p, id, wrist, prm.confidence);

    detail::corrupt(p, rng, prm.noise_sigma * T, prm.spike_rate, T);
    seq.frames.push_back(p);
  }
  return seq;
}

/// Left/right mirror about a vertical axis: swaps paired joints and flips x
/// to `image_width - x` for visible joints.
inline PoseSequence mirror_sequence(const PoseSequence& seq, double image_width) {
  static constexpr std::array<PartId, kPartCount> kMirror = {
      PartId::nose,   PartId::neck,   PartId::lshoulder, PartId::lelbow, PartId::lwrist,
      PartId::rshoulder, PartId::relbow, PartId::rwrist, PartId::lhip,   PartId::lknee,
      PartId::lankle, PartId::rhip,   PartId::rknee,     PartId::rankle, PartId::leye,
      PartId::reye,   PartId::lear,   PartId::rear};
  PoseSequence out;
  out.source_id = seq.source_id + "_mirrored";
  out.frames_per_second = seq.frames_per_second;
  out.frames.reserve(seq.frames.size());
  for (const Pose& p : seq.frames) {
    Pose m;
    m.frame_index = p.frame_index;
    for (int i = 0; i < kPartCount; ++i) {
      const Part& src = p.part(kMirror[static_cast<std::size_t>(i)]);
      if (src.visible())
        m.parts[static_cast<std::size_t>(i)] =
            Part::at(image_width - src.x, src.y, src.confidence);
    }
    out.frames.push_back(m);
  }
  return out;
}

/// Uniform scale and translation of all visible coordinates; models the same
/// motion recorded at a different distance and framing.
inline PoseSequence transform_sequence(const PoseSequence& seq, double scale, double dx,
                                       double dy) {
  PoseSequence out = seq;
  for (Pose& p : out.frames)
    for (Part& part : p.parts)
      if (part.visible()) {
        part.x = part.x * scale + dx;
        part.y = part.y * scale + dy;
      }
  return out;
}

/// Writes a sequence as per-frame estimator-style keypoint files
/// (frame_000000.json, ...) so ingestion paths can be exercised end to end.
inline void write_frame_files(const PoseSequence& seq, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    nlohmann::json flat = nlohmann::json::array();
    for (const Part& part : seq.frames[t].parts) {
      flat.push_back(part.x);
      flat.push_back(part.y);
      flat.push_back(part.confidence);
    }
    const nlohmann::json doc = {
        {"people", nlohmann::json::array({{{"pose_keypoints_2d", std::move(flat)}}})}};
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.json", t);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw IoError("cannot write frame file in " + dir.string());
    out << doc.dump() << "\n";
  }
}

}  // namespace posetrainer::synthetic

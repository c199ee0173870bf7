#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetrainer/errors.hpp"
#include "posetrainer/geometry.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/series.hpp"

namespace posetrainer {

/// User-facing feedback text. The strings are part of the output contract:
/// golden tests compare them byte for byte.
namespace msg {

inline constexpr const char* bicep_swing =
    "Your upper arm shows significant rotation around the shoulder when curling. Try holding "
    "your upper arm still, parallel to your chest, and concentrate on rotating around your "
    "elbow only.";
inline constexpr const char* bicep_partial_curl =
    "You are not curling the weight all the way up. Focus on fully contracting your bicep to "
    "bring the weight toward your shoulder, and use a lighter weight if you cannot complete "
    "the motion.";
inline constexpr const char* bicep_success =
    "Exercise performed correctly! Weight was lifted fully up, and upper arm did not move "
    "significantly.";

inline constexpr const char* front_raise_back =
    "Your back shows significant movement. Try keeping your back straight and still when you "
    "lift the weight. Consider using lighter weight.";
inline constexpr const char* front_raise_low =
    "You are not lifting the weight all the way up. Finish with wrists at or slightly above "
    "shoulder level.";
inline constexpr const char* front_raise_success =
    "Exercise performed correctly! Weight was lifted to shoulder level, and your back stayed "
    "straight and still.";

inline constexpr const char* shrug_low_range =
    "Your shoulders do not go through enough motion. Squeeze and raise your shoulders more "
    "through the exercise.";
inline constexpr const char* shrug_bent_arms =
    "Your arms are bending when lifting. Keep your arms straight and still, and focus on "
    "moving only the shoulders.";
inline constexpr const char* shrug_success =
    "Exercise performed correctly! Shoulders moved through a full range of motion, and arms "
    "stayed straight.";

inline constexpr const char* press_back =
    "Your back shows significant movement while pressing. Try keeping your back straight and "
    "still when you lift the weight.";
inline constexpr const char* press_rolling =
    "You are rolling your shoulders when you lift the weights. Try to steady your shoulders "
    "and keep them parallel.";
inline constexpr const char* press_partial =
    "You are not lifting the weight all the way up. Extend your arms through the full range "
    "of motion. Lower the weight if necessary.";
inline constexpr const char* press_success =
    "Exercise performed correctly! Weight was pressed fully overhead, and your back and "
    "shoulders stayed steady.";

}  // namespace msg

/// Per-exercise rule thresholds. The bicep values are established training
/// limits; the remaining defaults are engineering choices, all overridable
/// through a config file of `exercise.rule = value` lines.
struct ThresholdConfig {
  double bicep_swing_range = 35.0;      // bicep_curl.swing_range, degrees
  double bicep_curl_angle = 70.0;       // bicep_curl.curl_angle, degrees
  double front_raise_back_sway = 0.15;  // front_raise.back_sway, torso units
  double front_raise_raise_angle = 90.0;  // front_raise.raise_angle, degrees
  double shrug_range = 0.08;            // shoulder_shrug.shrug_range, torso units
  double shrug_straight_arm = 150.0;    // shoulder_shrug.straight_arm, degrees
  double press_back_sway = 0.15;        // shoulder_press.back_sway, torso units
  double press_elbow_back = 0.05;       // shoulder_press.elbow_back, torso units
  double press_lockout_angle = 150.0;   // shoulder_press.lockout_angle, degrees

  void set(const std::string& key, double value) {
    if (key == "bicep_curl.swing_range")
      bicep_swing_range = value;
    else if (key == "bicep_curl.curl_angle")
      bicep_curl_angle = value;
    else if (key == "front_raise.back_sway")
      front_raise_back_sway = value;
    else if (key == "front_raise.raise_angle")
      front_raise_raise_angle = value;
    else if (key == "shoulder_shrug.shrug_range")
      shrug_range = value;
    else if (key == "shoulder_shrug.straight_arm")
      shrug_straight_arm = value;
    else if (key == "shoulder_press.back_sway")
      press_back_sway = value;
    else if (key == "shoulder_press.elbow_back")
      press_elbow_back = value;
    else if (key == "shoulder_press.lockout_angle")
      press_lockout_angle = value;
    else
      throw ParameterError("unknown threshold key: '" + key + "'");
  }

  void validate() const {
    const double all[] = {bicep_swing_range,  bicep_curl_angle, front_raise_back_sway,
                          front_raise_raise_angle, shrug_range, shrug_straight_arm,
                          press_back_sway,    press_elbow_back, press_lockout_angle};
    for (double v : all)
      if (!std::isfinite(v)) throw ParameterError("threshold values must be finite");
    const double angles[] = {bicep_swing_range, bicep_curl_angle, front_raise_raise_angle,
                             shrug_straight_arm, press_lockout_angle};
    for (double v : angles)
      if (v <= 0.0 || v >= 180.0)
        throw ParameterError("angle thresholds must lie strictly between 0 and 180 degrees");
  }

  /// Loads overrides from a plain-text file: one `exercise.rule = value` per
  /// line, `#` starts a comment, blank lines ignored.
  static ThresholdConfig from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open threshold config: " + path.string());
    ThresholdConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string stripped = trim(line);
      if (stripped.empty()) continue;
      const auto eq = stripped.find('=');
      if (eq == std::string::npos)
        throw ParameterError("threshold config line " + std::to_string(lineno) +
                             ": expected 'key = value'");
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value_text = trim(stripped.substr(eq + 1));
      double value = 0.0;
      std::size_t used = 0;
      try {
        value = std::stod(value_text, &used);
      } catch (const std::exception&) {
        throw ParameterError("threshold config line " + std::to_string(lineno) +
                             ": not a number: '" + value_text + "'");
      }
      if (used != value_text.size())
        throw ParameterError("threshold config line " + std::to_string(lineno) +
                             ": not a number: '" + value_text + "'");
      cfg.set(key, value);
    }
    cfg.validate();
    return cfg;
  }
};

/// Outcome of one geometric rule. `feedback` is empty when the rule passed.
struct RuleResult {
  std::string rule_id;
  double statistic = 0.0;
  std::string unit;
  double threshold = 0.0;
  bool passed = false;
  std::string feedback;
};

/// Full evaluation of one sequence: verdict, per-rule diagnostics, and the
/// per-frame series behind them (raw and smoothed) for plot export.
struct Evaluation {
  ExerciseKind exercise = ExerciseKind::bicep_curl;
  Side side = Side::both;
  FormLabel verdict = FormLabel::incorrect;
  std::vector<RuleResult> rules;
  std::map<std::string, Series> series_dump;
  std::string success_message;

  /// Transcript feedback block: the success message when correct, otherwise
  /// each failed rule's feedback in rule order.
  std::vector<std::string> feedback_lines() const {
    if (verdict == FormLabel::correct) return {success_message};
    std::vector<std::string> lines;
    for (const RuleResult& r : rules)
      if (!r.passed) lines.push_back(r.feedback);
    return lines;
  }
};

/// Transcript label for a rule's statistic line.
inline std::string rule_statistic_label(const std::string& rule_id) {
  if (rule_id == "bicep_curl.swing_range") return "Upper arm and torso angle range";
  if (rule_id == "bicep_curl.curl_angle") return "Upper arm and forearm minimum angle";
  if (rule_id == "front_raise.back_sway") return "Back horizontal movement range";
  if (rule_id == "front_raise.raise_angle") return "Torso and arm maximum angle";
  if (rule_id == "shoulder_shrug.shrug_range") return "Shoulder vertical motion range";
  if (rule_id == "shoulder_shrug.straight_arm") return "Upper arm and forearm minimum angle";
  if (rule_id == "shoulder_press.back_sway") return "Back movement range";
  if (rule_id == "shoulder_press.elbow_back") return "Elbow displacement behind neck";
  if (rule_id == "shoulder_press.lockout_angle") return "Upper arm and forearm maximum angle";
  throw ParameterError("unknown rule id: '" + rule_id + "'");
}

namespace detail {

inline PartId shoulder_id(Side s) { return s == Side::left ? PartId::lshoulder : PartId::rshoulder; }
inline PartId elbow_id(Side s) { return s == Side::left ? PartId::lelbow : PartId::relbow; }
inline PartId wrist_id(Side s) { return s == Side::left ? PartId::lwrist : PartId::rwrist; }
inline PartId hip_id(Side s) { return s == Side::left ? PartId::lhip : PartId::rhip; }

/// Mean position of the visible hips, or nothing when both are occluded.
inline std::optional<Vec2> hip_mid(const Pose& p) {
  const bool has_r = p.rhip().visible();
  const bool has_l = p.lhip().visible();
  if (!has_r && !has_l) return std::nullopt;
  double x = 0.0, y = 0.0;
  int n = 0;
  if (has_r) {
    x += p.rhip().x;
    y += p.rhip().y;
    ++n;
  }
  if (has_l) {
    x += p.lhip().x;
    y += p.lhip().y;
    ++n;
  }
  return Vec2{x / n, y / n};
}

/// Torso direction: neck to the mean of the visible hips.
inline std::optional<Vec2> torso_vec(const Pose& p) {
  if (!p.neck().visible()) return std::nullopt;
  const auto mid = hip_mid(p);
  if (!mid) return std::nullopt;
  const Vec2 v{mid->dx - p.neck().x, mid->dy - p.neck().y};
  if (v.norm() == 0.0) return std::nullopt;
  return v;
}

/// Vector between two joints when both are visible and distinct.
inline std::optional<Vec2> limb(const Pose& p, PartId from, PartId to) {
  const Part& a = p.part(from);
  const Part& b = p.part(to);
  if (!a.visible() || !b.visible()) return std::nullopt;
  const Vec2 v = vec_between(a, b);
  if (v.norm() == 0.0) return std::nullopt;
  return v;
}

inline std::optional<double> safe_angle(const std::optional<Vec2>& u,
                                        const std::optional<Vec2>& v) {
  if (!u || !v) return std::nullopt;
  return angle_between(*u, *v);
}

/// Interior elbow angle: between the elbow->shoulder and elbow->wrist
/// vectors. 180 degrees for a straight arm, shrinking as the arm folds.
inline std::optional<double> elbow_angle(const Pose& p, Side side) {
  return safe_angle(limb(p, elbow_id(side), shoulder_id(side)),
                    limb(p, elbow_id(side), wrist_id(side)));
}

struct PreparedSeries {
  Series raw;       // gap-filled, unsmoothed
  Series smoothed;  // double size-5 median filter
};

inline std::size_t defined_count(const OptionalSeries& s) {
  std::size_t n = 0;
  for (const auto& v : s)
    if (v.has_value()) ++n;
  return n;
}

/// Gap-fills and smooths one track; `joints` names the keypoints involved so
/// failures report exactly what was missing. When `require_majority` is set,
/// the track must be defined in at least half of the frames.
inline PreparedSeries prepare(const OptionalSeries& s, const std::string& joints,
                              bool require_majority = false) {
  const std::size_t defined = defined_count(s);
  if (defined < 2 || (require_majority && defined * 2 < s.size()))
    throw EvaluationError("keypoints [" + joints + "] visible in too few frames to evaluate");
  PreparedSeries out;
  out.raw = fill_gaps(s);
  out.smoothed = smooth(out.raw);
  return out;
}

inline RuleResult make_rule(std::string rule_id, double statistic, std::string unit,
                            double threshold, bool passed, const char* fail_feedback) {
  return RuleResult{std::move(rule_id), statistic,
                    std::move(unit),    threshold,
                    passed,             passed ? std::string() : std::string(fail_feedback)};
}

inline Evaluation finish(ExerciseKind exercise, Side side, std::vector<RuleResult> rules,
                         std::map<std::string, Series> dump, const char* success) {
  bool all_passed = true;
  for (const RuleResult& r : rules) all_passed = all_passed && r.passed;
  Evaluation ev;
  ev.exercise = exercise;
  ev.side = side;
  ev.verdict = all_passed ? FormLabel::correct : FormLabel::incorrect;
  ev.rules = std::move(rules);
  ev.series_dump = std::move(dump);
  ev.success_message = success;
  return ev;
}

/// Horizontal offset of the neck relative to the hip midpoint, per frame.
inline OptionalSeries neck_hip_offset(const std::vector<Pose>& frames) {
  OptionalSeries out;
  out.reserve(frames.size());
  for (const Pose& p : frames) {
    if (!p.neck().visible()) {
      out.push_back(std::nullopt);
      continue;
    }
    const auto mid = hip_mid(p);
    out.push_back(mid ? std::optional<double>(p.neck().x - mid->dx) : std::nullopt);
  }
  return out;
}

/// Largest excursion of a track from its first value.
inline double max_excursion(const Series& s) {
  double m = 0.0;
  for (double v : s) m = std::max(m, std::abs(v - s.front()));
  return m;
}

}  // namespace detail

/// Bicep curl: the upper arm must stay parallel to the torso (bounded
/// upper-arm/torso angle range) and the weight must come all the way up
/// (upper-arm/forearm minimum angle strictly below the curl threshold).
inline Evaluation evaluate_bicep_curl(const NormalizedSequence& seq, const ThresholdConfig& cfg) {
  const Side side = seq.side == Side::both ? detect_side(seq.frames) : seq.side;
  const PartId sh = detail::shoulder_id(side);
  const PartId el = detail::elbow_id(side);

  OptionalSeries swing, curl;
  swing.reserve(seq.frames.size());
  curl.reserve(seq.frames.size());
  for (const Pose& p : seq.frames) {
    swing.push_back(detail::safe_angle(detail::limb(p, sh, el), detail::torso_vec(p)));
    curl.push_back(detail::elbow_angle(p, side));
  }

  const std::string arm = std::string(side_name(side)) + " shoulder/elbow/wrist";
  const auto swing_p = detail::prepare(swing, arm + ", neck, hips");
  const auto curl_p = detail::prepare(curl, arm);

  const double swing_range = value_range(swing_p.smoothed);
  const double min_curl = min_value(curl_p.smoothed);

  std::vector<RuleResult> rules;
  rules.push_back(detail::make_rule("bicep_curl.swing_range", swing_range, "degrees",
                                    cfg.bicep_swing_range, swing_range <= cfg.bicep_swing_range,
                                    msg::bicep_swing));
  rules.push_back(detail::make_rule("bicep_curl.curl_angle", min_curl, "degrees",
                                    cfg.bicep_curl_angle, min_curl < cfg.bicep_curl_angle,
                                    msg::bicep_partial_curl));

  std::map<std::string, Series> dump;
  dump["upper_arm_torso_angle_raw"] = swing_p.raw;
  dump["upper_arm_torso_angle"] = swing_p.smoothed;
  dump["upper_arm_forearm_angle_raw"] = curl_p.raw;
  dump["upper_arm_forearm_angle"] = curl_p.smoothed;

  return detail::finish(ExerciseKind::bicep_curl, side, std::move(rules), std::move(dump),
                        msg::bicep_success);
}

/// Front raise: the back must stay still (bounded horizontal neck-over-hips
/// excursion) and the arm must come up to at least the raise angle.
inline Evaluation evaluate_front_raise(const NormalizedSequence& seq, const ThresholdConfig& cfg) {
  OptionalSeries back = detail::neck_hip_offset(seq.frames);

  OptionalSeries arm;
  arm.reserve(seq.frames.size());
  for (const Pose& p : seq.frames) {
    const auto torso = detail::torso_vec(p);
    double sum = 0.0;
    int n = 0;
    for (Side s : {Side::left, Side::right}) {
      const auto a = detail::safe_angle(
          detail::limb(p, detail::shoulder_id(s), detail::wrist_id(s)), torso);
      if (a) {
        sum += *a;
        ++n;
      }
    }
    arm.push_back(n > 0 ? std::optional<double>(sum / n) : std::nullopt);
  }

  const auto back_p = detail::prepare(back, "neck, hips", true);
  const auto arm_p = detail::prepare(arm, "shoulders, wrists, neck, hips", true);

  const double sway = detail::max_excursion(back_p.smoothed);
  const double max_angle = max_value(arm_p.smoothed);

  std::vector<RuleResult> rules;
  rules.push_back(detail::make_rule("front_raise.back_sway", sway, "torso units",
                                    cfg.front_raise_back_sway, sway <= cfg.front_raise_back_sway,
                                    msg::front_raise_back));
  rules.push_back(detail::make_rule("front_raise.raise_angle", max_angle, "degrees",
                                    cfg.front_raise_raise_angle,
                                    max_angle >= cfg.front_raise_raise_angle,
                                    msg::front_raise_low));

  std::map<std::string, Series> dump;
  dump["back_horizontal_offset_raw"] = back_p.raw;
  dump["back_horizontal_offset"] = back_p.smoothed;
  dump["torso_arm_angle_raw"] = arm_p.raw;
  dump["torso_arm_angle"] = arm_p.smoothed;

  return detail::finish(ExerciseKind::front_raise, Side::both, std::move(rules), std::move(dump),
                        msg::front_raise_success);
}

/// Shoulder shrug: the shoulders must travel enough vertically while the
/// arms stay straight (interior elbow angle never below the straight-arm
/// threshold).
inline Evaluation evaluate_shoulder_shrug(const NormalizedSequence& seq,
                                          const ThresholdConfig& cfg) {
  OptionalSeries ly, ry, langle, rangle;
  for (const Pose& p : seq.frames) {
    ly.push_back(p.lshoulder().visible() ? std::optional<double>(p.lshoulder().y) : std::nullopt);
    ry.push_back(p.rshoulder().visible() ? std::optional<double>(p.rshoulder().y) : std::nullopt);
    langle.push_back(detail::elbow_angle(p, Side::left));
    rangle.push_back(detail::elbow_angle(p, Side::right));
  }

  const auto ly_p = detail::prepare(ly, "lshoulder", true);
  const auto ry_p = detail::prepare(ry, "rshoulder", true);
  const auto la_p = detail::prepare(langle, "lshoulder, lelbow, lwrist", true);
  const auto ra_p = detail::prepare(rangle, "rshoulder, relbow, rwrist", true);

  const double shoulder_range =
      0.5 * (value_range(ly_p.smoothed) + value_range(ry_p.smoothed));
  const double min_elbow = std::min(min_value(la_p.smoothed), min_value(ra_p.smoothed));

  std::vector<RuleResult> rules;
  rules.push_back(detail::make_rule("shoulder_shrug.shrug_range", shoulder_range, "torso units",
                                    cfg.shrug_range, shoulder_range >= cfg.shrug_range,
                                    msg::shrug_low_range));
  rules.push_back(detail::make_rule("shoulder_shrug.straight_arm", min_elbow, "degrees",
                                    cfg.shrug_straight_arm, min_elbow >= cfg.shrug_straight_arm,
                                    msg::shrug_bent_arms));

  std::map<std::string, Series> dump;
  dump["shoulder_y_left_raw"] = ly_p.raw;
  dump["shoulder_y_left"] = ly_p.smoothed;
  dump["shoulder_y_right_raw"] = ry_p.raw;
  dump["shoulder_y_right"] = ry_p.smoothed;
  dump["elbow_angle_left_raw"] = la_p.raw;
  dump["elbow_angle_left"] = la_p.smoothed;
  dump["elbow_angle_right_raw"] = ra_p.raw;
  dump["elbow_angle_right"] = ra_p.smoothed;

  return detail::finish(ExerciseKind::shoulder_shrug, Side::both, std::move(rules),
                        std::move(dump), msg::shrug_success);
}

/// Shoulder press: still back, elbows never drifting behind the neck
/// (against the detected facing direction), and a full overhead lockout.
inline Evaluation evaluate_shoulder_press(const NormalizedSequence& seq,
                                          const ThresholdConfig& cfg) {
  OptionalSeries back = detail::neck_hip_offset(seq.frames);

  OptionalSeries nose_offset, loff, roff, langle, rangle;
  for (const Pose& p : seq.frames) {
    const bool neck_ok = p.neck().visible();
    nose_offset.push_back(neck_ok && p.nose().visible()
                              ? std::optional<double>(p.nose().x - p.neck().x)
                              : std::nullopt);
    loff.push_back(neck_ok && p.lelbow().visible()
                       ? std::optional<double>(p.lelbow().x - p.neck().x)
                       : std::nullopt);
    roff.push_back(neck_ok && p.relbow().visible()
                       ? std::optional<double>(p.relbow().x - p.neck().x)
                       : std::nullopt);
    langle.push_back(detail::elbow_angle(p, Side::left));
    rangle.push_back(detail::elbow_angle(p, Side::right));
  }

  const auto back_p = detail::prepare(back, "neck, hips", true);
  const auto loff_p = detail::prepare(loff, "lelbow, neck", true);
  const auto roff_p = detail::prepare(roff, "relbow, neck", true);
  const auto la_p = detail::prepare(langle, "lshoulder, lelbow, lwrist", true);
  const auto ra_p = detail::prepare(rangle, "rshoulder, relbow, rwrist", true);

  // Facing sign: the nose sits in front of the neck in any side view; fall
  // back to the mean elbow offset when the nose is never visible.
  double facing = 0.0;
  if (detail::defined_count(nose_offset) > 0) {
    double sum = 0.0;
    for (const auto& v : nose_offset)
      if (v) sum += *v;
    facing = sum;
  } else {
    for (double v : loff_p.smoothed) facing += v;
    for (double v : roff_p.smoothed) facing += v;
  }
  const double facing_sign = facing < 0.0 ? -1.0 : 1.0;

  const double back_range = detail::max_excursion(back_p.smoothed);
  double behind = -std::numeric_limits<double>::infinity();
  for (const Series* s : {&loff_p.smoothed, &roff_p.smoothed})
    for (double v : *s) behind = std::max(behind, -facing_sign * v);
  const double lockout = std::max(max_value(la_p.smoothed), max_value(ra_p.smoothed));

  std::vector<RuleResult> rules;
  rules.push_back(detail::make_rule("shoulder_press.back_sway", back_range, "torso units",
                                    cfg.press_back_sway, back_range <= cfg.press_back_sway,
                                    msg::press_back));
  rules.push_back(detail::make_rule("shoulder_press.elbow_back", behind, "torso units",
                                    cfg.press_elbow_back, behind <= cfg.press_elbow_back,
                                    msg::press_rolling));
  rules.push_back(detail::make_rule("shoulder_press.lockout_angle", lockout, "degrees",
                                    cfg.press_lockout_angle, lockout >= cfg.press_lockout_angle,
                                    msg::press_partial));

  std::map<std::string, Series> dump;
  dump["back_horizontal_offset_raw"] = back_p.raw;
  dump["back_horizontal_offset"] = back_p.smoothed;
  dump["elbow_offset_left_raw"] = loff_p.raw;
  dump["elbow_offset_left"] = loff_p.smoothed;
  dump["elbow_offset_right_raw"] = roff_p.raw;
  dump["elbow_offset_right"] = roff_p.smoothed;
  dump["elbow_angle_left_raw"] = la_p.raw;
  dump["elbow_angle_left"] = la_p.smoothed;
  dump["elbow_angle_right_raw"] = ra_p.raw;
  dump["elbow_angle_right"] = ra_p.smoothed;

  return detail::finish(ExerciseKind::shoulder_press, Side::both, std::move(rules),
                        std::move(dump), msg::press_success);
}

inline Evaluation evaluate(const NormalizedSequence& seq, ExerciseKind exercise,
                           const ThresholdConfig& cfg) {
  switch (exercise) {
    case ExerciseKind::bicep_curl: return evaluate_bicep_curl(seq, cfg);
    case ExerciseKind::front_raise: return evaluate_front_raise(seq, cfg);
    case ExerciseKind::shoulder_shrug: return evaluate_shoulder_shrug(seq, cfg);
    case ExerciseKind::shoulder_press: return evaluate_shoulder_press(seq, cfg);
  }
  throw ParameterError("unknown exercise kind");
}

/// Full pipeline entry point: perspective detection (side-dependent
/// exercises), torso normalization, then the per-exercise evaluator.
inline Evaluation evaluate(const PoseSequence& seq, ExerciseKind exercise,
                           const ThresholdConfig& cfg = {}) {
  if (seq.frames.size() < 2)
    throw InsufficientDataError("evaluation needs at least 2 frames");
  NormalizedSequence normalized = normalize_sequence(seq);
  if (exercise == ExerciseKind::bicep_curl)
    normalized.side = detect_side(seq, exercise);
  return evaluate(normalized, exercise, cfg);
}

}  // namespace posetrainer

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetrainer/estimator.hpp"
#include "posetrainer/pose_io.hpp"
#include "posetrainer/synthetic.hpp"
#include "support/temp_dir.hpp"

using namespace posetrainer;
using nlohmann::json;

namespace {

std::string frame_doc(const std::vector<std::vector<double>>& people) {
  json arr = json::array();
  for (const auto& flat : people) arr.push_back({{"pose_keypoints_2d", flat}});
  return json{{"people", arr}}.dump();
}

std::vector<double> flat_pose(double conf, double neck_x = 100, double neck_y = 200) {
  std::vector<double> flat(54, 0.0);
  for (int i = 0; i < kPartCount; ++i) {
    flat[static_cast<std::size_t>(3 * i)] = 10.0 * i;
    flat[static_cast<std::size_t>(3 * i + 1)] = 20.0 * i;
    flat[static_cast<std::size_t>(3 * i + 2)] = conf;
  }
  flat[3] = neck_x;  // neck is index 1
  flat[4] = neck_y;
  return flat;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

PoseSequence random_sequence(std::mt19937_64& rng, std::size_t frames) {
  std::uniform_real_distribution<double> coord(-1e4, 1e4);
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  std::bernoulli_distribution hidden(0.2);
  PoseSequence seq;
  seq.source_id = "random_" + std::to_string(rng());
  if (rng() % 2 == 0) seq.frames_per_second = 30.0;
  for (std::size_t t = 0; t < frames; ++t) {
    Pose p;
    p.frame_index = static_cast<int>(t);
    for (auto& part : p.parts)
      part = hidden(rng) ? Part{} : Part::at(coord(rng), coord(rng), conf(rng));
    seq.frames.push_back(p);
  }
  return seq;
}

}  // namespace

TEST_CASE("parse_frame_file maps the flat keypoint array onto named parts") {
  const Pose p = parse_frame_file(frame_doc({flat_pose(0.9)}));
  CHECK(p.neck().x == 100.0);
  CHECK(p.neck().y == 200.0);
  for (const Part& part : p.parts) CHECK(part.visible());
}

TEST_CASE("confidence zero marks a part invisible and zeroes it") {
  auto flat = flat_pose(0.9);
  flat[3 * 3 + 2] = 0.0;  // relbow confidence
  const Pose p = parse_frame_file(frame_doc({flat}));
  CHECK_FALSE(p.relbow().visible());
  CHECK(p.relbow().x == 0.0);
  CHECK(p.relbow().y == 0.0);
  CHECK(p.rwrist().visible());
}

TEST_CASE("the highest-total-confidence person wins") {
  auto strong = flat_pose(0.5, 111, 222);  // summed confidence 9.0
  auto weak = flat_pose(0.25, 7, 7);       // summed confidence 4.5
  const Pose p = parse_frame_file(frame_doc({weak, strong}));
  CHECK(p.neck().x == 111.0);
  CHECK(p.neck().y == 222.0);
}

TEST_CASE("zero persons is an empty-frame error") {
  CHECK_THROWS_AS(parse_frame_file(frame_doc({})), EmptyFrameError);
}

TEST_CASE("malformed frame content is a parse error") {
  CHECK_THROWS_AS(parse_frame_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_frame_file("{}"), ParseError);
  CHECK_THROWS_AS(parse_frame_file(R"({"people": 3})"), ParseError);
  CHECK_THROWS_AS(parse_frame_file(R"({"people": [{}]})"), ParseError);

  auto short_array = flat_pose(0.9);
  short_array.pop_back();
  CHECK_THROWS_AS(parse_frame_file(frame_doc({short_array})), ParseError);

  auto bad_conf = flat_pose(0.9);
  bad_conf[2] = 1.5;
  CHECK_THROWS_AS(parse_frame_file(frame_doc({bad_conf})), ParseError);
  bad_conf[2] = -0.5;
  CHECK_THROWS_AS(parse_frame_file(frame_doc({bad_conf})), ParseError);
}

TEST_CASE("parse_frame_file is total over arbitrary bytes") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> len(0, 200);
  std::uniform_int_distribution<int> byte(0, 255);
  const std::string valid = frame_doc({flat_pose(0.9)});
  for (int it = 0; it < 500; ++it) {
    std::string content;
    if (it % 3 == 0) {
      content = valid;  // mutate a valid document
      const int mutations = 1 + it % 5;
      for (int m = 0; m < mutations && !content.empty(); ++m)
        content[rng() % content.size()] = static_cast<char>(byte(rng));
    } else {
      const int n = len(rng);
      for (int i = 0; i < n; ++i) content.push_back(static_cast<char>(byte(rng)));
    }
    try {
      (void)parse_frame_file(content);
    } catch (const Error&) {
      // any library error is acceptable; anything else would fail the test
    }
  }
  SUCCEED("no foreign exception or crash");
}

TEST_CASE("load_sequence keeps usable frames, drops empty ones, re-compacts indices") {
  testutil::TempDir dir;
  write(dir / "f_000.json", frame_doc({flat_pose(0.9)}));
  write(dir / "f_001.json", frame_doc({}));  // no person detected
  write(dir / "f_002.json", frame_doc({flat_pose(0.8)}));

  std::vector<std::string> warnings;
  const auto files = list_frame_files(dir.path());
  REQUIRE(files.size() == 3);
  const PoseSequence seq =
      load_sequence(files, "clip", [&](const std::string& w) { warnings.push_back(w); });
  CHECK(seq.frames.size() == 2);
  CHECK(seq.frames[0].frame_index == 0);
  CHECK(seq.frames[1].frame_index == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("f_001.json") != std::string::npos);
}

TEST_CASE("load_sequence needs two files and two usable frames") {
  testutil::TempDir dir;
  write(dir / "only.json", frame_doc({flat_pose(0.9)}));
  CHECK_THROWS_AS(load_sequence({dir / "only.json"}, "clip"), InsufficientDataError);

  write(dir / "empty1.json", frame_doc({}));
  std::vector<std::string> warnings;
  CHECK_THROWS_AS(load_sequence({dir / "only.json", dir / "empty1.json"}, "clip",
                                [&](const std::string& w) { warnings.push_back(w); }),
                  InsufficientDataError);
}

TEST_CASE("saved sequences round-trip exactly") {
  testutil::TempDir dir;
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 40; ++it) {
    const PoseSequence seq = random_sequence(rng, 2 + rng() % 6);
    const auto path = dir / ("seq_" + std::to_string(it) + ".seq.json");
    save_sequence(seq, path);
    CHECK(load_saved(path) == seq);
  }
}

TEST_CASE("load_saved validates schema version and structure") {
  testutil::TempDir dir;
  const auto path = dir / "bad.seq.json";

  write(path, "");
  CHECK_THROWS_AS(load_saved(path), ParseError);

  write(path, "{\"schema_version\": 99, \"source_id\": \"x\", \"frames\": []}");
  CHECK_THROWS_AS(load_saved(path), SchemaVersionError);

  write(path, "{\"schema_version\": 1, \"source_id\": \"x\"}");
  CHECK_THROWS_AS(load_saved(path), ParseError);

  write(path, "{\"schema_version\": 1, \"source_id\": \"x\", \"frames\": [ {\"frame_index\": 5, \"parts\": []} ]}");
  CHECK_THROWS_AS(load_saved(path), ParseError);

  CHECK_THROWS_AS(load_saved(dir / "missing.seq.json"), IoError);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*.json", "frame_000.json"));
  CHECK_FALSE(glob_match("*.json", "frame_000.jsonx"));
  CHECK(glob_match("frame_??.json", "frame_01.json"));
  CHECK_FALSE(glob_match("frame_??.json", "frame_1.json"));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("a*b*c", "a-xx-b-yy-c"));
  CHECK_FALSE(glob_match("a*b*c", "a-xx-c"));
}

TEST_CASE("list_frame_files filters and sorts by name") {
  testutil::TempDir dir;
  write(dir / "b.json", "{}");
  write(dir / "a.json", "{}");
  write(dir / "notes.txt", "x");
  const auto files = list_frame_files(dir.path());
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "a.json");
  CHECK(files[1].filename() == "b.json");
  CHECK_THROWS_AS(list_frame_files(dir / "missing"), IoError);
}

TEST_CASE("the external estimator runs as a subprocess") {
  testutil::TempDir dir;
  const auto video = dir / "clip.mp4";
  write(video, "fake video bytes");

  // Stub estimator: writes two frame files into the --write_json directory.
  const auto script = dir / "fake_estimator.sh";
  synthetic::BicepParams prm;
  prm.frames = 30;
  const PoseSequence seq = synthetic::make_bicep_sequence(prm, "clip");
  const auto staged = dir / "staged";
  synthetic::write_frame_files(seq, staged);
  write(script, "#!/bin/sh\ncp \"" + staged.string() + "\"/*.json \"$4\"\n");
  std::filesystem::permissions(script, std::filesystem::perms::owner_all);

  const auto files = run_estimator(video, script, dir / "json_out");
  CHECK(files.size() == seq.frames.size());
  const PoseSequence loaded = load_sequence(files, "clip");
  CHECK(loaded.frames.size() == seq.frames.size());

  CHECK_THROWS_AS(run_estimator(video, dir / "missing_bin", dir / "json_out2"), EstimatorError);
  CHECK_THROWS_AS(run_estimator(dir / "missing.mp4", script, dir / "json_out3"), IoError);

  const auto failing = dir / "failing.sh";
  write(failing, "#!/bin/sh\nexit 3\n");
  std::filesystem::permissions(failing, std::filesystem::perms::owner_all);
  CHECK_THROWS_AS(run_estimator(video, failing, dir / "json_out4"), EstimatorError);
}

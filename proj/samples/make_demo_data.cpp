// Generates a small demo dataset under ./demo_data: a keypoint folder for
// one good bicep curl, saved sequences for a labeled bicep dataset, and a
// matching manifest. Prints the CLI commands to try against it.

#include <filesystem>
#include <iostream>
#include <string>

#include "posetrainer/pose_io.hpp"
#include "posetrainer/synthetic.hpp"

using namespace posetrainer;

int main() {
  namespace fs = std::filesystem;
  const fs::path root = "demo_data";
  fs::create_directories(root / "sequences");

  // Keypoint folder, as the external estimator would emit it.
  synthetic::BicepParams good;
  good.swing_range_deg = 18.0;
  good.elbow_min_deg = 42.0;
  good.noise_sigma = 0.004;
  good.seed = 7;
  synthetic::write_frame_files(synthetic::make_bicep_sequence(good, "bicep_good_demo"),
                               root / "keypoints" / "bicep_good_demo");

  // A labeled dataset of saved sequences plus a manifest.
  std::string manifest;
  for (int i = 0; i < 6; ++i) {
    synthetic::BicepParams prm;
    prm.seed = 100 + static_cast<std::uint64_t>(i);
    prm.noise_sigma = 0.006;
    prm.spike_rate = 0.01;
    const bool is_good = i < 3;
    if (is_good) {
      prm.swing_range_deg = 12.0 + 3.0 * i;
      prm.elbow_min_deg = 40.0 + 2.0 * i;
    } else {
      prm.swing_range_deg = 50.0 + 5.0 * i;  // heavy shoulder swing
      prm.elbow_min_deg = 85.0 + 3.0 * i;    // partial curl
    }
    const std::string name =
        std::string("bicep_") + (is_good ? "good_" : "bad_") + std::to_string(i % 3 + 1);
    const fs::path dest = root / "sequences" / (name + ".seq.json");
    save_sequence(synthetic::make_bicep_sequence(prm, name), dest);
    manifest += dest.string() + (is_good ? " correct" : " incorrect") + " bicep_curl\n";
  }
  std::ofstream(root / "manifest.txt") << manifest;

  std::cout << "Demo data written to " << root.string() << "/\n\n"
            << "Try:\n"
            << "  posetrainer --mode evaluate --exercise bicep_curl"
            << " --input_folder demo_data/keypoints/bicep_good_demo --output_folder demo_out\n"
            << "  posetrainer --mode train --exercise bicep_curl"
            << " --input_folder demo_data/sequences --output_folder demo_model\n"
            << "  posetrainer --mode classify --input_folder demo_model"
            << " --sequence demo_data/sequences/bicep_bad_1.seq.json\n"
            << "  posetrainer --mode report --input_folder demo_model"
            << " --output_folder demo_out --seed 1 --train_fraction 0.6\n";
  return 0;
}

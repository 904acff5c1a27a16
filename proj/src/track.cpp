#include "rcc/track.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rcc/io.hpp"

namespace rcc {

int DrumTrack::hit_count() const {
  int n = 0;
  for (const auto& [frame, drums] : hits) n += drums.count();
  return n;
}

DrumSet DrumTrack::at(int frame) const {
  auto it = hits.find(frame);
  return it == hits.end() ? DrumSet{} : it->second;
}

void DrumTrack::add_hit(int frame, int drum) {
  if (drum < 0 || drum >= kDrumCount) throw std::invalid_argument("drum id out of range");
  if (frame < 0) throw std::invalid_argument("negative frame");
  hits[frame].add(drum);
  if (frame >= n_frames) n_frames = frame + 1;
}

void DrumTrack::validate() const {
  if (fps <= 0) throw std::invalid_argument("fps must be positive");
  for (const auto& [frame, drums] : hits) {
    if (frame < 0 || frame >= n_frames) throw std::invalid_argument("frame outside [0, n_frames)");
    if (drums.empty()) throw std::invalid_argument("empty hit set stored");
    if (drums.bits() >= (1u << kDrumCount)) throw std::invalid_argument("drum id out of range");
  }
}

std::string track_to_json(const DrumTrack& track) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["fps"] = track.fps;
  j["n_frames"] = track.n_frames;
  auto frames = nlohmann::ordered_json::array();
  for (const auto& [frame, drums] : track.hits) {
    frames.push_back({frame, drums.to_vector()});
  }
  j["frames"] = std::move(frames);
  return j.dump();
}

DrumTrack track_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  DrumTrack track;
  track.fps = j.at("fps").get<double>();
  track.n_frames = j.at("n_frames").get<int>();
  for (const auto& entry : j.at("frames")) {
    int frame = entry.at(0).get<int>();
    for (int drum : entry.at(1).get<std::vector<int>>()) {
      if (drum < 0 || drum >= kDrumCount) throw std::invalid_argument("drum id out of range");
      track.hits[frame].add(drum);
    }
  }
  track.validate();
  return track;
}

DrumTrack load_track(const std::string& path) {
  return track_from_json(read_file(path));
}

void save_track(const DrumTrack& track, const std::string& path) {
  write_file_atomic(path, track_to_json(track));
}

std::vector<int> DrumSet::to_vector() const {
  std::vector<int> out;
  for (int d = 0; d < kDrumCount; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

std::optional<int> drum_id_from_name(std::string_view name) {
  for (int d = 0; d < kDrumCount; ++d)
    if (kDrumNames[size_t(d)] == name) return d;
  return std::nullopt;
}

}  // namespace rcc

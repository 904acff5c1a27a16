#pragma once

#include <map>
#include <string>

#include "rcc/drums.hpp"

namespace rcc {

// Time-indexed drum-hit grid at a fixed frame rate. The canonical song
// representation: frame -> set of drums struck at that frame. Frames with
// no hits are not stored.
struct DrumTrack {
  double fps = 50.0;
  int n_frames = 0;
  std::map<int, DrumSet> hits;

  bool empty() const { return hits.empty(); }

  // Total number of (frame, drum) hit pairs.
  int hit_count() const;

  // Drum set at a frame; empty set when the frame holds no hits.
  DrumSet at(int frame) const;

  void add_hit(int frame, int drum);

  // Throws std::invalid_argument when an invariant is broken (drum id out of
  // range, frame outside [0, n_frames), empty stored set).
  void validate() const;
};

// Serialization of the track interchange format:
//   {"schema_version":1,"fps":50,"n_frames":N,"frames":[[frame,[drum...]],...]}
// Frames sorted ascending; deterministic byte output for a given track.
std::string track_to_json(const DrumTrack& track);
DrumTrack track_from_json(const std::string& text);

DrumTrack load_track(const std::string& path);
void save_track(const DrumTrack& track, const std::string& path);

}  // namespace rcc

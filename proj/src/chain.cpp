#include "rcc/chain.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rcc {

RhythmicContactChain build_chain(const DrumTrack& track, std::string song_id) {
  RhythmicContactChain chain;
  chain.fps = track.fps;
  chain.song_id = std::move(song_id);
  chain.steps.reserve(track.hits.size());
  for (const auto& [frame, drums] : track.hits) {
    chain.steps.push_back({drums, double(frame) / track.fps, frame, StickSet::both()});
  }
  return chain;
}

DrumTrack track_from_chain(const RhythmicContactChain& chain) {
  DrumTrack track;
  track.fps = chain.fps;
  for (const auto& step : chain.steps) {
    if (step.drums.empty()) throw std::invalid_argument("contact step with no drums");
    track.hits[step.frame] = step.drums;
    if (step.frame >= track.n_frames) track.n_frames = step.frame + 1;
  }
  return track;
}

std::vector<Segment> decompose(const RhythmicContactChain& chain, size_t steps_per_segment) {
  if (steps_per_segment < 1) throw std::invalid_argument("steps_per_segment must be >= 1");
  std::vector<Segment> segments;
  const size_t n = chain.size();
  for (size_t start = 0; start < n; start += steps_per_segment) {
    size_t end = std::min(start + steps_per_segment, n);
    Segment seg;
    seg.index = int(segments.size()) + 1;
    seg.start_step = start;
    seg.end_step = end;
    seg.frame_begin = chain.steps[start].frame;
    seg.frame_end = chain.steps[end - 1].frame + 1;
    segments.push_back(seg);
  }
  return segments;
}

size_t sample_init(const Segment& segment, Rng& rng) {
  if (segment.empty()) throw std::invalid_argument("cannot sample from an empty segment");
  std::uniform_int_distribution<size_t> dist(segment.start_step, segment.end_step - 1);
  return dist(rng);
}

GoalWindow goal_window(const DrumTrack& track, int t, int lookahead) {
  if (t < 0) throw std::invalid_argument("frame must be non-negative");
  if (lookahead < 0) throw std::invalid_argument("lookahead must be non-negative");
  GoalWindow window;
  window.t = t;
  window.lookahead = lookahead;
  window.rows.reserve(size_t(lookahead) + 1);
  for (int i = 0; i <= lookahead; ++i) {
    int frame = t + i;
    window.rows.push_back(frame < track.n_frames ? track.at(frame) : DrumSet{});
  }
  return window;
}

std::vector<double> GoalWindow::flatten() const {
  std::vector<double> out;
  out.reserve(rows.size() * kDrumCount);
  for (const auto& row : rows)
    for (int d = 0; d < kDrumCount; ++d) out.push_back(row.contains(d) ? 1.0 : 0.0);
  return out;
}

std::string chain_to_json(const RhythmicContactChain& chain, const std::vector<Segment>& segments) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["fps"] = chain.fps;
  j["song_id"] = chain.song_id;
  auto steps = nlohmann::ordered_json::array();
  for (const auto& step : chain.steps) {
    nlohmann::ordered_json s;
    s["frame"] = step.frame;
    s["time"] = step.time;
    s["drums"] = step.drums.to_vector();
    auto sticks = nlohmann::ordered_json::array();
    if (step.sticks.contains(Stick::Left)) sticks.push_back("L");
    if (step.sticks.contains(Stick::Right)) sticks.push_back("R");
    s["sticks"] = std::move(sticks);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  auto segs = nlohmann::ordered_json::array();
  for (const auto& seg : segments) {
    segs.push_back({{"index", seg.index},
                    {"start_step", seg.start_step},
                    {"end_step", seg.end_step},
                    {"frame_begin", seg.frame_begin},
                    {"frame_end", seg.frame_end}});
  }
  j["segments"] = std::move(segs);
  return j.dump();
}

}  // namespace rcc

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rcc/track.hpp"

namespace rcc {

// One timed contact event: the drums to strike, when, and which sticks may
// execute the strikes.
struct ContactStep {
  DrumSet drums;                      // nonempty
  double time = 0.0;                  // seconds, = frame / fps
  int frame = 0;
  StickSet sticks = StickSet::both();
};

// Ordered sequence of contact steps; frames strictly increasing.
struct RhythmicContactChain {
  std::vector<ContactStep> steps;
  double fps = 50.0;
  std::string song_id;

  size_t size() const { return steps.size(); }
};

// Half-open slice of a chain: contact steps [start_step, end_step) covering
// frames [frame_begin, frame_end).
struct Segment {
  int index = 1;  // 1-based segment number m
  size_t start_step = 0;
  size_t end_step = 0;
  int frame_begin = 0;
  int frame_end = 0;

  size_t step_count() const { return end_step - start_step; }
  bool empty() const { return start_step == end_step; }
};

// Upcoming contact targets [d_t .. d_{t+L}] as one-hot rows of width 6.
// Rows past the end of the track are all-zero.
struct GoalWindow {
  int t = 0;
  int lookahead = 0;
  std::vector<DrumSet> rows;  // size lookahead + 1

  // Row-major one-hot values, width 6 per row.
  std::vector<double> flatten() const;
};

using Rng = std::mt19937_64;

// One ContactStep per nonempty frame, in frame order; sticks default to
// {Left, Right}.
RhythmicContactChain build_chain(const DrumTrack& track, std::string song_id = {});

// Inverse of build_chain: reassembles the hit grid from chain steps.
DrumTrack track_from_chain(const RhythmicContactChain& chain);

// Splits the chain into ceil(N / steps_per_segment) segments; all but the
// last hold exactly steps_per_segment contact steps. Throws
// std::invalid_argument when steps_per_segment < 1.
std::vector<Segment> decompose(const RhythmicContactChain& chain, size_t steps_per_segment);

// Uniform contact-step index in [start_step, end_step). Throws
// std::invalid_argument on an empty segment.
size_t sample_init(const Segment& segment, Rng& rng);

GoalWindow goal_window(const DrumTrack& track, int t, int lookahead);

// Inspection export: steps plus segment index ranges.
std::string chain_to_json(const RhythmicContactChain& chain, const std::vector<Segment>& segments);

}  // namespace rcc

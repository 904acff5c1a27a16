#pragma once

#include <optional>
#include <string>

#include "rcc/chain.hpp"
#include "rcc/midi.hpp"
#include "rcc/track.hpp"

namespace rcc {

// Song-level complexity metrics. Metrics undefined for the input (too few
// events) are absent rather than zero.
struct SongFeatures {
  std::string song_id;
  double bpm = 120.0;
  int n_drums = 0;
  int time_sig_changes = 0;
  std::optional<double> npvi;           // [0, 200]
  std::optional<double> entropy;        // [0, 1]
  std::optional<double> polyphony_pct;  // [0, 100]
};

// Duration-weighted dominant tempo in BPM; 120 when the song carries no
// tempo event.
double compute_bpm(const MidiSong& song);

// Normalized Pairwise Variability Index over the chain's inter-onset
// intervals, with the conventional x100 factor. Needs at least three steps
// (two intervals); absent otherwise.
std::optional<double> compute_npvi(const RhythmicContactChain& chain);

// Shannon entropy of per-drum hit counts, normalized by log2 of the number
// of drums actually used; 0 for a single-drum track, absent for an empty one.
std::optional<double> compute_entropy(const DrumTrack& track);

// Number of time-signature meta events that differ from their predecessor;
// the initial signature is not a change.
int count_time_sig_changes(const MidiSong& song);

// Distinct drums with at least one hit.
int count_drums(const DrumTrack& track);

// Percentage of hit-bearing frames that request three or more simultaneous
// drums; absent for a track with no hits.
std::optional<double> compute_polyphony(const DrumTrack& track);

SongFeatures song_features(const MidiSong& song, const DrumTrack& track,
                           const RhythmicContactChain& chain, std::string song_id = {});

std::string features_to_json(const SongFeatures& f);

// Column order follows the feature report layout:
// song,n_drums,entropy,npvi,bpm,polyphony_pct,time_sig_changes
std::string features_csv_header();
std::string features_csv_row(const SongFeatures& f);

}  // namespace rcc

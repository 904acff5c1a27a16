#include "rcc/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>

#include "json.hpp"

namespace rcc {

double compute_bpm(const MidiSong& song) {
  if (song.tempo_events.empty()) return 60e6 / double(kDefaultUsPerQuarter);

  // Weight each distinct tempo value by the seconds it is in effect, from
  // tick 0 (SMF default tempo until the first event) to the song's end tick.
  TempoMap map(song.tempo_events, song.ticks_per_quarter);
  uint64_t end = song.end_tick();

  std::map<uint32_t, double> weight;           // us-per-quarter -> seconds
  std::map<uint32_t, uint64_t> first_seen;     // tie-break: earliest tempo wins
  uint64_t prev_tick = 0;
  uint32_t prev_us = kDefaultUsPerQuarter;
  uint64_t order = 0;
  auto close_span = [&](uint64_t until_tick) {
    double dur = map.seconds_at(until_tick) - map.seconds_at(prev_tick);
    weight[prev_us] += dur;
    if (!first_seen.count(prev_us)) first_seen[prev_us] = order++;
  };
  for (const auto& t : song.tempo_events) {
    if (t.tick > prev_tick) close_span(t.tick);
    prev_tick = t.tick;
    prev_us = t.us_per_quarter;
  }
  close_span(std::max(end, prev_tick));
  if (!first_seen.count(prev_us)) first_seen[prev_us] = order++;

  uint32_t best_us = prev_us;
  double best_weight = -1.0;
  for (const auto& [us, w] : weight) {
    bool better = w > best_weight ||
                  (w == best_weight && first_seen[us] < first_seen[best_us]);
    if (better) {
      best_us = us;
      best_weight = w;
    }
  }
  return 60e6 / double(best_us);
}

std::optional<double> compute_npvi(const RhythmicContactChain& chain) {
  const size_t n = chain.size();
  if (n < 3) return std::nullopt;
  std::vector<double> ioi(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) ioi[i] = chain.steps[i + 1].time - chain.steps[i].time;
  double sum = 0.0;
  for (size_t k = 0; k + 1 < ioi.size(); ++k) {
    sum += std::abs(ioi[k] - ioi[k + 1]) / ((ioi[k] + ioi[k + 1]) / 2.0);
  }
  return 100.0 * sum / double(ioi.size() - 1);
}

std::optional<double> compute_entropy(const DrumTrack& track) {
  std::array<int, kDrumCount> counts{};
  int total = 0;
  for (const auto& [frame, drums] : track.hits) {
    for (int d = 0; d < kDrumCount; ++d) {
      if (drums.contains(d)) {
        counts[size_t(d)]++;
        total++;
      }
    }
  }
  if (total == 0) return std::nullopt;
  int used = 0;
  for (int c : counts)
    if (c > 0) used++;
  if (used == 1) return 0.0;
  double h = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    double p = double(c) / double(total);
    h -= p * std::log2(p);
  }
  return h / std::log2(double(used));
}

int count_time_sig_changes(const MidiSong& song) {
  int changes = 0;
  for (size_t i = 1; i < song.time_sig_events.size(); ++i) {
    const auto& prev = song.time_sig_events[i - 1];
    const auto& cur = song.time_sig_events[i];
    if (cur.numerator != prev.numerator || cur.denominator != prev.denominator) changes++;
  }
  return changes;
}

int count_drums(const DrumTrack& track) {
  DrumSet used;
  for (const auto& [frame, drums] : track.hits) used = used | drums;
  return used.count();
}

std::optional<double> compute_polyphony(const DrumTrack& track) {
  int hit_frames = 0, poly_frames = 0;
  for (const auto& [frame, drums] : track.hits) {
    if (drums.empty()) continue;
    hit_frames++;
    if (drums.count() >= 3) poly_frames++;
  }
  if (hit_frames == 0) return std::nullopt;
  return 100.0 * double(poly_frames) / double(hit_frames);
}

SongFeatures song_features(const MidiSong& song, const DrumTrack& track,
                           const RhythmicContactChain& chain, std::string song_id) {
  SongFeatures f;
  f.song_id = std::move(song_id);
  f.bpm = compute_bpm(song);
  f.n_drums = count_drums(track);
  f.time_sig_changes = count_time_sig_changes(song);
  f.npvi = compute_npvi(chain);
  f.entropy = compute_entropy(track);
  f.polyphony_pct = compute_polyphony(track);
  return f;
}

namespace {

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string features_to_json(const SongFeatures& f) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["song"] = f.song_id;
  j["n_drums"] = f.n_drums;
  j["entropy"] = opt_json(f.entropy);
  j["npvi"] = opt_json(f.npvi);
  j["bpm"] = f.bpm;
  j["polyphony_pct"] = opt_json(f.polyphony_pct);
  j["time_sig_changes"] = f.time_sig_changes;
  return j.dump();
}

std::string features_csv_header() {
  return "song,n_drums,entropy,npvi,bpm,polyphony_pct,time_sig_changes";
}

std::string features_csv_row(const SongFeatures& f) {
  auto opt = [](const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); };
  return f.song_id + "," + std::to_string(f.n_drums) + "," + opt(f.entropy) + "," +
         opt(f.npvi) + "," + csv_number(f.bpm) + "," + opt(f.polyphony_pct) + "," +
         std::to_string(f.time_sig_changes);
}

}  // namespace rcc

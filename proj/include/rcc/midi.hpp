#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc/track.hpp"

namespace rcc {

// Thrown on malformed SMF input. `offset` is the byte position that made the
// parser give up.
class MidiParseError : public std::runtime_error {
 public:
  MidiParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

enum class MidiEventKind : uint8_t { NoteOn, NoteOff };

struct RawMidiEvent {
  uint64_t tick = 0;
  MidiEventKind kind = MidiEventKind::NoteOn;
  uint8_t channel = 0;  // 0-15; percussion is channel index 9
  uint8_t note = 0;     // 0-127
  uint8_t velocity = 0; // 0-127
};

struct TempoEvent {
  uint64_t tick = 0;
  uint32_t us_per_quarter = 500000;
};

struct TimeSigEvent {
  uint64_t tick = 0;
  int numerator = 4;
  int denominator = 4;
};

// All tracks of an SMF merged into one absolute-tick event stream, plus the
// collected tempo and time-signature meta events.
struct MidiSong {
  int ticks_per_quarter = 480;
  std::vector<RawMidiEvent> events;        // ordered by tick
  std::vector<TempoEvent> tempo_events;    // ordered by tick
  std::vector<TimeSigEvent> time_sig_events;

  // Largest tick seen anywhere in the file (events and meta).
  uint64_t end_tick() const;
};

inline constexpr uint32_t kDefaultUsPerQuarter = 500000;  // SMF default, 120 BPM
inline constexpr int kPercussionChannel = 9;              // GM channel 10

// Piecewise-constant tempo integration: converts absolute ticks to seconds.
class TempoMap {
 public:
  TempoMap(const std::vector<TempoEvent>& tempi, int ticks_per_quarter);
  double seconds_at(uint64_t tick) const;

 private:
  struct Span {
    uint64_t start_tick;
    double start_seconds;
    double seconds_per_tick;
  };
  std::vector<Span> spans_;
};

struct NoteOnEvent {
  uint8_t note = 0;
  uint8_t velocity = 0;  // >= 1; velocity-0 note-ons are note-offs
  double onset = 0.0;    // seconds
};

// Partial map MIDI note number -> drum id. Notes absent from the map are
// discarded by the articulation collapse.
struct DrumMapping {
  std::map<int, int> note_to_drum;

  bool empty() const { return note_to_drum.empty(); }
  // -1 when unmapped.
  int drum_for(int note) const;

  // General MIDI fallback covering the six-piece kit.
  static DrumMapping general_midi();
};

// Reads an SMF (format 0 or 1) from memory. Running status, meta and sysex
// events are handled; note-on/note-off events of all channels are kept.
// Throws MidiParseError on malformed input and on format 2 files.
MidiSong parse_smf(std::span<const uint8_t> bytes);

MidiSong load_smf(const std::string& path);

// Note-on events on the percussion channel, tick times converted to seconds
// through the tempo map, sorted by onset. Velocity-0 note-ons are excluded.
std::vector<NoteOnEvent> extract_drum_events(const MidiSong& song);

// For each drum with several distinct mapped note numbers present, keeps only
// the events of the most frequent note number (ties: lower note number).
// Unmapped notes are discarded. With `remap` set, minority-articulation
// events are relabeled to the majority note instead of dropped.
std::vector<NoteOnEvent> collapse_articulations(const std::vector<NoteOnEvent>& events,
                                                const DrumMapping& mapping,
                                                bool remap = false);

// Each event lands on frame round(onset * fps); duplicate (frame, drum) pairs
// merge into one hit. Throws std::invalid_argument on negative onsets.
DrumTrack quantize_to_track(const std::vector<NoteOnEvent>& events,
                            const DrumMapping& mapping, double fps = 50.0);

}  // namespace rcc

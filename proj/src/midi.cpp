#include "rcc/midi.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "rcc/io.hpp"

namespace rcc {
namespace {

// Cursor over the raw bytes; every read is bounds-checked and failures carry
// the byte offset.
class Reader {
 public:
  explicit Reader(std::span<const uint8_t> data) : data_(data) {}

  size_t pos() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }
  bool eof() const { return pos_ >= data_.size(); }

  uint8_t u8() {
    need(1, "unexpected end of file");
    return data_[pos_++];
  }
  uint16_t u16() {
    need(2, "unexpected end of file");
    uint16_t v = uint16_t(data_[pos_] << 8 | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  uint32_t u32() {
    need(4, "unexpected end of file");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = v << 8 | data_[pos_ + size_t(i)];
    pos_ += 4;
    return v;
  }
  uint32_t varint() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      uint8_t b = u8();
      v = v << 7 | uint32_t(b & 0x7f);
      if (!(b & 0x80)) return v;
    }
    throw MidiParseError("variable-length quantity longer than 4 bytes", pos_);
  }
  void skip(size_t n, const char* what) {
    need(n, what);
    pos_ += n;
  }
  std::span<const uint8_t> bytes(size_t n, const char* what) {
    need(n, what);
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  void need(size_t n, const char* what) const {
    if (data_.size() - pos_ < n) throw MidiParseError(what, pos_);
  }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

constexpr uint32_t fourcc(const char (&s)[5]) {
  return uint32_t(s[0]) << 24 | uint32_t(s[1]) << 16 | uint32_t(s[2]) << 8 | uint32_t(s[3]);
}

struct TrackData {
  std::vector<RawMidiEvent> events;
  std::vector<TempoEvent> tempi;
  std::vector<TimeSigEvent> time_sigs;
};

TrackData parse_track(Reader& r, size_t chunk_end) {
  TrackData out;
  uint64_t tick = 0;
  uint8_t running_status = 0;

  while (r.pos() < chunk_end) {
    tick += r.varint();
    uint8_t b = r.u8();
    uint8_t status;
    uint8_t first_data;
    if (b & 0x80) {
      status = b;
      first_data = 0;  // read below when needed
    } else {
      if (running_status == 0) throw MidiParseError("data byte without running status", r.pos() - 1);
      status = running_status;
      first_data = b;
    }

    if (status == 0xff) {  // meta event
      uint8_t type = r.u8();
      uint32_t len = r.varint();
      auto data = r.bytes(len, "meta event truncated");
      running_status = 0;
      if (type == 0x2f) {  // end of track
        if (r.pos() != chunk_end) r.skip(chunk_end - r.pos(), "track chunk truncated");
        break;
      }
      if (type == 0x51) {
        if (len != 3) throw MidiParseError("tempo meta event must carry 3 bytes", r.pos());
        uint32_t us = uint32_t(data[0]) << 16 | uint32_t(data[1]) << 8 | data[2];
        if (us == 0) throw MidiParseError("tempo of zero microseconds per quarter", r.pos());
        out.tempi.push_back({tick, us});
      } else if (type == 0x58) {
        if (len != 4) throw MidiParseError("time signature meta event must carry 4 bytes", r.pos());
        out.time_sigs.push_back({tick, int(data[0]), 1 << data[1]});
      }
      continue;
    }
    if (status == 0xf0 || status == 0xf7) {  // sysex
      uint32_t len = r.varint();
      r.skip(len, "sysex event truncated");
      running_status = 0;
      continue;
    }
    if (status >= 0xf0) throw MidiParseError("unexpected system message in SMF track", r.pos() - 1);

    running_status = status;
    uint8_t kind = status & 0xf0;
    uint8_t channel = status & 0x0f;
    uint8_t d0 = (b & 0x80) ? r.u8() : first_data;

    switch (kind) {
      case 0x80: {
        uint8_t vel = r.u8();
        out.events.push_back({tick, MidiEventKind::NoteOff, channel, d0, vel});
        break;
      }
      case 0x90: {
        uint8_t vel = r.u8();
        // Velocity-0 note-ons are note-offs by convention.
        auto k = vel == 0 ? MidiEventKind::NoteOff : MidiEventKind::NoteOn;
        out.events.push_back({tick, k, channel, d0, vel});
        break;
      }
      case 0xa0:
      case 0xb0:
      case 0xe0:
        r.u8();  // second data byte; event ignored
        break;
      case 0xc0:
      case 0xd0:
        break;  // single data byte already consumed
      default:
        throw MidiParseError("unknown channel message status", r.pos() - 1);
    }
  }
  if (r.pos() > chunk_end) throw MidiParseError("event ran past track chunk boundary", r.pos());
  return out;
}

}  // namespace

MidiSong parse_smf(std::span<const uint8_t> bytes) {
  Reader r(bytes);
  if (r.remaining() < 8 || r.u32() != fourcc("MThd"))
    throw MidiParseError("missing MThd header chunk", 0);
  uint32_t header_len = r.u32();
  if (header_len < 6) throw MidiParseError("MThd chunk shorter than 6 bytes", r.pos());
  uint16_t format = r.u16();
  uint16_t declared_tracks = r.u16();
  uint16_t division = r.u16();
  r.skip(header_len - 6, "MThd chunk truncated");

  if (format == 2) throw MidiParseError("SMF format 2 is not supported", 8);
  if (format > 2) throw MidiParseError("unknown SMF format", 8);
  if (division & 0x8000) throw MidiParseError("SMPTE time division is not supported", 12);
  if (division == 0) throw MidiParseError("zero ticks per quarter note", 12);

  MidiSong song;
  song.ticks_per_quarter = division;

  std::vector<TrackData> tracks;
  while (!r.eof()) {
    if (r.remaining() < 8) throw MidiParseError("trailing bytes too short for a chunk header", r.pos());
    uint32_t id = r.u32();
    uint32_t len = r.u32();
    r.need(len, "chunk length exceeds file size");
    if (id != fourcc("MTrk")) {
      r.skip(len, "chunk truncated");  // alien chunks are skipped per the SMF spec
      continue;
    }
    size_t chunk_end = r.pos() + len;
    tracks.push_back(parse_track(r, chunk_end));
  }
  if (tracks.empty()) throw MidiParseError("file contains no track chunks", bytes.size());
  (void)declared_tracks;  // some writers get the count wrong; actual chunks win

  for (const auto& t : tracks) {
    song.events.insert(song.events.end(), t.events.begin(), t.events.end());
    song.tempo_events.insert(song.tempo_events.end(), t.tempi.begin(), t.tempi.end());
    song.time_sig_events.insert(song.time_sig_events.end(), t.time_sigs.begin(), t.time_sigs.end());
  }
  auto by_tick = [](const auto& a, const auto& b) { return a.tick < b.tick; };
  std::stable_sort(song.events.begin(), song.events.end(), by_tick);
  std::stable_sort(song.tempo_events.begin(), song.tempo_events.end(), by_tick);
  std::stable_sort(song.time_sig_events.begin(), song.time_sig_events.end(), by_tick);
  return song;
}

MidiSong load_smf(const std::string& path) {
  std::string raw = read_file(path);
  return parse_smf(std::span(reinterpret_cast<const uint8_t*>(raw.data()), raw.size()));
}

uint64_t MidiSong::end_tick() const {
  uint64_t end = 0;
  if (!events.empty()) end = std::max(end, events.back().tick);
  if (!tempo_events.empty()) end = std::max(end, tempo_events.back().tick);
  if (!time_sig_events.empty()) end = std::max(end, time_sig_events.back().tick);
  return end;
}

TempoMap::TempoMap(const std::vector<TempoEvent>& tempi, int ticks_per_quarter) {
  double spt = double(kDefaultUsPerQuarter) / 1e6 / double(ticks_per_quarter);
  spans_.push_back({0, 0.0, spt});
  for (const auto& t : tempi) {
    const Span& cur = spans_.back();
    double at = cur.start_seconds + double(t.tick - cur.start_tick) * cur.seconds_per_tick;
    double next_spt = double(t.us_per_quarter) / 1e6 / double(ticks_per_quarter);
    if (t.tick == cur.start_tick) {
      spans_.back() = {t.tick, cur.start_seconds, next_spt};
    } else {
      spans_.push_back({t.tick, at, next_spt});
    }
  }
}

double TempoMap::seconds_at(uint64_t tick) const {
  auto it = std::upper_bound(spans_.begin(), spans_.end(), tick,
                             [](uint64_t t, const Span& s) { return t < s.start_tick; });
  const Span& s = *std::prev(it);
  return s.start_seconds + double(tick - s.start_tick) * s.seconds_per_tick;
}

std::vector<NoteOnEvent> extract_drum_events(const MidiSong& song) {
  TempoMap tempo(song.tempo_events, song.ticks_per_quarter);
  std::vector<NoteOnEvent> out;
  for (const auto& e : song.events) {
    if (e.kind != MidiEventKind::NoteOn || e.channel != kPercussionChannel) continue;
    out.push_back({e.note, e.velocity, tempo.seconds_at(e.tick)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NoteOnEvent& a, const NoteOnEvent& b) { return a.onset < b.onset; });
  return out;
}

int DrumMapping::drum_for(int note) const {
  auto it = note_to_drum.find(note);
  return it == note_to_drum.end() ? -1 : it->second;
}

DrumMapping DrumMapping::general_midi() {
  DrumMapping m;
  m.note_to_drum = {
      {38, int(Drum::Snare)},   {40, int(Drum::Snare)},
      {42, int(Drum::HiHat)},   {44, int(Drum::HiHat)},   {46, int(Drum::HiHat)},
      {48, int(Drum::Tom1)},    {50, int(Drum::Tom1)},
      {45, int(Drum::Tom2)},    {47, int(Drum::Tom2)},
      {49, int(Drum::Cymbal1)}, {55, int(Drum::Cymbal1)},
      {51, int(Drum::Cymbal2)}, {57, int(Drum::Cymbal2)}, {59, int(Drum::Cymbal2)},
  };
  return m;
}

std::vector<NoteOnEvent> collapse_articulations(const std::vector<NoteOnEvent>& events,
                                                const DrumMapping& mapping, bool remap) {
  // Count events per note number, grouped by target drum.
  std::array<std::map<int, int>, kDrumCount> counts;
  for (const auto& e : events) {
    int drum = mapping.drum_for(e.note);
    if (drum >= 0) counts[size_t(drum)][e.note]++;
  }
  std::array<int, kDrumCount> keeper;
  keeper.fill(-1);
  for (int d = 0; d < kDrumCount; ++d) {
    int best_note = -1, best_count = 0;
    for (const auto& [note, count] : counts[size_t(d)]) {
      if (count > best_count) {  // ties keep the lower note number (map is ordered)
        best_note = note;
        best_count = count;
      }
    }
    keeper[size_t(d)] = best_note;
  }

  std::vector<NoteOnEvent> out;
  out.reserve(events.size());
  for (const auto& e : events) {
    int drum = mapping.drum_for(e.note);
    if (drum < 0) continue;
    if (e.note == keeper[size_t(drum)]) {
      out.push_back(e);
    } else if (remap) {
      NoteOnEvent relabeled = e;
      relabeled.note = uint8_t(keeper[size_t(drum)]);
      out.push_back(relabeled);
    }
  }
  return out;
}

DrumTrack quantize_to_track(const std::vector<NoteOnEvent>& events, const DrumMapping& mapping,
                            double fps) {
  if (fps <= 0) throw std::invalid_argument("fps must be positive");
  DrumTrack track;
  track.fps = fps;
  for (const auto& e : events) {
    if (e.onset < 0) throw std::invalid_argument("negative onset");
    int drum = mapping.drum_for(e.note);
    if (drum < 0) continue;
    track.add_hit(int(std::llround(e.onset * fps)), drum);
  }
  return track;
}

}  // namespace rcc

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcc {

inline constexpr int kDrumCount = 6;

enum class Drum : int {
  HiHat = 0,
  Snare = 1,
  Tom1 = 2,
  Tom2 = 3,
  Cymbal1 = 4,
  Cymbal2 = 5,
};

// Canonical kit names, indexed by drum id.
inline constexpr std::array<std::string_view, kDrumCount> kDrumNames = {
    "hi-hat", "snare", "tom 1", "tom 2", "cymbal 1", "cymbal 2"};

std::optional<int> drum_id_from_name(std::string_view name);

// Subset of the six drums, stored as a bitmask. Value type, cheap to copy.
class DrumSet {
 public:
  constexpr DrumSet() = default;
  constexpr explicit DrumSet(uint8_t bits) : bits_(bits & 0x3f) {}

  static DrumSet single(int drum) { return DrumSet(uint8_t(1u << drum)); }

  constexpr bool contains(int drum) const { return (bits_ >> drum) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr uint8_t bits() const { return bits_; }

  void add(int drum) { bits_ |= uint8_t(1u << drum); }
  void remove(int drum) { bits_ &= uint8_t(~(1u << drum)); }

  // Ascending drum ids.
  std::vector<int> to_vector() const;

  friend constexpr DrumSet operator&(DrumSet a, DrumSet b) {
    return DrumSet(uint8_t(a.bits_ & b.bits_));
  }
  friend constexpr DrumSet operator|(DrumSet a, DrumSet b) {
    return DrumSet(uint8_t(a.bits_ | b.bits_));
  }
  // Set difference.
  friend constexpr DrumSet operator-(DrumSet a, DrumSet b) {
    return DrumSet(uint8_t(a.bits_ & ~b.bits_));
  }
  friend constexpr bool operator==(DrumSet a, DrumSet b) { return a.bits_ == b.bits_; }

 private:
  uint8_t bits_ = 0;
};

enum class Stick : int { Left = 0, Right = 1 };

inline constexpr const char* stick_label(Stick s) {
  return s == Stick::Left ? "L" : "R";
}

// Subset of {Left, Right}.
class StickSet {
 public:
  constexpr StickSet() = default;
  constexpr explicit StickSet(uint8_t bits) : bits_(bits & 0x3) {}

  static constexpr StickSet both() { return StickSet(0x3); }
  static StickSet single(Stick s) { return StickSet(uint8_t(1u << int(s))); }

  constexpr bool contains(Stick s) const { return (bits_ >> int(s)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  friend constexpr bool operator==(StickSet a, StickSet b) { return a.bits_ == b.bits_; }

 private:
  uint8_t bits_ = 0;
};

}  // namespace rcc

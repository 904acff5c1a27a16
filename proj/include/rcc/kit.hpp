#pragma once

#include <array>
#include <string>

#include "rcc/drums.hpp"
#include "rcc/reward.hpp"

namespace rcc {

struct DrumGeometry {
  int id = 0;
  std::string name;
  Vec3 center{0, 0, 0};       // meters; z is the top-plane height
  double radius = 0.1;        // meters
  double surface_height = 0;  // top plane, meters
};

// Six-piece kit: positions in the robot frame, x forward, z up. Footprints
// (horizontal projections) must not overlap so a descending tip is never
// ambiguous between two drums.
struct DrumKitLayout {
  std::array<DrumGeometry, kDrumCount> drums;

  const DrumGeometry& drum(int id) const { return drums[size_t(id)]; }

  std::array<Vec3, kDrumCount> centers() const;

  // Throws std::invalid_argument on non-positive radii or overlapping
  // footprints.
  void validate() const;

  static DrumKitLayout standard();
};

}  // namespace rcc

#include "rcc/kit.hpp"

#include <cmath>
#include <stdexcept>

namespace rcc {

std::array<Vec3, kDrumCount> DrumKitLayout::centers() const {
  std::array<Vec3, kDrumCount> out;
  for (int d = 0; d < kDrumCount; ++d) out[size_t(d)] = drums[size_t(d)].center;
  return out;
}

void DrumKitLayout::validate() const {
  for (const auto& d : drums) {
    if (d.radius <= 0) throw std::invalid_argument("drum radius must be positive for " + d.name);
  }
  for (int a = 0; a < kDrumCount; ++a) {
    for (int b = a + 1; b < kDrumCount; ++b) {
      const auto& da = drums[size_t(a)];
      const auto& db = drums[size_t(b)];
      double dx = da.center.x() - db.center.x();
      double dy = da.center.y() - db.center.y();
      double dist = std::hypot(dx, dy);
      if (dist < da.radius + db.radius) {
        throw std::invalid_argument("drum footprints overlap: " + da.name + " and " + db.name);
      }
    }
  }
}

DrumKitLayout DrumKitLayout::standard() {
  auto make = [](Drum id, double x, double y, double z, double r) {
    DrumGeometry g;
    g.id = int(id);
    g.name = std::string(kDrumNames[size_t(id)]);
    g.center = Vec3(x, y, z);
    g.radius = r;
    g.surface_height = z;
    return g;
  };
  DrumKitLayout kit;
  kit.drums[size_t(Drum::HiHat)] = make(Drum::HiHat, 0.30, 0.38, 0.75, 0.12);
  kit.drums[size_t(Drum::Snare)] = make(Drum::Snare, 0.40, 0.10, 0.70, 0.13);
  kit.drums[size_t(Drum::Tom1)] = make(Drum::Tom1, 0.62, 0.14, 0.80, 0.09);
  kit.drums[size_t(Drum::Tom2)] = make(Drum::Tom2, 0.62, -0.14, 0.80, 0.09);
  kit.drums[size_t(Drum::Cymbal1)] = make(Drum::Cymbal1, 0.75, 0.32, 0.95, 0.12);
  kit.drums[size_t(Drum::Cymbal2)] = make(Drum::Cymbal2, 0.75, -0.32, 0.95, 0.12);
  kit.validate();
  return kit;
}

}  // namespace rcc

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace luban {

// How a block behaves for rendering and movement. Opaque and transparent
// blocks are solid obstacles; climbable cells can be occupied and climbed;
// liquid cells can never be entered.
enum class RenderClass { opaque, transparent, climbable, liquid };

struct Rgb {
  uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct MaterialInfo {
  Rgb color;
  RenderClass cls = RenderClass::opaque;
};

class MaterialTable {
 public:
  // Table with the built-in labels: plank, stone, glass, ladder, water,
  // dirt, air.
  static const MaterialTable& defaults();

  bool known(std::string_view label) const;
  // Info for a label; unknown labels render as a fixed gray opaque block so
  // lookups stay total.
  const MaterialInfo& info(std::string_view label) const;

  // Picks the material for a feature from its appearance annotation: the
  // first word of the text that names a known label (a trailing 's' is
  // tolerated), falling back to "stone".
  std::string from_annotation(std::string_view anno) const;

  void set(std::string label, MaterialInfo info);

 private:
  std::map<std::string, MaterialInfo, std::less<>> entries_;
  MaterialInfo unknown_{{90, 90, 90}, RenderClass::opaque};
};

inline bool is_solid(RenderClass c) {
  return c == RenderClass::opaque || c == RenderClass::transparent;
}

}  // namespace luban

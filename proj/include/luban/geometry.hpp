#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "luban/error.hpp"

namespace luban {

struct Vec3i {
  int x = 0, y = 0, z = 0;

  friend constexpr auto operator<=>(const Vec3i&, const Vec3i&) = default;
  constexpr Vec3i operator+(const Vec3i& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3i operator-(const Vec3i& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

inline int l1_distance(const Vec3i& a, const Vec3i& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

struct Vec3iHash {
  size_t operator()(const Vec3i& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int c : {v.x, v.y, v.z}) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(c));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Exact multiple of one half block. The DSL only ever needs centers on the
// integer or half-integer lattice, so everything geometric stays exact.
struct Half {
  int twice = 0;

  static constexpr Half of_int(int v) { return Half{2 * v}; }
  static constexpr Half of_twice(int t) { return Half{t}; }

  constexpr bool integral() const { return twice % 2 == 0; }
  // Value as an integer; caller must know it is integral.
  constexpr int as_int() const { return twice / 2; }
  constexpr int floor() const { return (twice >= 0 ? twice : twice - 1) / 2; }

  friend constexpr auto operator<=>(const Half&, const Half&) = default;
  constexpr Half operator+(Half o) const { return Half{twice + o.twice}; }
  constexpr Half operator-(Half o) const { return Half{twice - o.twice}; }
  constexpr Half operator-() const { return Half{-twice}; }

  std::string str() const;  // "3", "-2", "0.5", "-1.5"
};

struct Half3 {
  Half x, y, z;

  friend constexpr auto operator<=>(const Half3&, const Half3&) = default;
  constexpr Half3 operator+(const Half3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Half3 operator-(const Half3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr bool integral() const { return x.integral() && y.integral() && z.integral(); }
};

struct Half2 {
  Half x, y;
  friend constexpr auto operator<=>(const Half2&, const Half2&) = default;
};

// Axis-aligned cell box, min inclusive, max inclusive. Empty when no cell
// has been folded in yet.
struct CellBox {
  bool empty = true;
  Vec3i min, max;

  void add(const Vec3i& c);
  void add(const CellBox& o);
  bool contains(const Vec3i& c) const;
  Vec3i extent() const;  // per-axis cell counts; {0,0,0} when empty

  friend bool operator==(const CellBox&, const CellBox&) = default;
};

// World axes: x east, y north, z up.
enum class Orientation { up, down, north, south, east, west };

constexpr std::array<Orientation, 6> kAllOrientations = {
    Orientation::up,   Orientation::down, Orientation::north,
    Orientation::south, Orientation::east, Orientation::west};

std::string_view orientation_name(Orientation o);
Orientation parse_orientation(std::string_view word);  // throws bad_orientation

// Image of an exact point under the orientation's rotation about the origin.
Half3 orient_point(const Half3& p, Orientation o);

// Image of a unit cell: rotate its center and take the containing cell.
Vec3i orient_cell(const Vec3i& c, Orientation o);

Orientation inverse_orientation(Orientation o);

}  // namespace luban

#include "luban/geometry.hpp"

#include <algorithm>

namespace luban {

std::string Half::str() const {
  if (integral()) return std::to_string(twice / 2);
  // -3 -> "-1.5": print the floor-less integer part with the sign up front.
  int whole = twice / 2;  // truncates toward zero
  std::string out;
  if (twice < 0 && whole == 0) out += "-";
  out += std::to_string(whole);
  out += ".5";
  return out;
}

void CellBox::add(const Vec3i& c) {
  if (empty) {
    min = max = c;
    empty = false;
    return;
  }
  min.x = std::min(min.x, c.x);
  min.y = std::min(min.y, c.y);
  min.z = std::min(min.z, c.z);
  max.x = std::max(max.x, c.x);
  max.y = std::max(max.y, c.y);
  max.z = std::max(max.z, c.z);
}

void CellBox::add(const CellBox& o) {
  if (o.empty) return;
  add(o.min);
  add(o.max);
}

bool CellBox::contains(const Vec3i& c) const {
  if (empty) return false;
  return c.x >= min.x && c.x <= max.x && c.y >= min.y && c.y <= max.y &&
         c.z >= min.z && c.z <= max.z;
}

Vec3i CellBox::extent() const {
  if (empty) return {0, 0, 0};
  return {max.x - min.x + 1, max.y - min.y + 1, max.z - min.z + 1};
}

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::up: return "up";
    case Orientation::down: return "down";
    case Orientation::north: return "north";
    case Orientation::south: return "south";
    case Orientation::east: return "east";
    case Orientation::west: return "west";
  }
  return "up";
}

Orientation parse_orientation(std::string_view word) {
  for (Orientation o : kAllOrientations) {
    if (word == orientation_name(o)) return o;
  }
  fail(Errc::bad_orientation, "'" + std::string(word) + "' is not an orientation");
}

Half3 orient_point(const Half3& p, Orientation o) {
  switch (o) {
    case Orientation::up: return {p.x, p.y, p.z};
    case Orientation::down: return {p.x, -p.y, -p.z};
    case Orientation::north: return {p.x, p.z, -p.y};
    case Orientation::south: return {p.x, -p.z, p.y};
    case Orientation::east: return {p.z, p.y, -p.x};
    case Orientation::west: return {-p.z, p.y, p.x};
  }
  return p;
}

Vec3i orient_cell(const Vec3i& c, Orientation o) {
  // The rotations are signed axis permutations, so the floor of the rotated
  // center is componentwise: +axis keeps the coordinate, -axis maps v to
  // -v-1 (floor of -(v+0.5)-0.5... i.e. reflect the cell, not the corner).
  const int nx = -c.x - 1, ny = -c.y - 1, nz = -c.z - 1;
  switch (o) {
    case Orientation::up: return {c.x, c.y, c.z};
    case Orientation::down: return {c.x, ny, nz};
    case Orientation::north: return {c.x, c.z, ny};
    case Orientation::south: return {c.x, nz, c.y};
    case Orientation::east: return {c.z, c.y, nx};
    case Orientation::west: return {nz, c.y, c.x};
  }
  return c;
}

Orientation inverse_orientation(Orientation o) {
  switch (o) {
    case Orientation::up: return Orientation::up;
    case Orientation::down: return Orientation::down;
    case Orientation::north: return Orientation::south;
    case Orientation::south: return Orientation::north;
    case Orientation::east: return Orientation::west;
    case Orientation::west: return Orientation::east;
  }
  return o;
}

}  // namespace luban

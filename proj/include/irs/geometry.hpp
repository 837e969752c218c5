// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

namespace irs {

// Point or direction in the floor plane, meters.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }
inline Vec2 normalized(Vec2 a) { return (1.0 / norm(a)) * a; }

// Axis-aligned rectangle.
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  bool valid() const { return x_min <= x_max && y_min <= y_max; }
};

// True if the closed segment [a, b] touches the closed rectangle.
bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r);

// Angle of target as seen from an array at source whose broadside is
// source_normal: sin(theta) is the component of the unit direction along
// the array axis, signed by cross(normal, direction). |theta| < pi/2.
// Throws BehindArray if the target is not strictly in front of the array.
double observation_angle(Vec2 source_pos, Vec2 source_normal, Vec2 target_pos);

}  // namespace irs

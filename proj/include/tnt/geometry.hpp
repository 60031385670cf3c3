#pragma once

#include <cstddef>

#include "tnt/events.hpp"

namespace tnt {

/// Constant optical flow in pixels per unit of (normalized) time. Also reused
/// as a plain 2-D offset where a translation is meant.
struct FlowVector {
  double vx = 0.0;
  double vy = 0.0;

  friend bool operator==(const FlowVector&, const FlowVector&) = default;
  FlowVector operator+(const FlowVector& o) const { return {vx + o.vx, vy + o.vy}; }
  FlowVector operator-() const { return {-vx, -vy}; }
};

struct Landmark {
  double lx = 0.0;
  double ly = 0.0;

  friend bool operator==(const Landmark&, const Landmark&) = default;
};

struct ClipBounds {
  int width = 1;
  int height = 1;
};

/// Default cutoff below which events cannot be temporally normalized (half of
/// the first time bin). Events below it are dropped, never clamped.
inline constexpr double kDefaultTntFloor = 0.5;

struct TntResult {
  EventStream stream;
  std::size_t dropped = 0;
};

struct ClipResult {
  EventStream stream;
  std::size_t dropped = 0;
  double drop_fraction = 0.0;
};

/// Constant-flow motion model: (x, y, t) -> (x + vx*t, y + vy*t, t).
EventStream apply_shear(const EventStream& stream, const FlowVector& v);

/// Temporal normalization: (x, y, t) -> (x/t, y/t, t) for t >= t_floor;
/// events below the floor are dropped and counted.
TntResult apply_tnt(const EventStream& stream, double t_floor = kDefaultTntFloor);

/// (x, y, t) -> (x + kx, y + ky, t).
EventStream translate_events(const EventStream& stream, const FlowVector& k);

/// translate_events(stream, (-lx, -ly)).
EventStream center_events(const EventStream& stream, const Landmark& l);

/// Shifts coordinates by (+W/2, +H/2) so the transform origin maps to the
/// canvas center, then drops events outside [0,W) x [0,H).
ClipResult recanonicalize(const EventStream& stream, const ClipBounds& bounds);

}  // namespace tnt

#include "tnt/geometry.hpp"

namespace tnt {

EventStream apply_shear(const EventStream& stream, const FlowVector& v) {
  EventStream out = stream;
  for (Event& e : out.events) {
    e.x += v.vx * e.t;
    e.y += v.vy * e.t;
  }
  return out;
}

TntResult apply_tnt(const EventStream& stream, double t_floor) {
  TntResult result;
  result.stream.width = stream.width;
  result.stream.height = stream.height;
  result.stream.events.reserve(stream.size());
  for (const Event& e : stream.events) {
    if (e.t < t_floor) {
      ++result.dropped;
      continue;
    }
    result.stream.events.push_back(Event{e.x / e.t, e.y / e.t, e.t, e.p});
  }
  return result;
}

EventStream translate_events(const EventStream& stream, const FlowVector& k) {
  EventStream out = stream;
  for (Event& e : out.events) {
    e.x += k.vx;
    e.y += k.vy;
  }
  return out;
}

EventStream center_events(const EventStream& stream, const Landmark& l) {
  return translate_events(stream, FlowVector{-l.lx, -l.ly});
}

ClipResult recanonicalize(const EventStream& stream, const ClipBounds& bounds) {
  ClipResult result;
  result.stream.width = bounds.width;
  result.stream.height = bounds.height;
  result.stream.events.reserve(stream.size());
  const double cx = bounds.width / 2.0;
  const double cy = bounds.height / 2.0;
  for (const Event& e : stream.events) {
    const double x = e.x + cx;
    const double y = e.y + cy;
    if (x < 0.0 || x >= bounds.width || y < 0.0 || y >= bounds.height) {
      ++result.dropped;
      continue;
    }
    result.stream.events.push_back(Event{x, y, e.t, e.p});
  }
  result.drop_fraction =
      stream.empty() ? 0.0
                     : static_cast<double>(result.dropped) / static_cast<double>(stream.size());
  return result;
}

}  // namespace tnt

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tnt/error.hpp"

namespace tnt {

/// One polarity-signed change at a spatiotemporal position. Coordinates are
/// real-valued: integer pixels in raw camera streams, arbitrary reals after
/// geometric transforms. Timestamps are microseconds in raw streams and
/// dimensionless after normalization to [0, B-1].
struct Event {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  int p = 1;  // {-1, +1}; {0,1} file encodings are remapped at codec boundaries

  friend bool operator==(const Event&, const Event&) = default;
};

struct EventStream {
  int width = 0;
  int height = 0;
  std::vector<Event> events;

  bool empty() const { return events.empty(); }
  std::size_t size() const { return events.size(); }

  friend bool operator==(const EventStream&, const EventStream&) = default;
};

/// Affine time remap t -> (B-1)(t - t1) / (tN - t1).
struct TimeNormalization {
  double t1 = 0.0;
  double tN = 0.0;
  int bins = 2;

  double apply(double t) const { return (bins - 1) * (t - t1) / (tN - t1); }
};

struct ValidationResult {
  EventStream stream;
  std::size_t out_of_bounds = 0;
};

// ---- AER binary codec -------------------------------------------------------
//
// 5 bytes per event: byte0 = x, byte1 = y, byte2 bit7 = polarity (1 -> +1),
// byte2 bits6..0 ++ byte3 ++ byte4 = 23-bit big-endian timestamp in us.

EventStream decode_aer(const std::vector<std::uint8_t>& bytes, int width, int height);
std::vector<std::uint8_t> encode_aer(const EventStream& stream);

// ---- Text codec -------------------------------------------------------------
//
// One event per line, "x,y,t_us,p" with p in {-1,1}; an optional header line
// "x,y,t,p" is skipped on read and always written.

EventStream read_events_text(std::istream& in, int width, int height);
EventStream read_events_text_file(const std::string& path, int width, int height);
void write_events_text(std::ostream& out, const EventStream& stream);
void write_events_text_file(const std::string& path, const EventStream& stream);

// ---- Stream maintenance -----------------------------------------------------

/// Scale timestamps so the first event lands on 0 and the last on B-1.
/// Requires at least two events spanning a nonzero duration.
EventStream normalize_timestamps(const EventStream& stream, int bins);

/// Stable-sorts by timestamp, remaps {0,1} polarities to {-1,+1}, and counts
/// (but keeps) events outside the sensor bounds. Rejects non-finite fields.
ValidationResult validate_stream(const EventStream& stream);

TimeNormalization time_normalization_of(const EventStream& stream, int bins);

}  // namespace tnt

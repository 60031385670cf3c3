#include "tnt/events.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tnt {

namespace {

constexpr std::uint32_t kMaxAerTimestamp = 1u << 23;

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

EventStream decode_aer(const std::vector<std::uint8_t>& bytes, int width, int height) {
  if (bytes.size() % 5 != 0) {
    fail(ErrorCode::malformed_stream,
         "AER payload of " + std::to_string(bytes.size()) +
             " bytes is not a multiple of the 5-byte record size");
  }
  EventStream stream;
  stream.width = width;
  stream.height = height;
  stream.events.reserve(bytes.size() / 5);
  for (std::size_t i = 0; i < bytes.size(); i += 5) {
    const std::uint8_t b0 = bytes[i + 0];
    const std::uint8_t b1 = bytes[i + 1];
    const std::uint8_t b2 = bytes[i + 2];
    Event e;
    e.x = b0;
    e.y = b1;
    e.p = (b2 & 0x80) ? +1 : -1;
    e.t = static_cast<double>((static_cast<std::uint32_t>(b2 & 0x7F) << 16) |
                              (static_cast<std::uint32_t>(bytes[i + 3]) << 8) |
                              static_cast<std::uint32_t>(bytes[i + 4]));
    if (b0 >= width || b1 >= height) {
      fail(ErrorCode::corrupt_record,
           "record " + std::to_string(i / 5) + ": coordinate (" + std::to_string(b0) +
               "," + std::to_string(b1) + ") outside sensor " + std::to_string(width) +
               "x" + std::to_string(height));
    }
    stream.events.push_back(e);
  }
  return stream;
}

std::vector<std::uint8_t> encode_aer(const EventStream& stream) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(stream.size() * 5);
  for (std::size_t i = 0; i < stream.events.size(); ++i) {
    const Event& e = stream.events[i];
    if (!is_integral(e.x) || !is_integral(e.y) || e.x < 0 || e.x > 255 || e.y < 0 ||
        e.y > 255) {
      fail(ErrorCode::encode_range,
           "event " + std::to_string(i) + ": coordinates must be integers in [0,255]");
    }
    if (!is_integral(e.t) || e.t < 0 || e.t >= static_cast<double>(kMaxAerTimestamp)) {
      fail(ErrorCode::encode_range,
           "event " + std::to_string(i) + ": timestamp does not fit the 23-bit us field");
    }
    const auto t = static_cast<std::uint32_t>(e.t);
    bytes.push_back(static_cast<std::uint8_t>(e.x));
    bytes.push_back(static_cast<std::uint8_t>(e.y));
    bytes.push_back(static_cast<std::uint8_t>(((t >> 16) & 0x7F) | (e.p > 0 ? 0x80 : 0)));
    bytes.push_back(static_cast<std::uint8_t>((t >> 8) & 0xFF));
    bytes.push_back(static_cast<std::uint8_t>(t & 0xFF));
  }
  return bytes;
}

EventStream read_events_text(std::istream& in, int width, int height) {
  EventStream stream;
  stream.width = width;
  stream.height = height;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("x,", 0) == 0) continue;  // header
    Event e;
    double p = 0.0;
    std::istringstream ls(line);
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> e.x >> c1 >> e.y >> c2 >> e.t >> c3 >> p) || c1 != ',' || c2 != ',' ||
        c3 != ',') {
      fail(ErrorCode::malformed_stream,
           "line " + std::to_string(line_no) + ": expected \"x,y,t_us,p\"");
    }
    if (p != -1.0 && p != 1.0) {
      fail(ErrorCode::corrupt_record,
           "line " + std::to_string(line_no) + ": polarity must be -1 or 1");
    }
    e.p = p > 0 ? +1 : -1;
    stream.events.push_back(e);
  }
  return stream;
}

EventStream read_events_text_file(const std::string& path, int width, int height) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  return read_events_text(in, width, height);
}

void write_events_text(std::ostream& out, const EventStream& stream) {
  out << "x,y,t,p\n";
  char buf[128];
  for (const Event& e : stream.events) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d\n", e.x, e.y, e.t, e.p);
    out << buf;
  }
}

void write_events_text_file(const std::string& path, const EventStream& stream) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot open " + path + " for writing");
  write_events_text(out, stream);
}

TimeNormalization time_normalization_of(const EventStream& stream, int bins) {
  if (stream.empty()) fail(ErrorCode::empty_stream, "cannot normalize an empty stream");
  const double t1 = stream.events.front().t;
  const double tN = stream.events.back().t;
  if (tN == t1) {
    fail(ErrorCode::degenerate_duration,
         "stream spans zero duration (t1 == tN == " + std::to_string(t1) + ")");
  }
  return TimeNormalization{t1, tN, bins};
}

EventStream normalize_timestamps(const EventStream& stream, int bins) {
  const TimeNormalization norm = time_normalization_of(stream, bins);
  EventStream out = stream;
  for (Event& e : out.events) e.t = norm.apply(e.t);
  return out;
}

ValidationResult validate_stream(const EventStream& stream) {
  ValidationResult result;
  result.stream = stream;
  for (std::size_t i = 0; i < result.stream.events.size(); ++i) {
    Event& e = result.stream.events[i];
    if (!std::isfinite(e.x) || !std::isfinite(e.y) || !std::isfinite(e.t)) {
      fail(ErrorCode::invalid_event,
           "event " + std::to_string(i) + " has a non-finite field");
    }
    if (e.p == 0) {
      e.p = -1;  // {0,1} encoding
    } else if (e.p != -1 && e.p != 1) {
      fail(ErrorCode::invalid_event,
           "event " + std::to_string(i) + " has polarity " + std::to_string(e.p));
    }
    if (e.x < 0 || e.x >= result.stream.width || e.y < 0 || e.y >= result.stream.height) {
      ++result.out_of_bounds;
    }
  }
  std::stable_sort(result.stream.events.begin(), result.stream.events.end(),
                   [](const Event& a, const Event& b) { return a.t < b.t; });
  return result;
}

}  // namespace tnt

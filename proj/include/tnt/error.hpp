#pragma once

#include <stdexcept>
#include <string>

namespace tnt {

enum class ErrorCode {
  malformed_stream,
  corrupt_record,
  encode_range,
  degenerate_duration,
  empty_stream,
  invalid_event,
  runaway_trajectory,
  dataset_degeneracy,
  shape_mismatch,
  numeric_overflow,
  training_divergence,
  empty_evidence,
  empty_volume,
  unreliable_measurement,
  label_error,
  config_error,
  io_error,
};

/// All library failures surface as this exception; the code tells callers
/// (in particular the CLI) how to map a failure to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_stream: return "malformed-stream";
    case ErrorCode::corrupt_record: return "corrupt-record";
    case ErrorCode::encode_range: return "encode-range";
    case ErrorCode::degenerate_duration: return "degenerate-duration";
    case ErrorCode::empty_stream: return "empty-stream";
    case ErrorCode::invalid_event: return "invalid-event";
    case ErrorCode::runaway_trajectory: return "runaway-trajectory";
    case ErrorCode::dataset_degeneracy: return "dataset-degeneracy";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::numeric_overflow: return "numeric-overflow";
    case ErrorCode::training_divergence: return "training-divergence";
    case ErrorCode::empty_evidence: return "empty-evidence";
    case ErrorCode::empty_volume: return "empty-volume";
    case ErrorCode::unreliable_measurement: return "unreliable-measurement";
    case ErrorCode::label_error: return "label-error";
    case ErrorCode::config_error: return "config-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace tnt

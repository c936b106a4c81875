#pragma once

#include <stdexcept>
#include <string>

namespace inksyn {

enum class Errc {
  ok = 0,
  usage_error,
  config_error,
  io_error,
  parse_error,
  unsupported_format,
  empty_sequence,
  malformed_rows,
  degenerate_scale,
  missing_timestamps,
  zero_dt,
  count_mismatch,
  sequence_too_long,
  shape_mismatch,
  out_of_range_tau,
  length_mismatch,
  non_finite_loss,
  too_short,
  empty_enrolment,
  empty_scores,
  insufficient_samples,
  model_not_found,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::usage_error: return "UsageError";
    case Errc::config_error: return "ConfigError";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::malformed_rows: return "MalformedRows";
    case Errc::degenerate_scale: return "DegenerateScale";
    case Errc::missing_timestamps: return "MissingTimestamps";
    case Errc::zero_dt: return "ZeroDt";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::sequence_too_long: return "SequenceTooLong";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::out_of_range_tau: return "OutOfRangeTau";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::non_finite_loss: return "NonFiniteLoss";
    case Errc::too_short: return "TooShort";
    case Errc::empty_enrolment: return "EmptyEnrolment";
    case Errc::empty_scores: return "EmptyScores";
    case Errc::insufficient_samples: return "InsufficientSamples";
    case Errc::model_not_found: return "ModelNotFound";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace inksyn

#include "wsift/error.hpp"

namespace wsift {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimensions: return "invalid-dimensions";
    case Errc::invalid_volume: return "invalid-volume";
    case Errc::degenerate_volume: return "degenerate-volume";
    case Errc::cost_out_of_range: return "cost-out-of-range";
    case Errc::non_monotone_enqueue: return "non-monotone-enqueue";
    case Errc::empty_queue: return "empty-queue";
    case Errc::not_in_queue: return "not-in-queue";
    case Errc::already_queued: return "already-queued";
    case Errc::conflicting_markers: return "conflicting-markers";
    case Errc::no_markers: return "no-markers";
    case Errc::marker_out_of_range: return "marker-out-of-range";
    case Errc::oracle_too_large: return "oracle-too-large";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::io_error: return "io-error";
    case Errc::parse_error: return "parse-error";
    case Errc::size_mismatch: return "size-mismatch";
    case Errc::value_out_of_range: return "value-out-of-range";
    case Errc::slice_out_of_range: return "slice-out-of-range";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::usage:
    case Errc::invalid_spec:
      return 2;
    case Errc::io_error:
      return 3;
    case Errc::parse_error:
      return 4;
    case Errc::size_mismatch:
    case Errc::value_out_of_range:
      return 5;
    case Errc::invalid_dimensions:
    case Errc::invalid_volume:
    case Errc::degenerate_volume:
    case Errc::slice_out_of_range:
      return 6;
    case Errc::conflicting_markers:
    case Errc::no_markers:
    case Errc::marker_out_of_range:
      return 7;
    default:
      return 10;
  }
}

}  // namespace wsift

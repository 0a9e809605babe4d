#pragma once

#include <stdexcept>
#include <string>

namespace wsift {

enum class Errc {
  invalid_dimensions,
  invalid_volume,
  degenerate_volume,
  cost_out_of_range,
  non_monotone_enqueue,
  empty_queue,
  not_in_queue,
  already_queued,
  conflicting_markers,
  no_markers,
  marker_out_of_range,
  oracle_too_large,
  invalid_spec,
  io_error,
  parse_error,
  size_mismatch,
  value_out_of_range,
  slice_out_of_range,
  usage,
};

const char* to_string(Errc code) noexcept;

/// Process exit code the CLI uses for a given error category.
int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wsift

#include "wsift/memmodel.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace wsift {

MemModel make_mem_model(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t m) {
  const VariantCoefficients k = coefficients(v);
  MemModel model;
  model.variant = v;
  model.fixed_common_bytes = fixed_common_bytes(c_buckets, n);
  model.variant_fixed_bytes = k.fixed_per_voxel * static_cast<double>(n);
  model.dynamic_per_entry_bytes = k.dynamic_per_entry;
  switch (k.capacity) {
    case CapacityKind::none: model.dynamic_capacity = 0; break;
    case CapacityKind::voxels: model.dynamic_capacity = n; break;
    case CapacityKind::arcs: model.dynamic_capacity = m; break;
  }
  return model;
}

double worst_case_bytes(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t m) {
  return make_mem_model(v, c_buckets, n, m).worst_case_bytes();
}

double used_bytes(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t peak_entries,
                  std::uint64_t bricks_peak) {
  const VariantCoefficients k = coefficients(v);
  const double fixed = fixed_common_bytes(c_buckets, n) + k.fixed_per_voxel * static_cast<double>(n);
  switch (v) {
    case Variant::I:
      return fixed;
    case Variant::V:
      return fixed + layout::kBrickBytes * static_cast<double>(bricks_peak);
    default:
      return fixed + k.dynamic_per_entry * static_cast<double>(peak_entries);
  }
}

void finalize_stats(RunStats& s) {
  const VariantCoefficients k = coefficients(s.variant);
  s.queue_capacity = k.capacity == CapacityKind::arcs ? s.m : s.n;
  // Only degenerate volumes dominated by markers can exceed the capacity.
  s.queue_fill_percent =
      s.queue_capacity == 0
          ? 0.0
          : std::min(100.0, 100.0 * static_cast<double>(s.peak_queue_entries) / static_cast<double>(s.queue_capacity));
  if (s.variant == Variant::V) {
    s.avg_brick_fill_peak =
        s.bricks_peak == 0 ? 0.0 : static_cast<double>(s.peak_queue_entries) / static_cast<double>(s.bricks_peak);
    s.avg_brick_fill_cumulative = s.brick_acquisitions == 0 ? 0.0
                                                            : static_cast<double>(s.total_enqueues) /
                                                                  static_cast<double>(s.brick_acquisitions);
  } else {
    s.bricks_peak = 0;
    s.brick_acquisitions = 0;
    s.avg_brick_fill_peak = 0.0;
    s.avg_brick_fill_cumulative = 0.0;
  }
  s.modeled_worst_bytes = worst_case_bytes(s.variant, s.num_buckets, s.n, s.m);
  s.modeled_used_bytes = used_bytes(s.variant, s.num_buckets, s.n, s.peak_queue_entries, s.bricks_peak);
}

std::string report(const RunStats& s, const MemModel& model) {
  fmt::memory_buffer out;
  auto line = [&out](std::string_view key, const auto& value) { fmt::format_to(std::back_inserter(out), "{}={}\n", key, value); };
  auto real = [&out](std::string_view key, double value, int digits) {
    fmt::format_to(std::back_inserter(out), "{}={:.{}f}\n", key, value, digits);
  };

  line("variant", to_string(s.variant));
  line("n", s.n);
  line("m", s.m);
  line("max_diff", s.max_diff);
  line("num_buckets", s.num_buckets);
  line("in_markers", s.in_markers);
  line("out_markers", s.out_markers);
  line("duplicate_markers", s.duplicate_markers);
  line("peak_queue_entries", s.peak_queue_entries);
  line("queue_capacity", s.queue_capacity);
  real("queue_fill_percent", s.queue_fill_percent, 2);
  line("total_enqueues", s.total_enqueues);
  line("settled_pops", s.settled_pops);
  line("skipped_pops", s.skipped_pops);
  line("cursor_advances", s.cursor_advances);
  if (s.variant == Variant::V) {
    line("bricks_peak", s.bricks_peak);
    line("brick_acquisitions", s.brick_acquisitions);
    real("avg_brick_fill", s.avg_brick_fill_peak, 2);
    real("avg_brick_fill_cumulative", s.avg_brick_fill_cumulative, 2);
  }
  real("model_fixed_common_bytes", model.fixed_common_bytes, 2);
  real("model_variant_fixed_bytes", model.variant_fixed_bytes, 2);
  real("model_dynamic_per_entry_bytes", model.dynamic_per_entry_bytes, 6);
  line("model_dynamic_capacity", model.dynamic_capacity);
  real("modeled_worst_bytes", s.modeled_worst_bytes, 2);
  real("modeled_worst_mib", to_mib(s.modeled_worst_bytes), 3);
  real("modeled_used_bytes", s.modeled_used_bytes, 2);
  real("modeled_used_mib", to_mib(s.modeled_used_bytes), 3);
  real("wall_time_seconds", s.wall_time_seconds, 6);
  return fmt::to_string(out);
}

std::string report(const RunStats& s) { return report(s, make_mem_model(s.variant, s.num_buckets, s.n, s.m)); }

}  // namespace wsift

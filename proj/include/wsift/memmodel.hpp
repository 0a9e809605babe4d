#pragma once

// Analytic worst-case and measured memory of the five queue variants.
//
// Element widths are fixed by the model rather than by the host platform:
// 4-byte links, 2-byte costs, a 1-bit flag and a 1-bit result label per
// voxel, a whole byte for a label stored alone, a 4-byte packed label+position
// word, and 2-byte brick indices. Bytes are reported as doubles because the
// per-voxel bit fields and the brick overhead are fractional.

#include <cstdint>
#include <string>

#include "wsift/bucket_queues.hpp"

namespace wsift {

namespace layout {
inline constexpr double kLinkBytes = 4.0;
inline constexpr double kCostBytes = 2.0;
inline constexpr double kBitBytes = 1.0 / 8.0;
inline constexpr double kLoneLabelBytes = 1.0;
inline constexpr double kPackedBytes = 4.0;
inline constexpr double kBrickIndexBytes = 2.0;
inline constexpr double kBrickEntries = Brick::kCapacity;
/// One brick: 254 packed words, a next link and two indices, 256 words in total.
inline constexpr double kBrickBytes = 1024.0;
}  // namespace layout

enum class CapacityKind { none, voxels, arcs };

struct VariantCoefficients {
  /// Bytes per voxel of variant-specific fixed arrays.
  double fixed_per_voxel = 0.0;
  /// Bytes per queue element in the dynamic part.
  double dynamic_per_entry = 0.0;
  /// What bounds the dynamic part: n voxels (II) or m arcs (III-V).
  CapacityKind capacity = CapacityKind::none;
};

constexpr VariantCoefficients coefficients(Variant v) {
  using namespace layout;
  switch (v) {
    case Variant::I:
      return {2 * kLinkBytes + kCostBytes, 0.0, CapacityKind::none};
    case Variant::II:
      return {kLinkBytes, kCostBytes + 2 * kLinkBytes, CapacityKind::voxels};
    case Variant::III:
      return {kLinkBytes, kCostBytes + kLoneLabelBytes + kLinkBytes, CapacityKind::arcs};
    case Variant::IV:
      return {0.0, kPackedBytes + kLinkBytes, CapacityKind::arcs};
    case Variant::V:
      return {0.0, kPackedBytes + kLinkBytes / kBrickEntries + 2 * kBrickIndexBytes / kBrickEntries,
              CapacityKind::arcs};
  }
  return {};
}

/// Bucket head/tail arrays (8 bytes per bucket) plus the flag and label bit volumes.
constexpr double fixed_common_bytes(std::uint64_t c_buckets, std::uint64_t n) {
  return 2 * layout::kLinkBytes * static_cast<double>(c_buckets) + 2 * layout::kBitBytes * static_cast<double>(n);
}

/// 3n, the bound m < 3n the worst-case tables use in place of the exact arc count.
constexpr std::uint64_t arc_upper_bound(std::uint64_t n) { return 3 * n; }

struct MemModel {
  Variant variant = Variant::I;
  double fixed_common_bytes = 0.0;
  double variant_fixed_bytes = 0.0;
  double dynamic_per_entry_bytes = 0.0;
  std::uint64_t dynamic_capacity = 0;

  double dynamic_max_bytes() const { return dynamic_per_entry_bytes * static_cast<double>(dynamic_capacity); }
  double worst_case_bytes() const { return fixed_common_bytes + variant_fixed_bytes + dynamic_max_bytes(); }
};

MemModel make_mem_model(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t m);

double worst_case_bytes(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t m);

/// Modeled bytes actually touched by a run: fixed parts plus the peak queue
/// content, brick-granular for variant V. Variant I always uses its full model.
double used_bytes(Variant v, std::uint64_t c_buckets, std::uint64_t n, std::uint64_t peak_entries,
                  std::uint64_t bricks_peak);

constexpr double to_mib(double bytes) { return bytes / (1024.0 * 1024.0); }

struct RunStats {
  Variant variant = Variant::I;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Weight max_diff = 0;
  std::uint64_t num_buckets = 0;
  std::uint64_t in_markers = 0;
  std::uint64_t out_markers = 0;
  std::uint64_t duplicate_markers = 0;

  std::uint64_t peak_queue_entries = 0;
  std::uint64_t total_enqueues = 0;
  std::uint64_t settled_pops = 0;
  std::uint64_t skipped_pops = 0;
  std::uint64_t cursor_advances = 0;
  std::uint64_t queue_capacity = 0;
  double queue_fill_percent = 0.0;

  std::uint64_t bricks_peak = 0;
  std::uint64_t brick_acquisitions = 0;
  double avg_brick_fill_peak = 0.0;
  double avg_brick_fill_cumulative = 0.0;

  double modeled_worst_bytes = 0.0;
  double modeled_used_bytes = 0.0;
  double wall_time_seconds = 0.0;
};

/// Fills capacity, fill percentage, brick averages and modeled bytes from the raw counters.
void finalize_stats(RunStats& stats);

/// Deterministic key=value report, one field per line. `wall_time_seconds` is the last line.
std::string report(const RunStats& stats, const MemModel& model);
std::string report(const RunStats& stats);

}  // namespace wsift

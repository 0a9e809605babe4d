#include "wsift/volume.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wsift/error.hpp"

namespace wsift {

namespace {

std::string dims_text(Dims d) {
  return std::to_string(d.x) + "x" + std::to_string(d.y) + "x" + std::to_string(d.z);
}

}  // namespace

bool valid_bit_depth(int bits) { return bits == 8 || bits == 12 || bits == 16; }

GraphCounts dims_to_counts(Dims d) {
  if (d.x == 0 || d.y == 0 || d.z == 0)
    throw Error(Errc::invalid_dimensions, "dimensions must be positive, got " + dims_text(d));
  const std::uint64_t x = d.x, y = d.y, z = d.z;
  return {x * y * z, x * y * (z - 1) + x * (y - 1) * z + (x - 1) * y * z};
}

Volume::Volume(Dims dims, int bit_depth, std::vector<Intensity> values)
    : dims_(dims), bit_depth_(bit_depth), values_(std::move(values)) {
  const auto counts = dims_to_counts(dims_);
  // 31 bits of voxel position are packed next to the label bit.
  if (counts.n > (std::uint64_t{1} << 31))
    throw Error(Errc::invalid_dimensions, "volume " + dims_text(dims_) + " exceeds 2^31 voxels");
  if (!valid_bit_depth(bit_depth_))
    throw Error(Errc::invalid_volume, "bit depth must be 8, 12 or 16, got " + std::to_string(bit_depth_));
  if (values_.size() != counts.n)
    throw Error(Errc::invalid_volume, "expected " + std::to_string(counts.n) + " values, got " +
                                          std::to_string(values_.size()));
  const std::uint32_t cp = precision();
  const auto bad = std::find_if(values_.begin(), values_.end(), [cp](Intensity v) { return v >= cp; });
  if (bad != values_.end())
    throw Error(Errc::value_out_of_range, "value " + std::to_string(*bad) + " at index " +
                                              std::to_string(bad - values_.begin()) +
                                              " does not fit in " + std::to_string(bit_depth_) + " bits");
}

Volume Volume::filled(Dims dims, int bit_depth, Intensity value) {
  return Volume(dims, bit_depth, std::vector<Intensity>(dims_to_counts(dims).n, value));
}

Weight max_diff(const Volume& vol) {
  Weight best = 0;
  for_each_arc(vol, [&best](VoxelIndex, VoxelIndex, Weight w) { best = std::max(best, w); });
  return best;
}

ArcStats arc_stats(const Volume& vol) {
  const auto counts = dims_to_counts(vol.dims());
  if (counts.m == 0) throw Error(Errc::degenerate_volume, "volume has no arcs");

  // Exact integer moments: m * (2^16)^2 stays far below 2^64 for any admissible volume.
  ArcStats s;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for_each_arc(vol, [&](VoxelIndex, VoxelIndex, Weight w) {
    s.max_cost = std::max(s.max_cost, w);
    sum += w;
    sum_sq += std::uint64_t{w} * w;
    ++s.arcs;
  });
  const long double m = static_cast<long double>(s.arcs);
  const long double mean = sum / m;
  const long double var = std::max<long double>(0.0L, sum_sq / m - mean * mean);
  s.mean_cost = static_cast<double>(mean);
  s.sdev_cost = static_cast<double>(std::sqrt(var));
  s.arc_node_ratio = static_cast<double>(counts.m) / static_cast<double>(counts.n);
  return s;
}

}  // namespace wsift

#pragma once

// Generators and a path-enumeration reference shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "wsift/ift.hpp"
#include "wsift/memmodel.hpp"
#include "wsift/synthgen.hpp"
#include "wsift/volume.hpp"

namespace wsift::testing {

/// Random dims in [1, max] per axis with at least two voxels. Value ranges
/// vary from {0, 1} up to the full 8-bit span so plateaus and ties are common.
inline Volume random_volume(SplitMix64& rng, std::uint32_t max_extent) {
  Dims d;
  do {
    d = {static_cast<std::uint32_t>(rng.uniform(1, max_extent)), static_cast<std::uint32_t>(rng.uniform(1, max_extent)),
         static_cast<std::uint32_t>(rng.uniform(1, max_extent))};
  } while (std::uint64_t{d.x} * d.y * d.z < 2);
  static constexpr std::uint32_t kRanges[] = {1, 2, 3, 5, 16, 255};
  const std::uint32_t top = kRanges[rng.uniform(0, std::size(kRanges) - 1)];
  std::vector<Intensity> values(std::uint64_t{d.x} * d.y * d.z);
  for (Intensity& v : values) v = static_cast<Intensity>(rng.uniform(0, top));
  return Volume(d, 8, std::move(values));
}

/// Disjoint markers, 1-4 per class (one class may be empty now and then).
inline MarkerSet random_marker_set(Dims dims, SplitMix64& rng) {
  const std::size_t n = dims_to_counts(dims).n;
  std::size_t in = rng.uniform(1, 4), out = rng.uniform(1, 4);
  if (rng.uniform(0, 19) == 0) out = 0;
  MarkerSet m = random_markers(dims, in, out, rng);
  if (n >= 3 && rng.uniform(0, 9) == 0 && !m.in.empty()) m.in.push_back(m.in.front());
  return m;
}

/// Minimax cost from every voxel to the nearest source by depth-first
/// enumeration of all simple paths. Exponential; only for a handful of voxels.
inline std::vector<Weight> enumerate_minimax(const Volume& vol, const std::vector<VoxelIndex>& sources) {
  const Dims d = vol.dims();
  const std::size_t n = vol.size();
  std::vector<Weight> best(n, std::numeric_limits<Weight>::max());
  std::vector<char> on_path(n, 0);
  auto adjacent = [&](std::size_t a, std::size_t b) {
    const Coord ca = coord_of(static_cast<VoxelIndex>(a), d), cb = coord_of(static_cast<VoxelIndex>(b), d);
    const auto diff = [](std::uint32_t p, std::uint32_t q) { return p > q ? p - q : q - p; };
    return diff(ca.x, cb.x) + diff(ca.y, cb.y) + diff(ca.z, cb.z) == 1;
  };
  std::function<void(std::size_t, Weight)> walk = [&](std::size_t at, Weight bottleneck) {
    best[at] = std::min(best[at], bottleneck);
    on_path[at] = 1;
    for (std::size_t next = 0; next < n; ++next) {
      if (on_path[next] || !adjacent(at, next)) continue;
      const int fa = vol.values()[at], fb = vol.values()[next];
      walk(next, std::max<Weight>(bottleneck, static_cast<Weight>(fa > fb ? fa - fb : fb - fa)));
    }
    on_path[at] = 0;
  };
  for (VoxelIndex s : sources) walk(s, 0);
  return best;
}

/// What the worst-case formula leaves out. Marker entries come on top of the
/// m relaxations for III-V, and variant V can hold one partial brick per
/// bucket on top of the full ones; 1024/254 bytes per entry is exactly the V
/// coefficient, so the second term is 1024 bytes per bucket.
inline double model_slack_bytes(const RunStats& s) {
  const double markers = static_cast<double>(s.in_markers + s.out_markers);
  double slack = 0.0;
  if (coefficients(s.variant).capacity == CapacityKind::arcs) slack += coefficients(s.variant).dynamic_per_entry * markers;
  if (s.variant == Variant::V) slack += layout::kBrickBytes * static_cast<double>(s.num_buckets);
  return slack;
}

}  // namespace wsift::testing

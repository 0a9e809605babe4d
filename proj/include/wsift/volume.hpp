#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace wsift {

/// Linear voxel address, x-fastest then y then z.
using VoxelIndex = std::uint32_t;
/// Arc weight and path cost. Bounded by the dataset precision.
using Weight = std::uint32_t;
using Intensity = std::uint16_t;

struct Dims {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

struct Coord {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Node and arc counts of the 6-connected grid graph.
struct GraphCounts {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
};

/// n = xyz and m = xy(z-1) + x(y-1)z + (x-1)yz. Throws on a zero dimension.
GraphCounts dims_to_counts(Dims dims);

inline VoxelIndex linear_index(Coord c, Dims d) {
  return static_cast<VoxelIndex>(c.x + std::uint64_t{d.x} * (c.y + std::uint64_t{d.y} * c.z));
}

inline Coord coord_of(VoxelIndex v, Dims d) {
  const std::uint64_t plane = std::uint64_t{d.x} * d.y;
  return {static_cast<std::uint32_t>(v % d.x), static_cast<std::uint32_t>((v % plane) / d.x),
          static_cast<std::uint32_t>(v / plane)};
}

/// Face neighbours of a voxel, at most six.
class NeighborList {
 public:
  void push(VoxelIndex v) { items_[count_++] = v; }
  std::size_t size() const { return count_; }
  const VoxelIndex* begin() const { return items_.data(); }
  const VoxelIndex* end() const { return items_.data() + count_; }
  VoxelIndex operator[](std::size_t i) const { return items_[i]; }

 private:
  std::array<VoxelIndex, 6> items_{};
  std::uint8_t count_ = 0;
};

/// In-grid face neighbours in the fixed order -x, +x, -y, +y, -z, +z.
inline NeighborList neighbors(VoxelIndex v, Dims d) {
  const Coord c = coord_of(v, d);
  const VoxelIndex plane = d.x * d.y;
  NeighborList out;
  if (c.x > 0) out.push(v - 1);
  if (c.x + 1 < d.x) out.push(v + 1);
  if (c.y > 0) out.push(v - d.x);
  if (c.y + 1 < d.y) out.push(v + d.x);
  if (c.z > 0) out.push(v - plane);
  if (c.z + 1 < d.z) out.push(v + plane);
  return out;
}

constexpr Weight arc_weight(Intensity fp, Intensity fq) {
  return fp > fq ? Weight(fp - fq) : Weight(fq - fp);
}

/// Immutable volumetric dataset with 8, 12 or 16 bit precision.
class Volume {
 public:
  Volume(Dims dims, int bit_depth, std::vector<Intensity> values);

  static Volume filled(Dims dims, int bit_depth, Intensity value);

  Dims dims() const { return dims_; }
  int bit_depth() const { return bit_depth_; }
  /// C_p = 2^bit_depth.
  std::uint32_t precision() const { return std::uint32_t{1} << bit_depth_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Intensity> values() const { return values_; }
  Intensity operator[](VoxelIndex v) const { return values_[v]; }
  Intensity at(Coord c) const { return values_[linear_index(c, dims_)]; }

 private:
  Dims dims_;
  int bit_depth_;
  std::vector<Intensity> values_;
};

/// Calls f(p, q, weight) once per undirected arc, p < q.
template <class F>
void for_each_arc(const Volume& vol, F&& f) {
  const Dims d = vol.dims();
  const auto vals = vol.values();
  const VoxelIndex plane = d.x * d.y;
  VoxelIndex v = 0;
  for (std::uint32_t iz = 0; iz < d.z; ++iz) {
    for (std::uint32_t iy = 0; iy < d.y; ++iy) {
      for (std::uint32_t ix = 0; ix < d.x; ++ix, ++v) {
        if (ix + 1 < d.x) f(v, v + 1, arc_weight(vals[v], vals[v + 1]));
        if (iy + 1 < d.y) f(v, v + d.x, arc_weight(vals[v], vals[v + d.x]));
        if (iz + 1 < d.z) f(v, v + plane, arc_weight(vals[v], vals[v + plane]));
      }
    }
  }
}

/// MaxDiff: largest arc weight of the volume, 0 when there are no arcs.
Weight max_diff(const Volume& vol);

struct ArcStats {
  Weight max_cost = 0;
  double mean_cost = 0.0;
  /// Population standard deviation.
  double sdev_cost = 0.0;
  double arc_node_ratio = 0.0;
  std::uint64_t arcs = 0;
};

ArcStats arc_stats(const Volume& vol);

bool valid_bit_depth(int bits);

}  // namespace wsift

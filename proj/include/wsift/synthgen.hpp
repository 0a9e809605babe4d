#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wsift/ift.hpp"
#include "wsift/volume.hpp"

namespace wsift {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because its output is fully
/// specified by 64-bit integer arithmetic, so generated volumes are
/// identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Integer in [lo, hi]. Modulo reduction; the bias is irrelevant for test data.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

 private:
  std::uint64_t state_;
};

enum class GenKind { uniform, step_edge, blob, noise, gradient_ramp };
enum class Axis { x, y, z };

struct GenSpec {
  GenKind kind = GenKind::uniform;
  Dims dims{1, 1, 1};
  int bit_depth = 8;
  /// Background value; the only value for `uniform`.
  Intensity low = 0;
  /// Foreground value for step_edge/blob, upper end for noise/gradient_ramp.
  Intensity high = 255;
  Axis axis = Axis::z;
  /// step_edge: first coordinate along `axis` that takes `high`.
  std::uint32_t position = 0;
  /// blob: sphere radius in voxels around the grid centre; 0 picks a quarter of the smallest extent.
  double radius = 0.0;
  std::uint64_t seed = 0;
};

Volume generate(const GenSpec& spec);

/// Parses "kind[:key=value,...]" with keys value|low, high, axis, pos, radius, seed.
GenSpec parse_gen_spec(std::string_view text, Dims dims, int bit_depth);

/// Even coordinate parity -> IN, odd -> OUT. Every arc joins an IN and an OUT marker.
MarkerSet chessboard_markers(Dims dims);

/// IN at the grid centre, OUT at the eight corners (skipping the centre if it is a corner).
MarkerSet center_corner_markers(Dims dims);

/// Disjoint random markers; counts are clamped so the two lists fit in the volume.
MarkerSet random_markers(Dims dims, std::size_t in_count, std::size_t out_count, SplitMix64& rng);

}  // namespace wsift

#pragma once

// File formats of the command-line front end.
//
//   raw volume   headerless, x-fastest; 8-bit data one byte per voxel, 12- and
//                16-bit data two bytes little-endian per voxel
//   markers      text lines "in x y z" / "out x y z", 0-based coordinates,
//                '#' starts a comment; line order is enqueue order per class
//   labels       one byte per voxel, 0 = OUT, 1 = IN, volume order
//   slice        binary PGM (P5), maxval 255

#include <filesystem>
#include <istream>
#include <string_view>

#include "wsift/fields.hpp"
#include "wsift/ift.hpp"
#include "wsift/synthgen.hpp"
#include "wsift/volume.hpp"

namespace wsift {

Dims parse_dims(std::string_view text);

inline std::size_t bytes_per_voxel(int bit_depth) { return bit_depth == 8 ? 1 : 2; }

Volume load_raw_volume(const std::filesystem::path& path, Dims dims, int bit_depth);
void write_raw_volume(const Volume& vol, const std::filesystem::path& path);

MarkerSet parse_markers(std::istream& in, Dims dims);
MarkerSet load_markers(const std::filesystem::path& path, Dims dims);

void write_labels(const LabelField& labels, const std::filesystem::path& path);
LabelField read_labels(const std::filesystem::path& path, std::size_t n);

struct SliceSpec {
  Axis axis = Axis::z;
  std::uint32_t index = 0;
  std::filesystem::path path;
};

/// Parses "AXIS:INDEX:PATH", e.g. "z:12:slice.pgm".
SliceSpec parse_slice_spec(std::string_view text);

/// Label slice rendered 0 (OUT) / 255 (IN).
void export_slice(const LabelField& labels, Dims dims, Axis axis, std::uint32_t index,
                  const std::filesystem::path& path);
/// Intensity slice, linearly windowed from the volume's [min, max] to [0, 255].
void export_slice(const Volume& vol, Axis axis, std::uint32_t index, const std::filesystem::path& path);

}  // namespace wsift

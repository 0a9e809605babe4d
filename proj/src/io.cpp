#include "wsift/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "wsift/error.hpp"

namespace wsift {

namespace fs = std::filesystem;

namespace {

std::vector<unsigned char> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::io_error, "read failed on " + path.string());
  return bytes;
}

void write_file(const fs::path& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "write failed on " + path.string());
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

struct SliceGeometry {
  std::uint32_t width;
  std::uint32_t height;
  Coord (*place)(std::uint32_t col, std::uint32_t row, std::uint32_t index);
};

SliceGeometry geometry(Dims d, Axis axis, std::uint32_t index) {
  SliceGeometry g{};
  std::uint32_t depth = 0;
  switch (axis) {
    case Axis::z:
      g = {d.x, d.y, [](std::uint32_t c, std::uint32_t r, std::uint32_t i) { return Coord{c, r, i}; }};
      depth = d.z;
      break;
    case Axis::y:
      g = {d.x, d.z, [](std::uint32_t c, std::uint32_t r, std::uint32_t i) { return Coord{c, i, r}; }};
      depth = d.y;
      break;
    case Axis::x:
      g = {d.y, d.z, [](std::uint32_t c, std::uint32_t r, std::uint32_t i) { return Coord{i, c, r}; }};
      depth = d.x;
      break;
  }
  if (index >= depth)
    throw Error(Errc::slice_out_of_range, "slice index " + std::to_string(index) + " is outside the volume");
  return g;
}

template <class Pixel>
void write_pgm(const fs::path& path, Dims dims, Axis axis, std::uint32_t index, Pixel&& pixel) {
  const SliceGeometry g = geometry(dims, axis, index);
  const std::string header = "P5\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n255\n";
  std::vector<unsigned char> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + std::size_t{g.width} * g.height);
  for (std::uint32_t r = 0; r < g.height; ++r)
    for (std::uint32_t c = 0; c < g.width; ++c) bytes.push_back(pixel(linear_index(g.place(c, r, index), dims)));
  write_file(path, bytes);
}

}  // namespace

Dims parse_dims(std::string_view text) {
  Dims d;
  std::uint32_t* parts[3] = {&d.x, &d.y, &d.z};
  for (int i = 0; i < 3; ++i) {
    const auto sep = i < 2 ? text.find('x') : std::string_view::npos;
    if (i < 2 && sep == std::string_view::npos)
      throw Error(Errc::parse_error, "dimensions must look like XxYxZ, got '" + std::string(text) + "'");
    *parts[i] = parse_u32(text.substr(0, sep), "dimension");
    if (sep != std::string_view::npos) text.remove_prefix(sep + 1);
  }
  dims_to_counts(d);
  return d;
}

Volume load_raw_volume(const fs::path& path, Dims dims, int bit_depth) {
  if (!valid_bit_depth(bit_depth))
    throw Error(Errc::invalid_volume, "bit depth must be 8, 12 or 16, got " + std::to_string(bit_depth));
  const std::size_t n = dims_to_counts(dims).n;
  const std::size_t width = bytes_per_voxel(bit_depth);
  const std::vector<unsigned char> bytes = read_file(path);
  if (bytes.size() != n * width)
    throw Error(Errc::size_mismatch, path.string() + " holds " + std::to_string(bytes.size()) + " bytes, expected " +
                                         std::to_string(n * width));
  std::vector<Intensity> values(n);
  for (std::size_t i = 0; i < n; ++i)
    values[i] = width == 1 ? bytes[i] : static_cast<Intensity>(bytes[2 * i] | (bytes[2 * i + 1] << 8));
  return Volume(dims, bit_depth, std::move(values));
}

void write_raw_volume(const Volume& vol, const fs::path& path) {
  const std::size_t width = bytes_per_voxel(vol.bit_depth());
  std::vector<unsigned char> bytes;
  bytes.reserve(vol.size() * width);
  for (Intensity v : vol.values()) {
    bytes.push_back(static_cast<unsigned char>(v & 0xFF));
    if (width == 2) bytes.push_back(static_cast<unsigned char>(v >> 8));
  }
  write_file(path, bytes);
}

MarkerSet parse_markers(std::istream& in, Dims dims) {
  MarkerSet m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    const auto where = "marker line " + std::to_string(line_no);
    if (kind != "in" && kind != "out") throw Error(Errc::parse_error, where + ": expected 'in' or 'out'");
    std::string xs, ys, zs, extra;
    if (!(fields >> xs >> ys >> zs)) throw Error(Errc::parse_error, where + ": expected three coordinates");
    if (fields >> extra) throw Error(Errc::parse_error, where + ": trailing text '" + extra + "'");
    const Coord c{parse_u32(xs, "coordinate"), parse_u32(ys, "coordinate"), parse_u32(zs, "coordinate")};
    if (c.x >= dims.x || c.y >= dims.y || c.z >= dims.z)
      throw Error(Errc::marker_out_of_range, where + ": coordinate outside the volume");
    (kind == "in" ? m.in : m.out).push_back(linear_index(c, dims));
  }
  return m;
}

MarkerSet load_markers(const fs::path& path, Dims dims) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_markers(in, dims);
}

void write_labels(const LabelField& labels, const fs::path& path) {
  std::vector<unsigned char> bytes(labels.size());
  for (VoxelIndex v = 0; v < labels.size(); ++v) bytes[v] = labels[v] == Label::in ? 1 : 0;
  write_file(path, bytes);
}

LabelField read_labels(const fs::path& path, std::size_t n) {
  const std::vector<unsigned char> bytes = read_file(path);
  if (bytes.size() != n)
    throw Error(Errc::size_mismatch, path.string() + " holds " + std::to_string(bytes.size()) + " labels, expected " +
                                         std::to_string(n));
  LabelField labels(n);
  for (VoxelIndex v = 0; v < n; ++v) {
    if (bytes[v] > 1) throw Error(Errc::parse_error, "label byte " + std::to_string(bytes[v]) + " is not 0 or 1");
    labels.set(v, bytes[v] ? Label::in : Label::out);
  }
  return labels;
}

SliceSpec parse_slice_spec(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos)
    throw Error(Errc::parse_error, "slice must look like AXIS:INDEX:PATH, got '" + std::string(text) + "'");
  SliceSpec s;
  const std::string_view axis = text.substr(0, first);
  if (axis == "x")
    s.axis = Axis::x;
  else if (axis == "y")
    s.axis = Axis::y;
  else if (axis == "z")
    s.axis = Axis::z;
  else
    throw Error(Errc::parse_error, "slice axis must be x, y or z");
  s.index = parse_u32(text.substr(first + 1, second - first - 1), "slice index");
  s.path = std::string(text.substr(second + 1));
  if (s.path.empty()) throw Error(Errc::parse_error, "slice path is empty");
  return s;
}

void export_slice(const LabelField& labels, Dims dims, Axis axis, std::uint32_t index, const fs::path& path) {
  write_pgm(path, dims, axis, index,
            [&](VoxelIndex v) -> unsigned char { return labels[v] == Label::in ? 255 : 0; });
}

void export_slice(const Volume& vol, Axis axis, std::uint32_t index, const fs::path& path) {
  const auto [lo, hi] = std::minmax_element(vol.values().begin(), vol.values().end());
  const std::uint32_t low = *lo, range = *hi - *lo;
  write_pgm(path, vol.dims(), axis, index, [&](VoxelIndex v) -> unsigned char {
    if (range == 0) return 0;
    return static_cast<unsigned char>(((vol[v] - low) * 255u + range / 2) / range);
  });
}

}  // namespace wsift

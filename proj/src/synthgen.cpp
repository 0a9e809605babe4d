#include "wsift/synthgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <vector>

#include "wsift/error.hpp"

namespace wsift {

namespace {

std::uint32_t along(Coord c, Axis a) { return a == Axis::x ? c.x : a == Axis::y ? c.y : c.z; }
std::uint32_t extent(Dims d, Axis a) { return a == Axis::x ? d.x : a == Axis::y ? d.y : d.z; }

[[noreturn]] void bad_spec(const std::string& what) { throw Error(Errc::invalid_spec, what); }

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    bad_spec("bad value '" + std::string(text) + "' for '" + std::string(key) + "'");
  return value;
}

}  // namespace

Volume generate(const GenSpec& spec) {
  const auto counts = dims_to_counts(spec.dims);
  if (!valid_bit_depth(spec.bit_depth)) bad_spec("bit depth must be 8, 12 or 16");
  const std::uint32_t cp = std::uint32_t{1} << spec.bit_depth;
  if (spec.low >= cp || spec.high >= cp) bad_spec("generator values must be below 2^bit_depth");
  if (spec.kind != GenKind::uniform && spec.kind != GenKind::step_edge && spec.kind != GenKind::blob &&
      spec.low > spec.high)
    bad_spec("low must not exceed high");
  if (spec.kind == GenKind::step_edge && spec.position > extent(spec.dims, spec.axis))
    bad_spec("step position lies outside the volume");
  if (spec.radius < 0.0) bad_spec("blob radius must be non-negative");

  std::vector<Intensity> values(counts.n);
  const Dims d = spec.dims;
  switch (spec.kind) {
    case GenKind::uniform:
      std::fill(values.begin(), values.end(), spec.low);
      break;
    case GenKind::step_edge:
      for (VoxelIndex v = 0; v < counts.n; ++v)
        values[v] = along(coord_of(v, d), spec.axis) < spec.position ? spec.low : spec.high;
      break;
    case GenKind::blob: {
      const double r = spec.radius > 0.0 ? spec.radius : std::min({d.x, d.y, d.z}) / 4.0;
      const double cx = (d.x - 1) / 2.0, cy = (d.y - 1) / 2.0, cz = (d.z - 1) / 2.0;
      for (VoxelIndex v = 0; v < counts.n; ++v) {
        const Coord c = coord_of(v, d);
        const double dx = c.x - cx, dy = c.y - cy, dz = c.z - cz;
        values[v] = dx * dx + dy * dy + dz * dz <= r * r ? spec.high : spec.low;
      }
      break;
    }
    case GenKind::noise: {
      SplitMix64 rng(spec.seed);
      for (Intensity& v : values) v = static_cast<Intensity>(rng.uniform(spec.low, spec.high));
      break;
    }
    case GenKind::gradient_ramp: {
      const std::uint64_t span = extent(d, spec.axis) - 1;
      const std::uint64_t range = spec.high - spec.low;
      for (VoxelIndex v = 0; v < counts.n; ++v) {
        const std::uint64_t t = along(coord_of(v, d), spec.axis);
        values[v] = static_cast<Intensity>(span == 0 ? spec.low : spec.low + (range * t + span / 2) / span);
      }
      break;
    }
  }
  return Volume(d, spec.bit_depth, std::move(values));
}

GenSpec parse_gen_spec(std::string_view text, Dims dims, int bit_depth) {
  GenSpec spec;
  spec.dims = dims;
  spec.bit_depth = bit_depth;
  spec.high = static_cast<Intensity>((std::uint32_t{1} << std::min(bit_depth, 16)) - 1);

  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "uniform")
    spec.kind = GenKind::uniform;
  else if (kind == "step_edge")
    spec.kind = GenKind::step_edge;
  else if (kind == "blob")
    spec.kind = GenKind::blob;
  else if (kind == "noise")
    spec.kind = GenKind::noise;
  else if (kind == "gradient_ramp")
    spec.kind = GenKind::gradient_ramp;
  else
    bad_spec("unknown generator '" + std::string(kind) + "'");
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  bool position_set = false;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) bad_spec("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "value" || key == "low")
      spec.low = parse_number<Intensity>(key, value);
    else if (key == "high")
      spec.high = parse_number<Intensity>(key, value);
    else if (key == "seed")
      spec.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "pos") {
      spec.position = parse_number<std::uint32_t>(key, value);
      position_set = true;
    } else if (key == "radius")
      spec.radius = parse_number<double>(key, value);
    else if (key == "axis") {
      if (value == "x")
        spec.axis = Axis::x;
      else if (value == "y")
        spec.axis = Axis::y;
      else if (value == "z")
        spec.axis = Axis::z;
      else
        bad_spec("axis must be x, y or z");
    } else
      bad_spec("unknown generator key '" + std::string(key) + "'");
  }
  if (spec.kind == GenKind::step_edge && !position_set) spec.position = extent(dims, spec.axis) / 2;
  return spec;
}

MarkerSet chessboard_markers(Dims dims) {
  const auto counts = dims_to_counts(dims);
  MarkerSet m;
  for (VoxelIndex v = 0; v < counts.n; ++v) {
    const Coord c = coord_of(v, dims);
    ((c.x + c.y + c.z) % 2 == 0 ? m.in : m.out).push_back(v);
  }
  return m;
}

MarkerSet center_corner_markers(Dims dims) {
  dims_to_counts(dims);
  MarkerSet m;
  const VoxelIndex center = linear_index({dims.x / 2, dims.y / 2, dims.z / 2}, dims);
  m.in.push_back(center);
  for (std::uint32_t k = 0; k < 8; ++k) {
    const Coord c{k & 1 ? dims.x - 1 : 0, k & 2 ? dims.y - 1 : 0, k & 4 ? dims.z - 1 : 0};
    const VoxelIndex v = linear_index(c, dims);
    if (v != center && std::find(m.out.begin(), m.out.end(), v) == m.out.end()) m.out.push_back(v);
  }
  return m;
}

MarkerSet random_markers(Dims dims, std::size_t in_count, std::size_t out_count, SplitMix64& rng) {
  const std::size_t n = dims_to_counts(dims).n;
  in_count = std::min(in_count, n);
  out_count = std::min(out_count, n - in_count);
  std::vector<VoxelIndex> order(n);
  std::iota(order.begin(), order.end(), VoxelIndex{0});
  // Partial Fisher-Yates with the pinned generator.
  const std::size_t need = in_count + out_count;
  for (std::size_t i = 0; i < need; ++i) std::swap(order[i], order[rng.uniform(i, n - 1)]);
  MarkerSet m;
  m.in.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(in_count));
  m.out.assign(order.begin() + static_cast<std::ptrdiff_t>(in_count),
               order.begin() + static_cast<std::ptrdiff_t>(need));
  return m;
}

}  // namespace wsift

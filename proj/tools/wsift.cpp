// wsift: batch watershed-from-markers segmentation of raw volumes.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsift/error.hpp"
#include "wsift/ift.hpp"
#include "wsift/io.hpp"
#include "wsift/memmodel.hpp"
#include "wsift/synthgen.hpp"

namespace {

struct Options {
  std::string input;
  std::string dims;
  int bits = 0;
  std::string markers;
  std::string variant;
  std::string out;
  std::string gen;
  std::string stats;
  std::vector<std::string> slices;
  std::vector<std::string> volume_slices;
  std::string buckets = "maxdiff";
  std::string save_volume;
  bool out_first = false;
};

int run(const Options& opt) {
  using namespace wsift;
  const Dims dims = parse_dims(opt.dims);
  if (!valid_bit_depth(opt.bits)) throw Error(Errc::usage, "--bits must be 8, 12 or 16");
  const auto variant = parse_variant(opt.variant);
  if (!variant) throw Error(Errc::usage, "--variant must be one of I, II, III, IV, V");
  if (opt.input.empty() == opt.gen.empty()) throw Error(Errc::usage, "give exactly one of --input or --gen");
  if (opt.markers.empty() && opt.gen.empty()) throw Error(Errc::usage, "--markers is required unless --gen is used");

  IftOptions ift;
  if (opt.buckets == "precision")
    ift.buckets = BucketSizing::precision;
  else if (opt.buckets != "maxdiff")
    throw Error(Errc::usage, "--buckets must be maxdiff or precision");
  if (opt.out_first) ift.order = MarkerOrder::out_first;

  const Volume vol =
      opt.gen.empty() ? load_raw_volume(opt.input, dims, opt.bits) : generate(parse_gen_spec(opt.gen, dims, opt.bits));
  if (!opt.save_volume.empty()) write_raw_volume(vol, opt.save_volume);
  const MarkerSet markers = opt.markers.empty() ? center_corner_markers(dims) : load_markers(opt.markers, dims);

  const IftResult result = run_ift(vol, markers, *variant, ift);
  write_labels(result.labels, opt.out);
  for (const std::string& s : opt.slices) {
    const SliceSpec slice = parse_slice_spec(s);
    export_slice(result.labels, dims, slice.axis, slice.index, slice.path);
  }
  for (const std::string& s : opt.volume_slices) {
    const SliceSpec slice = parse_slice_spec(s);
    export_slice(vol, slice.axis, slice.index, slice.path);
  }

  const std::string text = report(result.stats);
  if (opt.stats.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.stats, std::ios::trunc);
    if (!(f << text)) throw Error(Errc::io_error, "cannot write " + opt.stats);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Watershed-from-markers segmentation of 3D volumes with bucket-queue IFT variants I-V"};
  app.add_option("--input", opt.input, "Raw volume file (x-fastest, little-endian for 12/16 bit)");
  app.add_option("--dims", opt.dims, "Volume dimensions XxYxZ")->required();
  app.add_option("--bits", opt.bits, "Bits per voxel: 8, 12 or 16")->required();
  app.add_option("--markers", opt.markers, "Marker text file ('in x y z' / 'out x y z' lines)");
  app.add_option("--variant", opt.variant, "Queue variant: I, II, III, IV or V")->required();
  app.add_option("--out", opt.out, "Output label file, one byte per voxel (1 = IN)")->required();
  app.add_option("--gen", opt.gen, "Generate the volume instead of reading it, e.g. noise:low=0,high=255,seed=42");
  app.add_option("--stats", opt.stats, "Write the key=value run report here instead of stdout");
  app.add_option("--slice", opt.slices, "Export a label slice AXIS:INDEX:PATH as PGM (repeatable)");
  app.add_option("--volume-slice", opt.volume_slices, "Export an intensity slice AXIS:INDEX:PATH as PGM (repeatable)");
  app.add_option("--buckets", opt.buckets, "Bucket array size: maxdiff (C+1) or precision (2^bits)");
  app.add_option("--save-volume", opt.save_volume, "Also write the (generated) volume as raw data");
  app.add_flag("--out-first", opt.out_first, "Enqueue OUT markers before IN markers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wsift::exit_code(wsift::Errc::usage);
  }

  try {
    return run(opt);
  } catch (const wsift::Error& e) {
    std::cerr << "wsift: " << wsift::to_string(e.code()) << ": " << e.what() << '\n';
    return wsift::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "wsift: " << e.what() << '\n';
    return 1;
  }
}

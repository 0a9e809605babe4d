#include "wsift/ift.hpp"

#include <string>

namespace wsift {

void validate_markers(const Volume& vol, const MarkerSet& markers) {
  if (markers.in.empty() && markers.out.empty()) throw Error(Errc::no_markers, "marker set is empty");
  const std::size_t n = vol.size();
  auto check_range = [n](const std::vector<VoxelIndex>& list, const char* kind) {
    for (VoxelIndex v : list)
      if (v >= n)
        throw Error(Errc::marker_out_of_range,
                    std::string(kind) + " marker " + std::to_string(v) + " outside a " + std::to_string(n) +
                        "-voxel volume");
  };
  check_range(markers.in, "IN");
  check_range(markers.out, "OUT");

  BitField is_in(n);
  for (VoxelIndex v : markers.in) is_in.set(v);
  for (VoxelIndex v : markers.out)
    if (is_in.test(v)) throw Error(Errc::conflicting_markers, "voxel " + std::to_string(v) + " is both IN and OUT");
}

namespace detail {

PreparedRun prepare_run(const Volume& vol, const MarkerSet& markers, const IftOptions& options) {
  validate_markers(vol, markers);
  PreparedRun run;
  run.counts = dims_to_counts(vol.dims());
  run.max_diff = max_diff(vol);
  run.num_buckets = options.buckets == BucketSizing::max_diff ? std::size_t{run.max_diff} + 1 : vol.precision();

  BitField seen(run.counts.n);
  auto add = [&](const std::vector<VoxelIndex>& list, Label label, std::uint64_t& kept) {
    for (VoxelIndex v : list) {
      if (seen.test(v)) {
        ++run.duplicates;
        continue;
      }
      seen.set(v);
      run.seeds.push_back({v, label});
      ++kept;
    }
  };
  if (options.order == MarkerOrder::in_first) {
    add(markers.in, Label::in, run.in_markers);
    add(markers.out, Label::out, run.out_markers);
  } else {
    add(markers.out, Label::out, run.out_markers);
    add(markers.in, Label::in, run.in_markers);
  }
  return run;
}

}  // namespace detail

IftResult run_ift(const Volume& vol, const MarkerSet& markers, Variant variant, const IftOptions& options) {
  return run_ift_observed(vol, markers, variant, options, [](const auto&, const PopEvent&) {});
}

}  // namespace wsift

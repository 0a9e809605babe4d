#pragma once

// Brute-force reference for tiny volumes. Computes, for every voxel, the
// minimax path cost to the nearest marker of each class by thresholded
// connectivity: the cost is the smallest t such that the voxel and a marker
// share a component of the graph restricted to arcs of weight <= t. None of
// the propagation code is reused.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "wsift/fields.hpp"
#include "wsift/ift.hpp"
#include "wsift/volume.hpp"

namespace wsift {

inline constexpr std::size_t kOracleMaxVoxels = 64;
/// Cost reported towards a class that has no markers.
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

enum class Decision { in, out, tie };

const char* to_string(Decision d) noexcept;

struct OracleResult {
  std::vector<Weight> best_in_cost;
  std::vector<Weight> best_out_cost;
  std::vector<Decision> decided_label;

  Weight best_cost(VoxelIndex v) const { return std::min(best_in_cost[v], best_out_cost[v]); }
};

OracleResult brute_force_costs(const Volume& vol, const MarkerSet& markers);

struct VoxelDiff {
  VoxelIndex voxel = 0;
  Weight engine_cost = 0;
  Weight oracle_cost = 0;
  Label engine_label = Label::out;
  Decision oracle_label = Decision::tie;
};

struct OracleReport {
  std::size_t voxels = 0;
  std::size_t ties = 0;
  std::size_t cost_mismatches = 0;
  std::size_t label_mismatches = 0;
  std::vector<VoxelDiff> diffs;

  bool ok() const { return cost_mismatches == 0 && label_mismatches == 0; }
  /// One line per mismatching voxel.
  std::string describe(Dims dims) const;
};

/// Engine cost must equal min(best_in, best_out) everywhere; engine labels
/// must match the oracle wherever it is not a tie.
OracleReport check_against_engine(const Volume& vol, const MarkerSet& markers, const LabelField& engine_labels,
                                  const CostField& engine_costs);

}  // namespace wsift

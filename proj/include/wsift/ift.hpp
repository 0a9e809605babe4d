#pragma once

// Watershed from markers as an image foresting transform over the 6-connected
// voxel graph. The path cost is the largest arc weight on the path; ties on
// plateaus are resolved by FIFO order inside each cost bucket, so the flood
// distance component never needs to be stored.
//
// Three propagation loops cover the five queue variants:
//   I, II  full algorithm: strict max test, remove then re-insert
//   III    max test against the voxel's current-best entry, no removal
//   IV, V  no max test and no removal; stale entries are dropped on pop
// All of them produce identical labels and costs for identical input.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "wsift/bucket_queues.hpp"
#include "wsift/fields.hpp"
#include "wsift/memmodel.hpp"
#include "wsift/volume.hpp"

namespace wsift {

/// Object (IN) and background (OUT) seeds. List order is flood precedence.
struct MarkerSet {
  std::vector<VoxelIndex> in;
  std::vector<VoxelIndex> out;
};

enum class BucketSizing {
  /// C + 1 buckets where C is the volume's MaxDiff.
  max_diff,
  /// 2^bit_depth buckets, no MaxDiff pass needed for sizing.
  precision,
};

enum class MarkerOrder { in_first, out_first };

struct IftOptions {
  BucketSizing buckets = BucketSizing::max_diff;
  MarkerOrder order = MarkerOrder::in_first;
};

struct IftResult {
  LabelField labels;
  CostField costs;
  RunStats stats;
};

/// Throws on an empty set, an out-of-range index, or a voxel in both lists.
void validate_markers(const Volume& vol, const MarkerSet& markers);

IftResult run_ift(const Volume& vol, const MarkerSet& markers, Variant variant, const IftOptions& options = {});

/// Reported to an observer after every pop.
struct PopEvent {
  VoxelIndex voxel = 0;
  Weight cost = 0;
  /// Pop of a DONE voxel or a superseded entry.
  bool skipped = false;
};

namespace detail {

struct Seed {
  VoxelIndex voxel;
  Label label;
};

struct PreparedRun {
  GraphCounts counts;
  Weight max_diff = 0;
  std::size_t num_buckets = 0;
  /// Deduplicated markers in global enqueue order.
  std::vector<Seed> seeds;
  std::uint64_t in_markers = 0;
  std::uint64_t out_markers = 0;
  std::uint64_t duplicates = 0;
};

PreparedRun prepare_run(const Volume& vol, const MarkerSet& markers, const IftOptions& options);

struct RunState {
  explicit RunState(const PreparedRun& run)
      : labels(run.counts.n), flags(run.counts.n), costs(run.counts.n, run.max_diff + 1) {}

  LabelField labels;
  FlagField flags;
  CostField costs;
  std::uint64_t settled = 0;
  std::uint64_t skipped = 0;
};

template <class Queue, class Observer>
void propagate_complete(const Volume& vol, const PreparedRun& run, Queue& q, RunState& st, Observer& observe) {
  const Dims dims = vol.dims();
  const auto values = vol.values();
  for (const Seed& s : run.seeds) {
    st.labels.set(s.voxel, s.label);
    q.enqueue(s.voxel, 0);
  }
  while (q.not_empty()) {
    const Entry e = q.dequeue_min();
    st.flags.mark_done(e.voxel);
    st.costs[e.voxel] = e.cost;
    ++st.settled;
    observe(std::as_const(q), PopEvent{e.voxel, e.cost, false});
    const Label label = st.labels[e.voxel];
    for (const VoxelIndex p : neighbors(e.voxel, dims)) {
      if (st.flags.done(p)) continue;
      const Weight c = std::max(e.cost, arc_weight(values[e.voxel], values[p]));
      // A TEMP voxel outside the queue has infinite cost.
      const bool queued = q.contains(p);
      if (queued && c >= q.cost_of(p)) continue;
      st.labels.set(p, label);
      if (queued) q.remove(p);
      q.enqueue(p, c);
    }
  }
}

template <class Observer>
void propagate_lazy(const Volume& vol, const PreparedRun& run, LazyQueue& q, RunState& st, Observer& observe) {
  const Dims dims = vol.dims();
  const auto values = vol.values();
  for (const Seed& s : run.seeds) q.enqueue(s.voxel, 0, s.label);
  while (q.not_empty()) {
    const LazyPop pop = q.dequeue_min();
    const LabeledEntry& e = pop.entry;
    if (!pop.current || st.flags.done(e.voxel)) {
      ++st.skipped;
      observe(std::as_const(q), PopEvent{e.voxel, e.cost, true});
      continue;
    }
    st.flags.mark_done(e.voxel);
    st.costs[e.voxel] = e.cost;
    st.labels.set(e.voxel, e.label);
    ++st.settled;
    observe(std::as_const(q), PopEvent{e.voxel, e.cost, false});
    for (const VoxelIndex p : neighbors(e.voxel, dims)) {
      if (st.flags.done(p)) continue;
      const Weight c = std::max(e.cost, arc_weight(values[e.voxel], values[p]));
      const auto best = q.best_cost(p);
      if (!best)
        q.enqueue(p, c, e.label);
      else if (c < *best)
        q.supersede(p, c, e.label);
    }
  }
}

template <class Queue, class Observer>
void propagate_unchecked(const Volume& vol, const PreparedRun& run, Queue& q, RunState& st, Observer& observe) {
  const Dims dims = vol.dims();
  const auto values = vol.values();
  for (const Seed& s : run.seeds) q.enqueue(s.voxel, 0, s.label);
  while (q.not_empty()) {
    const LabeledEntry e = q.dequeue_min();
    if (st.flags.done(e.voxel)) {
      ++st.skipped;
      observe(std::as_const(q), PopEvent{e.voxel, e.cost, true});
      continue;
    }
    st.flags.mark_done(e.voxel);
    st.costs[e.voxel] = e.cost;
    st.labels.set(e.voxel, e.label);
    ++st.settled;
    observe(std::as_const(q), PopEvent{e.voxel, e.cost, false});
    for (const VoxelIndex p : neighbors(e.voxel, dims)) {
      if (st.flags.done(p)) continue;
      q.enqueue(p, std::max(e.cost, arc_weight(values[e.voxel], values[p])), e.label);
    }
  }
}

template <class Queue>
IftResult finish(const PreparedRun& run, Variant variant, const Queue& q, RunState& st,
                 std::chrono::steady_clock::time_point started) {
  RunStats s;
  s.variant = variant;
  s.n = run.counts.n;
  s.m = run.counts.m;
  s.max_diff = run.max_diff;
  s.num_buckets = run.num_buckets;
  s.in_markers = run.in_markers;
  s.out_markers = run.out_markers;
  s.duplicate_markers = run.duplicates;
  s.peak_queue_entries = q.peak_length();
  s.total_enqueues = q.total_enqueues();
  s.settled_pops = st.settled;
  s.skipped_pops = st.skipped;
  s.cursor_advances = q.cursor_advances();
  if constexpr (std::is_same_v<Queue, BrickQueue>) {
    s.bricks_peak = q.bricks_allocated();
    s.brick_acquisitions = q.brick_acquisitions();
  }
  s.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  finalize_stats(s);
  return {std::move(st.labels), std::move(st.costs), s};
}

}  // namespace detail

/// run_ift with a hook called as observe(const Queue&, const PopEvent&) after
/// every pop. The queue type depends on the variant, so the observer is
/// usually a generic lambda.
template <class Observer>
IftResult run_ift_observed(const Volume& vol, const MarkerSet& markers, Variant variant, const IftOptions& options,
                           Observer&& observe) {
  const auto started = std::chrono::steady_clock::now();
  const detail::PreparedRun run = detail::prepare_run(vol, markers, options);
  detail::RunState st(run);
  const std::size_t n = run.counts.n;
  switch (variant) {
    case Variant::I: {
      FixedVolumeQueue q(n, run.num_buckets);
      detail::propagate_complete(vol, run, q, st, observe);
      return detail::finish(run, variant, q, st, started);
    }
    case Variant::II: {
      DynamicListQueue q(n, run.num_buckets);
      detail::propagate_complete(vol, run, q, st, observe);
      return detail::finish(run, variant, q, st, started);
    }
    case Variant::III: {
      LazyQueue q(n, run.num_buckets);
      detail::propagate_lazy(vol, run, q, st, observe);
      return detail::finish(run, variant, q, st, started);
    }
    case Variant::IV: {
      PackedListQueue q(run.num_buckets);
      detail::propagate_unchecked(vol, run, q, st, observe);
      return detail::finish(run, variant, q, st, started);
    }
    case Variant::V: {
      BrickQueue q(run.num_buckets);
      detail::propagate_unchecked(vol, run, q, st, observe);
      return detail::finish(run, variant, q, st, started);
    }
  }
  throw Error(Errc::usage, "unknown queue variant");
}

}  // namespace wsift

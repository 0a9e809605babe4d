#include "wsift/bucket_queues.hpp"

#include <unordered_set>

namespace wsift {

const char* to_string(Variant v) noexcept {
  switch (v) {
    case Variant::I: return "I";
    case Variant::II: return "II";
    case Variant::III: return "III";
    case Variant::IV: return "IV";
    case Variant::V: return "V";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (Variant v : kAllVariants)
    if (text == to_string(v)) return v;
  return std::nullopt;
}

namespace detail {

BucketIndex::BucketIndex(std::size_t num_buckets) : head_(num_buckets, kNone), tail_(num_buckets, kNone) {
  if (num_buckets == 0) throw Error(Errc::cost_out_of_range, "a bucket queue needs at least one bucket");
}

void BucketIndex::throw_cost_out_of_range(Weight cost) const {
  throw Error(Errc::cost_out_of_range,
              "cost " + std::to_string(cost) + " exceeds the largest bucket " + std::to_string(max_cost()));
}

void BucketIndex::throw_non_monotone(Weight cost) const {
  throw Error(Errc::non_monotone_enqueue, "cost " + std::to_string(cost) + " is below the scan cursor " +
                                              std::to_string(cursor_));
}

void throw_empty_queue() { throw Error(Errc::empty_queue, "dequeue from an empty queue"); }

void throw_not_in_queue(VoxelIndex v) {
  throw Error(Errc::not_in_queue, "voxel " + std::to_string(v) + " is not in the queue");
}

void throw_already_queued(VoxelIndex v) {
  throw Error(Errc::already_queued, "voxel " + std::to_string(v) + " is already in the queue");
}

}  // namespace detail

std::vector<BrickOccupancy> BrickQueue::bucket_bricks(Weight cost) const {
  std::vector<BrickOccupancy> out;
  for (std::uint32_t b = buckets_.head(cost); b != kNone; b = bricks_[b].next)
    out.push_back({bricks_[b].first, bricks_[b].last});
  return out;
}

std::string BrickQueue::validate() const {
  std::unordered_set<std::uint32_t> chained;
  std::uint64_t entries = 0;
  for (Weight c = 0; c < num_buckets(); ++c) {
    const std::uint32_t head = buckets_.head(c);
    if ((head == kNone) != (buckets_.tail(c) == kNone))
      return "bucket " + std::to_string(c) + " has only one of head/tail set";
    for (std::uint32_t b = head; b != kNone; b = bricks_[b].next) {
      if (!chained.insert(b).second) return "brick " + std::to_string(b) + " is chained twice";
      const Brick& brick = bricks_[b];
      if (brick.first > brick.last || brick.last > Brick::kCapacity)
        return "brick " + std::to_string(b) + " has F > L or L > capacity";
      if (brick.first == brick.last) return "drained brick " + std::to_string(b) + " left in bucket";
      if (brick.next != kNone && brick.last != Brick::kCapacity)
        return "non-tail brick " + std::to_string(b) + " in bucket " + std::to_string(c) + " is not full";
      if (brick.next == kNone && buckets_.tail(c) != b)
        return "bucket " + std::to_string(c) + " tail does not point at its last brick";
      entries += brick.last - brick.first;
    }
  }
  if (entries != size()) return "sum of (L - F) is " + std::to_string(entries) + ", size is " + std::to_string(size());
  for (std::uint32_t b : empty_)
    if (chained.count(b)) return "brick " + std::to_string(b) + " is both chained and on the empty stack";
  if (chained.size() + empty_.size() != bricks_.size()) return "brick pool leaks";
  return {};
}

}  // namespace wsift

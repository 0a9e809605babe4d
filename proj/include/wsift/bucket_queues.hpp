#pragma once

// FIFO bucket priority queues for monotone integer costs.
//
// All five backends keep one head and one tail reference per cost level and a
// scan cursor that only moves forward, so the whole run spends O(C) on finding
// the minimum. Everything else is O(1). Links are 32-bit indices with kNone as
// the null reference.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsift/error.hpp"
#include "wsift/fields.hpp"
#include "wsift/volume.hpp"

namespace wsift {

enum class Variant : std::uint8_t { I, II, III, IV, V };

inline constexpr std::array<Variant, 5> kAllVariants{Variant::I, Variant::II, Variant::III, Variant::IV,
                                                     Variant::V};

const char* to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view text);

inline constexpr std::uint32_t kNone = 0xFFFFFFFFu;

/// Voxel position in the upper 31 bits, label in bit 0.
constexpr std::uint32_t pack_entry(VoxelIndex v, Label l) {
  return (v << 1) | static_cast<std::uint32_t>(l);
}
constexpr VoxelIndex packed_voxel(std::uint32_t word) { return word >> 1; }
constexpr Label packed_label(std::uint32_t word) { return static_cast<Label>(word & 1u); }

struct Entry {
  VoxelIndex voxel = 0;
  Weight cost = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct LabeledEntry {
  VoxelIndex voxel = 0;
  Weight cost = 0;
  Label label = Label::out;

  friend bool operator==(const LabeledEntry&, const LabeledEntry&) = default;
};

namespace detail {

/// Head/tail arrays plus the monotone minimum cursor and occupancy counters.
class BucketIndex {
 public:
  explicit BucketIndex(std::size_t num_buckets);

  std::size_t num_buckets() const { return head_.size(); }
  Weight max_cost() const { return static_cast<Weight>(head_.size() - 1); }
  Weight cursor() const { return cursor_; }
  std::uint64_t cursor_advances() const { return advances_; }

  std::uint32_t& head(Weight c) { return head_[c]; }
  std::uint32_t& tail(Weight c) { return tail_[c]; }
  std::uint32_t head(Weight c) const { return head_[c]; }
  std::uint32_t tail(Weight c) const { return tail_[c]; }

  void check_enqueue(Weight cost) const {
    if (cost > max_cost()) throw_cost_out_of_range(cost);
    if (cost < cursor_) throw_non_monotone(cost);
  }

  /// Moves the cursor to the first non-empty bucket. False when nothing is queued.
  bool seek() {
    if (size_ == 0) return false;
    while (head_[cursor_] == kNone) {
      ++cursor_;
      ++advances_;
    }
    return true;
  }

  void added() {
    ++size_;
    ++enqueues_;
    if (size_ > peak_) peak_ = size_;
  }
  void removed() { --size_; }

  std::uint64_t size() const { return size_; }
  std::uint64_t peak() const { return peak_; }
  std::uint64_t enqueues() const { return enqueues_; }

 private:
  [[noreturn]] void throw_cost_out_of_range(Weight cost) const;
  [[noreturn]] void throw_non_monotone(Weight cost) const;

  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> tail_;
  Weight cursor_ = 0;
  std::uint64_t advances_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t enqueues_ = 0;
};

[[noreturn]] void throw_empty_queue();
[[noreturn]] void throw_not_in_queue(VoxelIndex v);
[[noreturn]] void throw_already_queued(VoxelIndex v);

}  // namespace detail

/// Accessors every backend shares.
class QueueBase {
 public:
  bool not_empty() { return buckets_.seek(); }
  std::uint64_t size() const { return buckets_.size(); }
  /// Largest number of entries held at once, stale ones included.
  std::uint64_t peak_length() const { return buckets_.peak(); }
  std::uint64_t total_enqueues() const { return buckets_.enqueues(); }
  std::uint64_t cursor_advances() const { return buckets_.cursor_advances(); }
  Weight cursor() const { return buckets_.cursor(); }
  std::size_t num_buckets() const { return buckets_.num_buckets(); }

 protected:
  explicit QueueBase(std::size_t num_buckets) : buckets_(num_buckets) {}

  detail::BucketIndex buckets_;
};

/// Variant I: doubly linked buckets threaded through a preallocated n-slot
/// arena. The slot of a voxel is its linear index.
class FixedVolumeQueue : public QueueBase {
 public:
  FixedVolumeQueue(std::size_t n, std::size_t num_buckets) : QueueBase(num_buckets), slots_(n) {}

  void enqueue(VoxelIndex v, Weight cost) {
    buckets_.check_enqueue(cost);
    Slot& s = slots_[v];
    if (s.cost != kNone) detail::throw_already_queued(v);
    s.cost = cost;
    s.next = kNone;
    s.prev = buckets_.tail(cost);
    if (s.prev == kNone)
      buckets_.head(cost) = v;
    else
      slots_[s.prev].next = v;
    buckets_.tail(cost) = v;
    buckets_.added();
  }

  Entry dequeue_min() {
    if (!buckets_.seek()) detail::throw_empty_queue();
    const Weight c = buckets_.cursor();
    const VoxelIndex v = buckets_.head(c);
    unlink(v);
    return {v, c};
  }

  void remove(VoxelIndex v) {
    if (!contains(v)) detail::throw_not_in_queue(v);
    unlink(v);
  }

  bool contains(VoxelIndex v) const { return slots_[v].cost != kNone; }
  Weight cost_of(VoxelIndex v) const { return slots_[v].cost; }

  template <class F>
  void for_each_entry(F&& f) const {
    for (Weight c = 0; c < num_buckets(); ++c)
      for (std::uint32_t v = buckets_.head(c); v != kNone; v = slots_[v].next) f(Entry{v, c});
  }

 private:
  struct Slot {
    std::uint32_t prev = kNone;
    std::uint32_t next = kNone;
    std::uint32_t cost = kNone;
  };

  void unlink(VoxelIndex v) {
    Slot& s = slots_[v];
    if (s.prev == kNone)
      buckets_.head(s.cost) = s.next;
    else
      slots_[s.prev].next = s.next;
    if (s.next == kNone)
      buckets_.tail(s.cost) = s.prev;
    else
      slots_[s.next].prev = s.prev;
    s = Slot{};
    buckets_.removed();
  }

  std::vector<Slot> slots_;
};

/// Variant II: dynamically allocated doubly linked elements plus an n-slot
/// table from voxel to its live element.
class DynamicListQueue : public QueueBase {
 public:
  DynamicListQueue(std::size_t n, std::size_t num_buckets) : QueueBase(num_buckets), element_of_(n, kNone) {}

  void enqueue(VoxelIndex v, Weight cost) {
    buckets_.check_enqueue(cost);
    if (element_of_[v] != kNone) detail::throw_already_queued(v);
    const std::uint32_t e = acquire();
    Node& node = nodes_[e];
    node = Node{cost, v, buckets_.tail(cost), kNone};
    if (node.prev == kNone)
      buckets_.head(cost) = e;
    else
      nodes_[node.prev].next = e;
    buckets_.tail(cost) = e;
    element_of_[v] = e;
    buckets_.added();
  }

  Entry dequeue_min() {
    if (!buckets_.seek()) detail::throw_empty_queue();
    const std::uint32_t e = buckets_.head(buckets_.cursor());
    const Entry out{nodes_[e].voxel, nodes_[e].cost};
    unlink(e);
    return out;
  }

  void remove(VoxelIndex v) {
    if (!contains(v)) detail::throw_not_in_queue(v);
    unlink(element_of_[v]);
  }

  bool contains(VoxelIndex v) const { return element_of_[v] != kNone; }
  Weight cost_of(VoxelIndex v) const { return nodes_[element_of_[v]].cost; }
  /// Elements ever allocated; the pool reuses released ones.
  std::size_t allocated_elements() const { return nodes_.size(); }

  template <class F>
  void for_each_entry(F&& f) const {
    for (Weight c = 0; c < num_buckets(); ++c)
      for (std::uint32_t e = buckets_.head(c); e != kNone; e = nodes_[e].next) f(Entry{nodes_[e].voxel, c});
  }

 private:
  struct Node {
    Weight cost;
    VoxelIndex voxel;
    std::uint32_t prev;
    std::uint32_t next;
  };

  std::uint32_t acquire() {
    if (!free_.empty()) {
      const std::uint32_t e = free_.back();
      free_.pop_back();
      return e;
    }
    nodes_.emplace_back();
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  void unlink(std::uint32_t e) {
    const Node& node = nodes_[e];
    if (node.prev == kNone)
      buckets_.head(node.cost) = node.next;
    else
      nodes_[node.prev].next = node.next;
    if (node.next == kNone)
      buckets_.tail(node.cost) = node.prev;
    else
      nodes_[node.next].prev = node.prev;
    element_of_[node.voxel] = kNone;
    free_.push_back(e);
    buckets_.removed();
  }

  std::vector<std::uint32_t> element_of_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
};

/// Result of popping from the lazy (variant III) queue.
struct LazyPop {
  LabeledEntry entry;
  /// False when a cheaper entry for the same voxel superseded this one.
  bool current = false;
};

/// Variant III: singly linked elements carrying cost and label. Improvements
/// append a new element and redirect the per-voxel current-best reference;
/// the superseded element stays in its bucket.
class LazyQueue : public QueueBase {
 public:
  LazyQueue(std::size_t n, std::size_t num_buckets) : QueueBase(num_buckets), best_(n, kNone) {}

  void enqueue(VoxelIndex v, Weight cost, Label label) {
    buckets_.check_enqueue(cost);
    const std::uint32_t e = acquire();
    nodes_[e] = Node{kNone, pack_entry(v, label), cost};
    const std::uint32_t t = buckets_.tail(cost);
    if (t == kNone)
      buckets_.head(cost) = e;
    else
      nodes_[t].next = e;
    buckets_.tail(cost) = e;
    best_[v] = e;
    buckets_.added();
  }

  /// Strictly cheaper re-entry of a queued voxel.
  void supersede(VoxelIndex v, Weight new_cost, Label new_label) {
    if (!has_current(v)) detail::throw_not_in_queue(v);
    if (new_cost >= nodes_[best_[v]].cost)
      throw Error(Errc::cost_out_of_range, "supersede requires a strictly lower cost");
    enqueue(v, new_cost, new_label);
  }

  LazyPop dequeue_min() {
    if (!buckets_.seek()) detail::throw_empty_queue();
    const Weight c = buckets_.cursor();
    const std::uint32_t e = buckets_.head(c);
    const Node node = nodes_[e];
    buckets_.head(c) = node.next;
    if (node.next == kNone) buckets_.tail(c) = kNone;
    const VoxelIndex v = packed_voxel(node.packed);
    const bool current = best_[v] == e;
    if (current) best_[v] = kNone;
    free_.push_back(e);
    buckets_.removed();
    return {{v, c, packed_label(node.packed)}, current};
  }

  bool has_current(VoxelIndex v) const { return best_[v] != kNone; }
  /// Cost of the voxel's current-best entry, or nullopt when it has none.
  std::optional<Weight> best_cost(VoxelIndex v) const {
    if (best_[v] == kNone) return std::nullopt;
    return nodes_[best_[v]].cost;
  }
  Label best_label(VoxelIndex v) const { return packed_label(nodes_[best_[v]].packed); }

  template <class F>
  void for_each_entry(F&& f) const {
    for (Weight c = 0; c < num_buckets(); ++c)
      for (std::uint32_t e = buckets_.head(c); e != kNone; e = nodes_[e].next)
        f(LabeledEntry{packed_voxel(nodes_[e].packed), c, packed_label(nodes_[e].packed)});
  }

 private:
  struct Node {
    std::uint32_t next;
    std::uint32_t packed;
    Weight cost;
  };

  std::uint32_t acquire() {
    if (!free_.empty()) {
      const std::uint32_t e = free_.back();
      free_.pop_back();
      return e;
    }
    nodes_.emplace_back();
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<std::uint32_t> best_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
};

/// Variant IV: singly linked elements of one packed label+position word.
/// The cost is the bucket index and is not stored.
class PackedListQueue : public QueueBase {
 public:
  explicit PackedListQueue(std::size_t num_buckets) : QueueBase(num_buckets) {}

  void enqueue(VoxelIndex v, Weight cost, Label label) {
    buckets_.check_enqueue(cost);
    const std::uint32_t e = acquire();
    nodes_[e] = Node{pack_entry(v, label), kNone};
    const std::uint32_t t = buckets_.tail(cost);
    if (t == kNone)
      buckets_.head(cost) = e;
    else
      nodes_[t].next = e;
    buckets_.tail(cost) = e;
    buckets_.added();
  }

  LabeledEntry dequeue_min() {
    if (!buckets_.seek()) detail::throw_empty_queue();
    const Weight c = buckets_.cursor();
    const std::uint32_t e = buckets_.head(c);
    const Node node = nodes_[e];
    buckets_.head(c) = node.next;
    if (node.next == kNone) buckets_.tail(c) = kNone;
    free_.push_back(e);
    buckets_.removed();
    return {packed_voxel(node.packed), c, packed_label(node.packed)};
  }

  template <class F>
  void for_each_entry(F&& f) const {
    for (Weight c = 0; c < num_buckets(); ++c)
      for (std::uint32_t e = buckets_.head(c); e != kNone; e = nodes_[e].next)
        f(LabeledEntry{packed_voxel(nodes_[e].packed), c, packed_label(nodes_[e].packed)});
  }

 private:
  struct Node {
    std::uint32_t packed;
    std::uint32_t next;
  };
  static_assert(sizeof(Node) == 8);

  std::uint32_t acquire() {
    if (!free_.empty()) {
      const std::uint32_t e = free_.back();
      free_.pop_back();
      return e;
    }
    nodes_.emplace_back();
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
};

/// Fixed-capacity block of packed entries. `first` and `last` delimit the
/// occupied range [first, last).
struct Brick {
  static constexpr std::uint8_t kCapacity = 254;

  std::array<std::uint32_t, kCapacity> slots;
  std::uint32_t next;
  std::uint8_t first;
  std::uint8_t last;
};
static_assert(sizeof(Brick) == 1024, "brick must occupy 256 words");

struct BrickOccupancy {
  std::uint8_t first = 0;
  std::uint8_t last = 0;

  friend bool operator==(const BrickOccupancy&, const BrickOccupancy&) = default;
};

/// Variant V: buckets are chains of bricks; drained bricks go to an
/// empty-brick stack and are reused before any new brick is allocated.
class BrickQueue : public QueueBase {
 public:
  explicit BrickQueue(std::size_t num_buckets) : QueueBase(num_buckets) {}

  void enqueue(VoxelIndex v, Weight cost, Label label) {
    buckets_.check_enqueue(cost);
    std::uint32_t t = buckets_.tail(cost);
    if (t == kNone) {
      t = acquire();
      buckets_.head(cost) = t;
      buckets_.tail(cost) = t;
    } else if (bricks_[t].last == Brick::kCapacity) {
      const std::uint32_t b = acquire();
      bricks_[t].next = b;
      buckets_.tail(cost) = b;
      t = b;
    }
    Brick& brick = bricks_[t];
    brick.slots[brick.last++] = pack_entry(v, label);
    buckets_.added();
  }

  LabeledEntry dequeue_min() {
    if (!buckets_.seek()) detail::throw_empty_queue();
    const Weight c = buckets_.cursor();
    const std::uint32_t h = buckets_.head(c);
    Brick& brick = bricks_[h];
    const std::uint32_t word = brick.slots[brick.first++];
    if (brick.first == brick.last) {
      buckets_.head(c) = brick.next;
      if (brick.next == kNone) buckets_.tail(c) = kNone;
      release(h);
    }
    buckets_.removed();
    return {packed_voxel(word), c, packed_label(word)};
  }

  /// Bricks currently chained into buckets.
  std::size_t bricks_in_use() const { return bricks_.size() - empty_.size(); }
  /// Bricks ever allocated; equals the peak number in use since the stack is drained first.
  std::size_t bricks_allocated() const { return bricks_.size(); }
  std::size_t empty_stack_size() const { return empty_.size(); }
  /// Number of times a brick was taken for a bucket, fresh or reused.
  std::uint64_t brick_acquisitions() const { return acquisitions_; }
  std::uint64_t brick_reuses() const { return reuses_; }

  /// F/L pairs of the bricks chained in one bucket, head first.
  std::vector<BrickOccupancy> bucket_bricks(Weight cost) const;

  /// Structural self-check. Returns a description of the first violation, or
  /// an empty string when the brick layout is consistent.
  std::string validate() const;

  template <class F>
  void for_each_entry(F&& f) const {
    for (Weight c = 0; c < num_buckets(); ++c)
      for (std::uint32_t b = buckets_.head(c); b != kNone; b = bricks_[b].next)
        for (std::uint32_t i = bricks_[b].first; i < bricks_[b].last; ++i)
          f(LabeledEntry{packed_voxel(bricks_[b].slots[i]), c, packed_label(bricks_[b].slots[i])});
  }

 private:
  std::uint32_t acquire() {
    ++acquisitions_;
    std::uint32_t b;
    if (!empty_.empty()) {
      b = empty_.back();
      empty_.pop_back();
      ++reuses_;
    } else {
      bricks_.emplace_back();
      b = static_cast<std::uint32_t>(bricks_.size() - 1);
    }
    Brick& brick = bricks_[b];
    brick.next = kNone;
    brick.first = 0;
    brick.last = 0;
    return b;
  }

  void release(std::uint32_t b) { empty_.push_back(b); }

  std::vector<Brick> bricks_;
  std::vector<std::uint32_t> empty_;
  std::uint64_t acquisitions_ = 0;
  std::uint64_t reuses_ = 0;
};

}  // namespace wsift

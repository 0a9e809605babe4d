#include <doctest.h>

#include <deque>
#include <map>
#include <vector>

#include "wsift/bucket_queues.hpp"
#include "wsift/synthgen.hpp"

using namespace wsift;

namespace {

// Uniform adapter so one script can drive every backend.
template <class Q>
struct Driver;

template <>
struct Driver<FixedVolumeQueue> {
  FixedVolumeQueue q;
  Driver(std::size_t n, std::size_t b) : q(n, b) {}
  void push(VoxelIndex v, Weight c, Label) { q.enqueue(v, c); }
  Entry pop() { return q.dequeue_min(); }
};

template <>
struct Driver<DynamicListQueue> {
  DynamicListQueue q;
  Driver(std::size_t n, std::size_t b) : q(n, b) {}
  void push(VoxelIndex v, Weight c, Label) { q.enqueue(v, c); }
  Entry pop() { return q.dequeue_min(); }
};

template <>
struct Driver<LazyQueue> {
  LazyQueue q;
  Driver(std::size_t n, std::size_t b) : q(n, b) {}
  void push(VoxelIndex v, Weight c, Label l) { q.enqueue(v, c, l); }
  Entry pop() {
    const auto p = q.dequeue_min();
    return {p.entry.voxel, p.entry.cost};
  }
};

template <>
struct Driver<PackedListQueue> {
  PackedListQueue q;
  Driver(std::size_t, std::size_t b) : q(b) {}
  void push(VoxelIndex v, Weight c, Label l) { q.enqueue(v, c, l); }
  Entry pop() {
    const auto e = q.dequeue_min();
    return {e.voxel, e.cost};
  }
};

template <>
struct Driver<BrickQueue> {
  BrickQueue q;
  Driver(std::size_t, std::size_t b) : q(b) {}
  void push(VoxelIndex v, Weight c, Label l) { q.enqueue(v, c, l); }
  Entry pop() {
    const auto e = q.dequeue_min();
    return {e.voxel, e.cost};
  }
};

struct Op {
  bool push;
  VoxelIndex voxel;
  Weight cost;
};

// Random push/pop script with fresh voxel ids; costs are made monotone during replay against the model.
std::vector<Op> random_script(SplitMix64& rng, std::size_t length, Weight max_cost, VoxelIndex& next_id) {
  std::vector<Op> ops;
  std::size_t live = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (live > 0 && rng.uniform(0, 2) == 0) {
      ops.push_back({false, 0, 0});
      --live;
    } else {
      ops.push_back({true, next_id++, static_cast<Weight>(rng.uniform(0, max_cost))});
      ++live;
    }
  }
  return ops;
}

// Reference: map of FIFO deques.
struct ModelQueue {
  std::map<Weight, std::deque<VoxelIndex>> buckets;
  void push(VoxelIndex v, Weight c) { buckets[c].push_back(v); }
  Entry pop() {
    auto it = buckets.begin();
    const Entry e{it->second.front(), it->first};
    it->second.pop_front();
    if (it->second.empty()) buckets.erase(it);
    return e;
  }
};

template <class Q>
std::vector<Entry> replay(const std::vector<Op>& ops, std::size_t n, std::size_t buckets) {
  Driver<Q> d(n, buckets);
  std::vector<Entry> out;
  for (const Op& op : ops) {
    if (op.push)
      d.push(op.voxel, op.cost, op.voxel % 2 ? Label::in : Label::out);
    else
      out.push_back(d.pop());
  }
  return out;
}

}  // namespace

TEST_CASE_TEMPLATE("FIFO within a bucket and ordering by cost", Q, FixedVolumeQueue, DynamicListQueue, LazyQueue,
                   PackedListQueue, BrickQueue) {
  Driver<Q> d(16, 8);
  CHECK_FALSE(d.q.not_empty());
  for (VoxelIndex v : {3u, 1u, 7u, 2u}) d.push(v, 0, Label::in);
  CHECK(d.q.not_empty());
  d.push(9, 5, Label::out);
  d.push(8, 3, Label::out);
  d.push(10, 3, Label::out);
  const std::vector<Entry> want{{3, 0}, {1, 0}, {7, 0}, {2, 0}, {8, 3}, {10, 3}, {9, 5}};
  for (const Entry& e : want) CHECK(d.pop() == e);
  CHECK_FALSE(d.q.not_empty());
  CHECK(d.q.peak_length() == 7);
  CHECK(d.q.total_enqueues() == 7);
  CHECK(d.q.cursor_advances() == 5);
}

TEST_CASE_TEMPLATE("singleton round trip and errors", Q, FixedVolumeQueue, DynamicListQueue, LazyQueue,
                   PackedListQueue, BrickQueue) {
  Driver<Q> d(4, 3);
  d.push(2, 1, Label::in);
  CHECK(d.pop() == Entry{2, 1});
  CHECK_THROWS_AS(d.pop(), Error);
  CHECK_THROWS_AS(d.push(1, 3, Label::in), Error);
  try {
    d.push(1, 0, Label::in);
    FAIL("enqueue below the cursor must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_monotone_enqueue);
  }
}

TEST_CASE_TEMPLATE("peak length is a running maximum", Q, FixedVolumeQueue, DynamicListQueue, LazyQueue,
                   PackedListQueue, BrickQueue) {
  Driver<Q> d(8, 2);
  CHECK(d.q.peak_length() == 0);
  d.push(0, 0, Label::in);
  d.push(1, 0, Label::in);
  d.push(2, 0, Label::in);
  d.pop();
  d.push(3, 0, Label::in);
  CHECK(d.q.size() == 3);
  CHECK(d.q.peak_length() == 3);
}

TEST_CASE_TEMPLATE("remove unlinks in constant time", Q, FixedVolumeQueue, DynamicListQueue) {
  Q q(8, 4);
  SUBCASE("middle of three") {
    q.enqueue(1, 2);
    q.enqueue(2, 2);
    q.enqueue(3, 2);
    q.remove(2);
    CHECK_FALSE(q.contains(2));
    CHECK(q.dequeue_min() == Entry{1, 2});
    CHECK(q.dequeue_min() == Entry{3, 2});
    CHECK_FALSE(q.not_empty());
  }
  SUBCASE("only entry") {
    q.enqueue(5, 1);
    q.remove(5);
    CHECK_FALSE(q.not_empty());
    q.enqueue(5, 1);
    CHECK(q.dequeue_min() == Entry{5, 1});
  }
  SUBCASE("head then dequeue") {
    q.enqueue(4, 0);
    q.enqueue(6, 0);
    q.enqueue(7, 0);
    q.remove(4);
    CHECK(q.dequeue_min() == Entry{6, 0});
  }
  SUBCASE("tail then append") {
    q.enqueue(4, 0);
    q.enqueue(6, 0);
    q.remove(6);
    q.enqueue(7, 0);
    CHECK(q.dequeue_min() == Entry{4, 0});
    CHECK(q.dequeue_min() == Entry{7, 0});
  }
  SUBCASE("contains and cost") {
    for (VoxelIndex v = 0; v < 8; ++v) CHECK_FALSE(q.contains(v));
    q.enqueue(3, 2);
    CHECK(q.contains(3));
    CHECK(q.cost_of(3) == 2);
    q.remove(3);
    CHECK_FALSE(q.contains(3));
  }
  SUBCASE("errors") {
    try {
      q.remove(1);
      FAIL("remove of an absent voxel must throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_in_queue);
    }
    q.enqueue(1, 1);
    try {
      q.enqueue(1, 2);
      FAIL("double enqueue must throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::already_queued);
    }
  }
}

TEST_CASE("dynamic list reuses released elements") {
  DynamicListQueue q(100, 2);
  for (VoxelIndex v = 0; v < 10; ++v) q.enqueue(v, 0);
  for (int i = 0; i < 10; ++i) q.dequeue_min();
  for (VoxelIndex v = 10; v < 20; ++v) q.enqueue(v, 1);
  CHECK(q.allocated_elements() == 10);
}

TEST_CASE("lazy queue supersede leaves a stale entry") {
  LazyQueue q(16, 10);
  q.enqueue(5, 9, Label::out);
  CHECK(q.best_cost(5) == 9);
  q.supersede(5, 4, Label::in);
  CHECK(q.size() == 2);
  CHECK(q.best_cost(5) == 4);
  CHECK(q.best_label(5) == Label::in);

  const LazyPop first = q.dequeue_min();
  CHECK(first.entry == LabeledEntry{5, 4, Label::in});
  CHECK(first.current);
  CHECK_FALSE(q.has_current(5));

  const LazyPop second = q.dequeue_min();
  CHECK(second.entry == LabeledEntry{5, 9, Label::out});
  CHECK_FALSE(second.current);

  q.enqueue(6, 9, Label::in);
  CHECK_THROWS_AS(q.supersede(6, 9, Label::in), Error);
  CHECK_THROWS_AS(q.supersede(7, 9, Label::in), Error);
  CHECK_FALSE(q.best_cost(7).has_value());
}

TEST_CASE("packed entry word") {
  constexpr std::uint32_t w = pack_entry(0x7FFFFFFF, Label::in);
  static_assert(packed_voxel(w) == 0x7FFFFFFF);
  static_assert(packed_label(w) == Label::in);
  static_assert(packed_label(pack_entry(12, Label::out)) == Label::out);
  CHECK(w == 0xFFFFFFFFu);
}

TEST_CASE("brick chaining") {
  BrickQueue q(4);
  for (VoxelIndex v = 0; v < 255; ++v) q.enqueue(v, 0, Label::in);
  const auto bricks = q.bucket_bricks(0);
  REQUIRE(bricks.size() == 2);
  CHECK(bricks[0] == BrickOccupancy{0, 254});
  CHECK(bricks[1] == BrickOccupancy{0, 1});
  CHECK(q.bricks_in_use() == 2);
  CHECK(q.validate().empty());

  q.dequeue_min();
  CHECK(q.bucket_bricks(0)[0] == BrickOccupancy{1, 254});
  CHECK(q.validate().empty());
}

TEST_CASE("drained brick goes to the empty stack and is reused") {
  BrickQueue q(4);
  for (VoxelIndex v = 0; v < 3; ++v) q.enqueue(v, 1, Label::out);
  CHECK(q.bucket_bricks(1) == std::vector<BrickOccupancy>{{0, 3}});
  for (int i = 0; i < 3; ++i) q.dequeue_min();
  CHECK(q.bucket_bricks(1).empty());
  CHECK(q.empty_stack_size() == 1);
  CHECK(q.bricks_allocated() == 1);
  CHECK(q.validate().empty());

  q.enqueue(9, 2, Label::in);
  CHECK(q.empty_stack_size() == 0);
  CHECK(q.bricks_allocated() == 1);
  CHECK(q.brick_reuses() == 1);
  CHECK(q.brick_acquisitions() == 2);
}

TEST_CASE("backends agree with a reference FIFO model on random monotone scripts") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    VoxelIndex next_id = 0;
    const Weight max_cost = static_cast<Weight>(rng.uniform(0, 40));
    std::vector<Op> ops = random_script(rng, rng.uniform(1, 700), max_cost, next_id);

    // Replay against the model to fix pushes that would go below the last popped cost.
    ModelQueue model;
    std::vector<Entry> expected;
    Weight last = 0;
    for (Op& op : ops) {
      if (op.push) {
        op.cost = std::max(op.cost, last);
        model.push(op.voxel, op.cost);
      } else {
        expected.push_back(model.pop());
        last = expected.back().cost;
      }
    }
    const std::size_t n = next_id + 1, buckets = max_cost + 4;
    CAPTURE(round);
    CHECK(replay<FixedVolumeQueue>(ops, n, buckets) == expected);
    CHECK(replay<DynamicListQueue>(ops, n, buckets) == expected);
    CHECK(replay<LazyQueue>(ops, n, buckets) == expected);
    CHECK(replay<PackedListQueue>(ops, n, buckets) == expected);
    CHECK(replay<BrickQueue>(ops, n, buckets) == expected);
  }
}

TEST_CASE("brick layout stays valid under heavy random traffic") {
  SplitMix64 rng(99);
  BrickQueue q(6);
  Weight last = 0;
  std::size_t fresh_with_stack = 0;
  for (int i = 0; i < 20000; ++i) {
    const std::size_t stack_before = q.empty_stack_size();
    const std::size_t pool_before = q.bricks_allocated();
    if (q.size() > 0 && rng.uniform(0, 9) < 4) {
      last = q.dequeue_min().cost;
    } else {
      q.enqueue(static_cast<VoxelIndex>(i), static_cast<Weight>(rng.uniform(last, std::min<Weight>(5, last + 1))),
                Label::in);
    }
    if (q.bricks_allocated() > pool_before && stack_before > 0) ++fresh_with_stack;
    if (i % 97 == 0) REQUIRE(q.validate().empty());
  }
  CHECK(q.validate().empty());
  CHECK(fresh_with_stack == 0);
  CHECK(q.bricks_allocated() * Brick::kCapacity >= q.peak_length());
}

#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "wsift/error.hpp"
#include "wsift/ift.hpp"
#include "wsift/oracle.hpp"

using namespace wsift;

TEST_CASE("step edge costs and decisions") {
  const Volume vol({1, 1, 4}, 8, {0, 0, 9, 9});
  const OracleResult r = brute_force_costs(vol, {{0}, {3}});
  CHECK(r.best_in_cost == std::vector<Weight>{0, 0, 9, 9});
  CHECK(r.best_out_cost == std::vector<Weight>{9, 9, 0, 0});
  CHECK(r.decided_label[1] == Decision::in);
  CHECK(r.decided_label[2] == Decision::out);
}

TEST_CASE("uniform plateau is all ties") {
  const Volume vol = Volume::filled({1, 1, 5}, 8, 3);
  const OracleResult r = brute_force_costs(vol, {{0}, {4}});
  for (VoxelIndex v = 0; v < 5; ++v) {
    CHECK(r.best_in_cost[v] == 0);
    CHECK(r.best_out_cost[v] == 0);
    CHECK(r.decided_label[v] == Decision::tie);
  }
}

TEST_CASE("markers cost nothing to their own class") {
  SplitMix64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Volume vol = testing::random_volume(rng, 4);
    const MarkerSet m = testing::random_marker_set(vol.dims(), rng);
    const OracleResult r = brute_force_costs(vol, m);
    for (VoxelIndex v : m.in) CHECK(r.best_in_cost[v] == 0);
    for (VoxelIndex v : m.out) CHECK(r.best_out_cost[v] == 0);
    if (m.out.empty())
      for (Weight c : r.best_out_cost) CHECK(c == kUnreachable);
  }
}

TEST_CASE("oracle matches simple-path enumeration on tiny grids") {
  SplitMix64 rng(77);
  for (int i = 0; i < 150; ++i) {
    const Volume vol = testing::random_volume(rng, 2);
    const MarkerSet m = testing::random_marker_set(vol.dims(), rng);
    const OracleResult r = brute_force_costs(vol, m);
    CAPTURE(i);
    if (!m.in.empty()) CHECK(r.best_in_cost == testing::enumerate_minimax(vol, m.in));
    if (!m.out.empty()) CHECK(r.best_out_cost == testing::enumerate_minimax(vol, m.out));
  }
}

TEST_CASE("oracle invariants") {
  SplitMix64 rng(123);
  for (int i = 0; i < 40; ++i) {
    const Volume vol = testing::random_volume(rng, 4);
    MarkerSet m = testing::random_marker_set(vol.dims(), rng);
    const OracleResult r = brute_force_costs(vol, m);

    const OracleResult swapped = brute_force_costs(vol, {m.out, m.in});
    for (VoxelIndex v = 0; v < vol.size(); ++v) CHECK(swapped.best_cost(v) == r.best_cost(v));

    // Mirror along x: an isomorphism of the grid graph.
    const Dims d = vol.dims();
    auto mirror = [d](VoxelIndex v) {
      Coord c = coord_of(v, d);
      c.x = d.x - 1 - c.x;
      return linear_index(c, d);
    };
    std::vector<Intensity> values(vol.size());
    for (VoxelIndex v = 0; v < vol.size(); ++v) values[mirror(v)] = vol[v];
    MarkerSet mm;
    for (VoxelIndex v : m.in) mm.in.push_back(mirror(v));
    for (VoxelIndex v : m.out) mm.out.push_back(mirror(v));
    const OracleResult mr = brute_force_costs(Volume(d, 8, values), mm);
    for (VoxelIndex v = 0; v < vol.size(); ++v) {
      CHECK(mr.best_in_cost[mirror(v)] == r.best_in_cost[v]);
      CHECK(mr.best_out_cost[mirror(v)] == r.best_out_cost[v]);
    }
  }
}

TEST_CASE("check_against_engine") {
  SUBCASE("step edge agrees fully") {
    const Volume vol({1, 1, 4}, 8, {0, 0, 9, 9});
    const MarkerSet m{{0}, {3}};
    const IftResult r = run_ift(vol, m, Variant::I);
    const OracleReport rep = check_against_engine(vol, m, r.labels, r.costs);
    CHECK(rep.ok());
    CHECK(rep.ties == 0);
  }
  SUBCASE("plateau agrees on cost, all ties") {
    const Volume vol = Volume::filled({1, 1, 5}, 8, 0);
    const MarkerSet m{{0}, {4}};
    const IftResult r = run_ift(vol, m, Variant::V);
    const OracleReport rep = check_against_engine(vol, m, r.labels, r.costs);
    CHECK(rep.ok());
    CHECK(rep.ties == 5);
  }
  SUBCASE("tampered result is reported per voxel") {
    const Volume vol({1, 1, 4}, 8, {0, 0, 9, 9});
    const MarkerSet m{{0}, {3}};
    IftResult r = run_ift(vol, m, Variant::II);
    r.costs[2] = 4;
    r.labels.set(1, Label::out);
    const OracleReport rep = check_against_engine(vol, m, r.labels, r.costs);
    CHECK_FALSE(rep.ok());
    CHECK(rep.cost_mismatches == 1);
    CHECK(rep.label_mismatches == 1);
    REQUIRE(rep.diffs.size() == 2);
    CHECK(rep.diffs[0].voxel == 1);
    CHECK(rep.diffs[1].voxel == 2);
    CHECK(rep.describe(vol.dims()).find("voxel 2 (0,0,2)") != std::string::npos);
  }
  SUBCASE("random 3x3x3 volumes, every variant") {
    SplitMix64 rng(2718);
    for (int seed = 0; seed < 100; ++seed) {
      std::vector<Intensity> values(27);
      for (Intensity& v : values) v = static_cast<Intensity>(rng.uniform(0, 255));
      const Volume vol({3, 3, 3}, 8, values);
      const std::size_t in = rng.uniform(1, 3), out = rng.uniform(1, 3);
      const MarkerSet m = random_markers(vol.dims(), in, out, rng);
      for (Variant v : kAllVariants) {
        const IftResult r = run_ift(vol, m, v);
        const OracleReport rep = check_against_engine(vol, m, r.labels, r.costs);
        CHECK_MESSAGE(rep.ok(), rep.describe(vol.dims()));
      }
    }
  }
}

TEST_CASE("oracle size cap") {
  try {
    brute_force_costs(Volume::filled({5, 5, 3}, 8, 0), {{0}, {1}});
    FAIL("75 voxels must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::oracle_too_large);
  }
  CHECK_NOTHROW(brute_force_costs(Volume::filled({4, 4, 4}, 8, 0), {{0}, {1}}));
}
